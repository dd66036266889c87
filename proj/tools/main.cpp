// lpadecomp: command-line front end.
//
// Exit codes: 0 success or a "yes" verdict, 1 a "no" verdict from a query
// command, 2 input/usage/resource errors, 3 internal invariant violations.

#include "lpadecomp/boundary.hpp"
#include "lpadecomp/decomp.hpp"
#include "lpadecomp/errors.hpp"
#include "lpadecomp/expr.hpp"
#include "lpadecomp/io.hpp"
#include "lpadecomp/lattice.hpp"
#include "lpadecomp/report.hpp"
#include "lpadecomp/topology.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace lpadecomp;

namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kInputError = 2;
constexpr int kInternalError = 3;

VertexSet parse_set(const Graph& g, const std::string& text) {
    std::vector<std::string> ids;
    std::string cur;
    for (char c : text + ",") {
        if (c == ',') {
            if (!cur.empty())
                ids.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    return g.make_set(ids);
}

struct Options {
    std::string file;
    AnalysisConfig cfg;
    bool json = false;
    bool text = false;
    bool dot = false;
    bool hasse = false;
    bool explain = false;
    std::string H, S, H1, H2;
    std::string expr;
    std::string ideal_H, ideal_S;
    bool has_ideal_H = false;
    std::string field = "q";
};

HSPair require_pair(const Graph& g, const std::string& H, const std::string& S, const char* flag) {
    HSPair p{parse_set(g, H), parse_set(g, S)};
    if (!is_hereditary_saturated(g, p.H))
        throw InputError(std::string(flag) + ": " + g.format_set(p.H) + " is not hereditary and saturated");
    if (!is_valid_pair(g, p))
        throw InputError(std::string(flag) + ": " + g.format_set(p.S) + " is not a subset of B_H = " +
                         g.format_set(breaking_vertices(g, p.H)));
    return p;
}

int cmd_analyze(const Options& o) {
    const Graph g = load_graph(o.file);
    const auto report = analyze(g, o.cfg);
    if (o.json)
        std::cout << report.dump(2) << "\n";
    else
        std::cout << render_text(report);
    return kYes;
}

int cmd_lattice(const Options& o) {
    const Graph g = load_graph(o.file);
    if (o.dot) {
        std::cout << hasse_dot(g, o.cfg.caps);
        return kYes;
    }
    const PairLattice lat(g, o.cfg.caps);
    std::cout << "elements (" << lat.size() << "):\n";
    for (std::size_t i = 0; i < lat.size(); ++i)
        std::cout << "  " << i << "  " << format_pair(g, lat.elements()[i]) << "\n";
    std::cout << "covering relations:\n";
    for (const auto& [a, b] : lat.covering_relation())
        std::cout << "  " << a << " < " << b << "\n";
    return kYes;
}

int cmd_dot(const Options& o) {
    const Graph g = load_graph(o.file);
    std::cout << (o.hasse ? hasse_dot(g, o.cfg.caps) : graph_dot(g));
    return kYes;
}

int cmd_clopen(const Options& o) {
    const Graph g = load_graph(o.file);
    const HSPair p = require_pair(g, o.H, o.S, "--H/--S");
    const ClopenVerdict v = is_clopen(g, p);
    if (v.clopen) {
        std::cout << format_pair(g, p) << ": clopen\n";
        std::cout << "complement: " << format_pair(g, complement_pair(g, p)) << "\n";
        return kYes;
    }
    std::cout << format_pair(g, p) << ": not clopen, " << to_string(v.failing) << " fails, ";
    if (v.cycle)
        std::cout << "cycle " << format_path(g, *v.cycle) << "\n";
    else
        std::cout << "vertex " << g.vertex_name(*v.vertex) << "\n";
    return kNo;
}

int cmd_decompose(const Options& o) {
    const Graph g = load_graph(o.file);
    const DecompVerdict v = is_decomposable(g, o.cfg.caps);
    if (v.decomposable)
        std::cout << "decomposable: witness " << format_pair(g, *v.witness) << ", complement "
                  << format_pair(g, *v.complement) << "\n";
    else
        std::cout << "not decomposable\n";
    if (o.explain) {
        for (const VertexSet& H : enumerate_hs(g, o.cfg.caps)) {
            if (H.empty() || H.is_full())
                continue;
            const ConditionResult a = condition_a(g, H);
            const ConditionResult b = condition_b(g, H);
            std::cout << "  H=" << g.format_set(H) << " B_H=" << g.format_set(breaking_vertices(g, H)) << ": ";
            if (a.holds && b.holds)
                std::cout << "conditions (a) and (b) hold\n";
            else if (!a.holds)
                std::cout << "condition (a) fails, cycle " << format_path(g, *a.cycle) << "\n";
            else
                std::cout << "condition (b) fails, vertex " << g.vertex_name(*b.vertex) << "\n";
        }
        const CompatibleSplit t = compatible_split_check(g, o.cfg.caps);
        if (t.witness) {
            const auto& [H1, H2] = *t.witness;
            std::cout << "compatible-path pair: H1=" << g.format_set(H1) << " H2=" << g.format_set(H2) << "\n";
            const PairCondition naive = naive_AN_check(g, H1, H2);
            std::cout << "naive path-count condition: " << (naive.holds ? "holds" : "fails");
            if (naive.offending)
                std::cout << " at " << g.vertex_name(*naive.offending);
            std::cout << "\n";
        } else {
            std::cout << "compatible-path pair: none\n";
        }
    }
    return v.decomposable ? kYes : kNo;
}

int cmd_compatible(const Options& o) {
    const Graph g = load_graph(o.file);
    const VertexSet H1 = parse_set(g, o.H1);
    const VertexSet H2 = parse_set(g, o.H2);
    for (const VertexSet* H : {&H1, &H2})
        if (H->empty() || !is_hereditary_saturated(g, *H))
            throw InputError(g.format_set(*H) + " is not a nonempty hereditary saturated set");
    if (H1.intersects(H2))
        throw InputError("--H1 and --H2 must be disjoint");
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (H1.contains(v) || H2.contains(v))
            continue;
        const CompatCount c1 = compatible_count(g, v, H1, o.cfg.compat_samples);
        const CompatCount c2 = compatible_count(g, v, H2, o.cfg.compat_samples);
        std::cout << g.vertex_name(v) << ": " << c1.count.to_string() << " + " << c2.count.to_string() << " = "
                  << (c1.count + c2.count).to_string();
        std::vector<FinitePath> samples = c1.samples;
        samples.insert(samples.end(), c2.samples.begin(), c2.samples.end());
        for (std::size_t i = 0; i < samples.size(); ++i)
            std::cout << (i ? ", " : "  [") << format_path(g, samples[i]) << (i + 1 == samples.size() ? "]" : "");
        std::cout << "\n";
    }
    const PairCondition pc = compatible_pair_condition(g, H1, H2);
    const PairCondition naive = naive_AN_check(g, H1, H2);
    std::cout << "compatible-path condition: " << (pc.holds ? "holds" : "fails");
    if (pc.offending)
        std::cout << " at " << g.vertex_name(*pc.offending);
    std::cout << "\nnaive path-count condition: " << (naive.holds ? "holds" : "fails");
    if (naive.offending)
        std::cout << " at " << g.vertex_name(*naive.offending);
    std::cout << "\n";
    return pc.holds ? kYes : kNo;
}

int cmd_algebra(const Options& o) {
    const Graph g = load_graph(o.file);
    const SteinbergAlgebra alg(g, parse_field(o.field));
    std::optional<VertexSet> H;
    if (!o.H.empty())
        H = parse_set(g, o.H);
    const AlgebraElement a = parse_expression(alg, o.expr, H);
    if (a.empty()) {
        std::cout << "0 (zero element)\n";
    } else {
        std::cout << alg.format(a) << "\n";
        std::cout << "degrees:";
        for (auto d : alg.degrees(a))
            std::cout << " " << d;
        std::cout << "\n";
    }
    if (!o.has_ideal_H)
        return kYes;
    const HSPair p = require_pair(g, o.ideal_H, o.ideal_S, "--ideal-H/--ideal-S");
    const bool in = alg.ideal_membership(a, p);
    std::cout << (in ? "in" : "not in") << " the ideal of " << format_pair(g, p) << "\n";
    return in ? kYes : kNo;
}

int cmd_selfcheck(const Options& o) {
    const Graph g = load_graph(o.file);
    const VerificationReport rep = selfcheck(g, o.cfg);
    for (const CheckResult& c : rep.checks) {
        std::cout << (c.passed ? "ok   " : "FAIL ") << c.name;
        if (!c.detail.empty())
            std::cout << ": " << c.detail;
        std::cout << "\n";
    }
    return rep.passed() ? kYes : kNo;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decomposability of Leavitt path algebras of finite bundle-graphs"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--max-vertices", o.cfg.caps.max_vertices, "Vertex cap for enumeration")->capture_default_str();
    app.add_option("--max-breaking", o.cfg.caps.max_breaking, "Cap on |B_H| for pair enumeration")
        ->capture_default_str();
    app.add_option("--omega-samples", o.cfg.omega_samples, "Indices sampled per omega bundle")->capture_default_str();
    app.add_option("--compat-samples", o.cfg.compat_samples, "Example paths per compatible count")
        ->capture_default_str();

    auto file_arg = [&](CLI::App* sub) { sub->add_option("file", o.file, "Graph JSON document")->required(); };

    auto* analyze_cmd = app.add_subcommand("analyze", "Full analysis report");
    file_arg(analyze_cmd);
    auto* json_flag = analyze_cmd->add_flag("--json", o.json, "JSON report (report-v1)");
    analyze_cmd->add_flag("--text", o.text, "Text report (default)")->excludes(json_flag);

    auto* lattice_cmd = app.add_subcommand("lattice", "List the (H,S) lattice");
    file_arg(lattice_cmd);
    lattice_cmd->add_flag("--dot", o.dot, "Hasse diagram in DOT");

    auto* dot_cmd = app.add_subcommand("dot", "DOT export of the graph");
    file_arg(dot_cmd);
    dot_cmd->add_flag("--hasse", o.hasse, "Export the Hasse diagram instead");

    auto* clopen_cmd = app.add_subcommand("clopen", "Is U_{H,S} clopen? (exit 1 if not)");
    file_arg(clopen_cmd);
    clopen_cmd->add_option("--H", o.H, "Comma-separated vertices")->required();
    clopen_cmd->add_option("--S", o.S, "Comma-separated breaking vertices");

    auto* decompose_cmd = app.add_subcommand("decompose", "Decomposability verdict (exit 1 if indecomposable)");
    file_arg(decompose_cmd);
    decompose_cmd->add_flag("--explain", o.explain, "Show witnesses and failing conditions");

    auto* compatible_cmd =
        app.add_subcommand("compatible", "Compatible-path counts for a pair (exit 1 if the condition fails)");
    file_arg(compatible_cmd);
    compatible_cmd->add_option("--H1", o.H1)->required();
    compatible_cmd->add_option("--H2", o.H2)->required();

    auto* algebra_cmd = app.add_subcommand("algebra", "Evaluate an expression in the Steinberg algebra");
    file_arg(algebra_cmd);
    algebra_cmd->add_option("--expr", o.expr, "Expression, e.g. \"e* e - u\"")->required();
    algebra_cmd->add_option("--H", o.H, "Set H for vh(...)");
    auto* ideal_h = algebra_cmd->add_option("--ideal-H", o.ideal_H, "Test membership in the ideal of (H,S)");
    algebra_cmd->add_option("--ideal-S", o.ideal_S)->needs(ideal_h);
    algebra_cmd->add_option("--field", o.field, "q or p:<prime>")->capture_default_str();

    auto* selfcheck_cmd = app.add_subcommand("selfcheck", "Run every invariant suite (exit 1 on failure)");
    file_arg(selfcheck_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return kInputError;
    }
    o.has_ideal_H = ideal_h->count() > 0;

    try {
        if (*analyze_cmd)
            return cmd_analyze(o);
        if (*lattice_cmd)
            return cmd_lattice(o);
        if (*dot_cmd)
            return cmd_dot(o);
        if (*clopen_cmd)
            return cmd_clopen(o);
        if (*decompose_cmd)
            return cmd_decompose(o);
        if (*compatible_cmd)
            return cmd_compatible(o);
        if (*algebra_cmd)
            return cmd_algebra(o);
        if (*selfcheck_cmd)
            return cmd_selfcheck(o);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const ContractError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kInputError;
    } catch (const InvariantViolation& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternalError;
    }
    return kInputError;
}
