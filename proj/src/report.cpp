#include "lpadecomp/report.hpp"

#include "lpadecomp/boundary.hpp"
#include "lpadecomp/decomp.hpp"
#include "lpadecomp/errors.hpp"
#include "lpadecomp/lattice.hpp"
#include "lpadecomp/steinberg.hpp"
#include "lpadecomp/topology.hpp"

#include <sstream>

namespace lpadecomp {

using nlohmann::ordered_json;

namespace {

ordered_json names(const Graph& g, const VertexSet& s) {
    ordered_json out = ordered_json::array();
    for (VertexId v : s.members())
        out.push_back(g.vertex_name(v));
    return out;
}

ordered_json pair_json(const Graph& g, const HSPair& p) {
    ordered_json j;
    j["H"] = names(g, p.H);
    j["S"] = names(g, p.S);
    return j;
}

ordered_json multiplicity_json(const Multiplicity& m) {
    if (m.is_omega())
        return "omega";
    return m.value();
}

ordered_json checks_json(const VerificationReport& rep) {
    ordered_json out = ordered_json::array();
    for (const CheckResult& c : rep.checks) {
        ordered_json j;
        j["name"] = c.name;
        j["passed"] = c.passed;
        j["detail"] = c.detail;
        out.push_back(std::move(j));
    }
    return out;
}

ordered_json verdict_json(const Graph& g, const DecompVerdict& v) {
    ordered_json j;
    j["decomposable"] = v.decomposable;
    j["witness"] = v.witness ? pair_json(g, *v.witness) : ordered_json(nullptr);
    j["complement"] = v.complement ? pair_json(g, *v.complement) : ordered_json(nullptr);
    return j;
}

} // namespace

ordered_json analyze(const Graph& g, const AnalysisConfig& cfg) {
    ordered_json r;
    r["schema"] = kReportSchema;
    r["tool_version"] = kToolVersion;
    r["config"] = {{"max_vertices", cfg.caps.max_vertices},
                   {"max_breaking", cfg.caps.max_breaking},
                   {"omega_samples", cfg.omega_samples},
                   {"compat_samples", cfg.compat_samples}};

    std::size_t omega_bundles = 0;
    for (const Bundle& b : g.bundles())
        omega_bundles += b.multiplicity.is_omega() ? 1 : 0;
    r["graph"] = {{"vertices", g.vertex_count()}, {"bundles", g.bundles().size()}, {"omega_bundles", omega_bundles}};

    ordered_json vertices = ordered_json::array();
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        vertices.push_back({{"id", g.vertex_name(v)}, {"kind", to_string(g.kind(v))}});
    r["vertices"] = std::move(vertices);

    const auto hs = enumerate_hs(g, cfg.caps);
    ordered_json hs_json = ordered_json::array();
    for (const VertexSet& H : hs)
        hs_json.push_back(names(g, H));
    r["hereditary_saturated"] = std::move(hs_json);

    ordered_json pairs = ordered_json::array();
    for (const HSPair& p : enumerate_TE(g, cfg.caps)) {
        ordered_json j = pair_json(g, p);
        j["B_H"] = names(g, breaking_vertices(g, p.H));
        const ClopenVerdict cv = is_clopen(g, p);
        j["clopen"] = cv.clopen;
        j["failing"] = cv.clopen ? ordered_json(nullptr) : ordered_json(to_string(cv.failing));
        if (cv.cycle)
            j["witness"] = format_path(g, *cv.cycle);
        else if (cv.vertex)
            j["witness"] = g.vertex_name(*cv.vertex);
        else
            j["witness"] = nullptr;
        pairs.push_back(std::move(j));
    }
    r["pairs"] = std::move(pairs);

    const DecompVerdict by_lattice = is_decomposable(g, cfg.caps);
    const DecompVerdict byclopen = decomposable_by_clopen(g, cfg.caps);
    const CompatibleSplit by_split = compatible_split_check(g, cfg.caps);
    ordered_json dec;
    dec["decomposable"] = by_lattice.decomposable;
    dec["lattice_complement"] = verdict_json(g, by_lattice);
    dec["clopen"] = verdict_json(g, byclopen);
    ordered_json split;
    split["decomposable"] = by_split.holds;
    split["H1"] = by_split.witness ? names(g, by_split.witness->first) : ordered_json(nullptr);
    split["H2"] = by_split.witness ? names(g, by_split.witness->second) : ordered_json(nullptr);
    dec["compatible_split"] = std::move(split);
    dec["routes_agree"] = by_lattice.decomposable == byclopen.decomposable && by_lattice.decomposable == by_split.holds;
    r["decomposition"] = std::move(dec);

    ordered_json compat = ordered_json::array();
    for (const VertexSet& H : hs) {
        if (H.empty() || H.is_full())
            continue;
        ordered_json rows = ordered_json::array();
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            if (H.contains(v))
                continue;
            const CompatCount c = compatible_count(g, v, H, cfg.compat_samples);
            ordered_json samples = ordered_json::array();
            for (const FinitePath& p : c.samples)
                samples.push_back(format_path(g, p));
            rows.push_back({{"vertex", g.vertex_name(v)},
                            {"count", multiplicity_json(c.count)},
                            {"property_P", c.count.is_omega()},
                            {"samples", std::move(samples)}});
        }
        compat.push_back({{"H", names(g, H)}, {"rows", std::move(rows)}});
    }
    r["compatible_paths"] = std::move(compat);

    if (by_split.witness) {
        const auto& [H1, H2] = *by_split.witness;
        const PairCondition naive = naive_AN_check(g, H1, H2);
        const PairCondition corrected = compatible_pair_condition(g, H1, H2);
        ordered_json n;
        n["H1"] = names(g, H1);
        n["H2"] = names(g, H2);
        n["naive_holds"] = naive.holds;
        n["offending"] = naive.offending ? ordered_json(g.vertex_name(*naive.offending)) : ordered_json(nullptr);
        n["compatible_holds"] = corrected.holds;
        r["naive_an"] = std::move(n);
    } else {
        r["naive_an"] = nullptr;
    }

    const PairLattice lat(g, cfg.caps);
    ordered_json lattice;
    lattice["size"] = lat.size();
    ordered_json covers = ordered_json::array();
    for (const auto& [a, b] : lat.covering_relation())
        covers.push_back({a, b});
    lattice["covering"] = std::move(covers);
    lattice["checks"] = checks_json(verify_lattice_iso(g, cfg.caps));
    r["lattice"] = std::move(lattice);
    return r;
}

namespace {

std::string set_text(const ordered_json& arr) {
    std::string s = "{";
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (i)
            s += ",";
        s += arr[i].get<std::string>();
    }
    return s + "}";
}

std::string pair_text(const ordered_json& p) { return "H=" + set_text(p["H"]) + ";S=" + set_text(p["S"]); }

std::string scalar_text(const ordered_json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

} // namespace

std::string render_text(const ordered_json& r) {
    std::ostringstream out;
    const auto& gj = r["graph"];
    out << "graph: " << gj["vertices"].get<std::size_t>() << " vertices, " << gj["bundles"].get<std::size_t>()
        << " bundles (" << gj["omega_bundles"].get<std::size_t>() << " omega)\n";
    out << "vertices:\n";
    for (const auto& v : r["vertices"])
        out << "  " << v["id"].get<std::string>() << "  " << v["kind"].get<std::string>() << "\n";
    out << "hereditary saturated sets:";
    for (const auto& h : r["hereditary_saturated"])
        out << " " << set_text(h);
    out << "\n";

    out << "pairs (" << r["pairs"].size() << "):\n";
    for (const auto& p : r["pairs"]) {
        out << "  " << pair_text(p) << "  B_H=" << set_text(p["B_H"]) << "  ";
        if (p["clopen"].get<bool>())
            out << "clopen\n";
        else
            out << "not clopen (" << p["failing"].get<std::string>() << ", " << p["witness"].get<std::string>()
                << ")\n";
    }

    const auto& d = r["decomposition"];
    out << "decomposable: " << (d["decomposable"].get<bool>() ? "yes" : "no") << "\n";
    if (!d["lattice_complement"]["witness"].is_null())
        out << "  witness " << pair_text(d["lattice_complement"]["witness"]) << ", complement "
            << pair_text(d["lattice_complement"]["complement"]) << "\n";
    if (!d["compatible_split"]["H1"].is_null())
        out << "  compatible-path pair H1=" << set_text(d["compatible_split"]["H1"]) << " H2=" << set_text(d["compatible_split"]["H2"])
            << "\n";
    out << "  routes agree: " << (d["routes_agree"].get<bool>() ? "yes" : "no") << "\n";

    if (!r["compatible_paths"].empty()) {
        out << "compatible paths:\n";
        for (const auto& block : r["compatible_paths"]) {
            out << "  H=" << set_text(block["H"]) << ":";
            for (const auto& row : block["rows"])
                out << " " << row["vertex"].get<std::string>() << "=" << scalar_text(row["count"]);
            out << "\n";
        }
    }
    if (!r["naive_an"].is_null()) {
        const auto& n = r["naive_an"];
        out << "naive path-count condition for H1=" << set_text(n["H1"]) << " H2=" << set_text(n["H2"]) << ": "
            << (n["naive_holds"].get<bool>() ? "holds" : "fails");
        if (!n["offending"].is_null())
            out << " at " << n["offending"].get<std::string>();
        out << "\n";
    }
    const auto& lat = r["lattice"];
    out << "lattice: " << lat["size"].get<std::size_t>() << " elements, " << lat["covering"].size()
        << " covering pairs\n";
    for (const auto& c : lat["checks"])
        out << "  " << (c["passed"].get<bool>() ? "ok   " : "FAIL ") << c["name"].get<std::string>() << "\n";
    return out.str();
}

// self-check

namespace {

// A small family of algebra elements used to exercise splits and
// normalization: all vertices, edges, ghosts and edge-ghost products.
std::vector<AlgebraElement> generator_sample(const SteinbergAlgebra& alg) {
    const Graph& g = alg.graph();
    std::vector<AlgebraElement> out;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        out.push_back(alg.vertex(v));
    for (BundleId b = 0; b < g.bundles().size(); ++b) {
        const EdgeRef e{b, 0};
        out.push_back(alg.edge(e));
        out.push_back(alg.ghost(e));
        out.push_back(alg.product(alg.edge(e), alg.ghost(e)));
    }
    return out;
}

} // namespace

VerificationReport selfcheck(const Graph& g, const AnalysisConfig& cfg) {
    VerificationReport rep;
    rep.append(verify_lattice_iso(g, cfg.caps));

    const auto pairs = enumerate_TE(g, cfg.caps);
    const auto family = canonical_family(g);
    const std::size_t depth = g.vertex_count() + 1;

    {
        std::string detail;
        for (const HSPair& p : pairs)
            if (detail.empty() && !clopen_breaking_check(g, p))
                detail = format_pair(g, p);
        rep.add("clopen_implies_S_is_B_H", detail.empty(), detail);
    }
    {
        const DecompVerdict a = is_decomposable(g, cfg.caps);
        const DecompVerdict b = decomposable_by_clopen(g, cfg.caps);
        const CompatibleSplit c = compatible_split_check(g, cfg.caps);
        const bool ok = a.decomposable == b.decomposable && a.decomposable == c.holds;
        rep.add("decomposability_routes_agree", ok,
                ok ? "" : std::string("lattice_complement=") + (a.decomposable ? "yes" : "no") +
                              " clopen=" + (b.decomposable ? "yes" : "no") + " compatible_split=" + (c.holds ? "yes" : "no"));
    }
    {
        std::string detail;
        for (const HSPair& p : pairs) {
            if (!detail.empty() || !is_clopen(g, p).clopen)
                continue;
            const HSPair q = complement_pair(g, p);
            if (complement_pair(g, q) != p)
                detail = "not an involution at " + format_pair(g, p);
            for (const BoundaryPath& x : family)
                if (detail.empty() && membership(g, p, x) == membership(g, q, x))
                    detail = format_pair(g, p) + " at " + format_boundary(g, x);
        }
        rep.add("complement_partition", detail.empty(), detail);
    }
    {
        std::string detail;
        for (const HSPair& p : pairs)
            for (const BoundaryPath& x : family)
                if (detail.empty() &&
                    membership(g, p, x) != brute_membership(g, p, x, 2 * x.length().value_or(depth) + 2 * depth))
                    detail = format_pair(g, p) + " at " + format_boundary(g, x);
        rep.add("membership_oracle", detail.empty(), detail);
    }
    {
        // Cylinders Z(v) and Z(e), plus Z(v \ {e}) at infinite emitters.
        std::vector<Cylinder> cylinders;
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            cylinders.push_back(Cylinder{FinitePath{v, {}}, {}});
            for (BundleId b : g.out_bundles(v)) {
                cylinders.push_back(Cylinder{edge_path(g, EdgeRef{b, 0}), {}});
                if (g.is_infinite_emitter(v))
                    cylinders.push_back(Cylinder{FinitePath{v, {}}, {EdgeRef{b, 0}}});
            }
        }
        std::string detail;
        for (const HSPair& p : pairs)
            for (const Cylinder& c : cylinders) {
                if (!detail.empty())
                    break;
                const InvariantOpen u = InvariantOpen::single(p);
                if (cylinder_subset(g, c, u) != brute_cylinder_subset(g, c, u, depth) ||
                    cylinder_disjoint(g, c, p) != brute_cylinder_disjoint(g, c, p, depth))
                    detail = format_pair(g, p) + " at Z(" + format_path(g, c.base) + ")";
            }
        rep.add("cylinder_oracle", detail.empty(), detail);
    }

    rep.append(verify_relations(g, cfg.omega_samples));

    const SteinbergAlgebra alg(g);
    {
        std::string detail;
        for (const HSPair& p : pairs) {
            for (VertexId v : p.H.members())
                if (detail.empty() && !alg.ideal_membership(alg.vertex(v), p))
                    detail = g.vertex_name(v) + " for " + format_pair(g, p);
            for (VertexId w : p.S.members())
                if (detail.empty() && !alg.ideal_membership(alg.vertex_relative(w, p.H), p))
                    detail = "vh(" + g.vertex_name(w) + ") for " + format_pair(g, p);
        }
        rep.add("generator_containment", detail.empty(), detail);
    }
    {
        const auto sample = generator_sample(alg);
        std::string detail;
        for (const AlgebraElement& f : sample) {
            const AlgebraElement n = alg.normalize(f);
            if (!alg.equal(alg.normalize(n), n) || !(alg.normalize(n) == n))
                detail = "normalize not idempotent on " + alg.format(f);
            for (const BoundaryPath& x : family)
                if (detail.empty() && alg.eval(f, GroupoidPoint{x, 0, x}) != alg.eval(n, GroupoidPoint{x, 0, x}))
                    detail = alg.format(f) + " at " + format_boundary(g, x);
            if (!detail.empty())
                break;
        }
        rep.add("normalize_faithful", detail.empty(), detail);

        detail.clear();
        for (const HSPair& p : pairs) {
            if (!detail.empty() || !is_clopen(g, p).clopen)
                continue;
            const HSPair q = complement_pair(g, p);
            std::vector<std::pair<AlgebraElement, AlgebraElement>> parts;
            for (const AlgebraElement& f : sample) {
                auto [f1, f2] = alg.split_element(f, p);
                if (!alg.equal(alg.add(f1, f2), f) || !alg.ideal_membership(f1, p) || !alg.ideal_membership(f2, q))
                    detail = alg.format(f) + " over " + format_pair(g, p);
                parts.emplace_back(std::move(f1), std::move(f2));
                if (!detail.empty())
                    break;
            }
            for (std::size_t i = 0; i < parts.size() && detail.empty(); ++i)
                for (std::size_t j = 0; j < parts.size() && detail.empty(); ++j)
                    if (!alg.is_zero(alg.product(parts[i].first, parts[j].second)))
                        detail = "f1*g2 nonzero over " + format_pair(g, p);
        }
        rep.add("direct_sum_split", detail.empty(), detail);
    }
    return rep;
}

} // namespace lpadecomp
