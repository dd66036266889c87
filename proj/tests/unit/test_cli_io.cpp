#include "fixtures.hpp"

#include "lpadecomp/errors.hpp"
#include "lpadecomp/expr.hpp"
#include "lpadecomp/io.hpp"
#include "lpadecomp/lattice.hpp"
#include "lpadecomp/report.hpp"

#include <doctest.h>

#include <filesystem>

using namespace lpadecomp;
using namespace fixtures;

namespace {

std::filesystem::path fixture(const char* name) { return std::filesystem::path(LPADECOMP_FIXTURES) / name; }

std::string error_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const InputError& e) {
        return e.what();
    }
    return {};
}

std::size_t count(const std::string& hay, const std::string& needle) {
    std::size_t n = 0;
    for (auto at = hay.find(needle); at != std::string::npos; at = hay.find(needle, at + 1))
        ++n;
    return n;
}

} // namespace

TEST_CASE("fixture files load to the reference graphs") {
    const Graph c = load_graph(fixture("graph_c.json"));
    CHECK(c.vertex_count() == 3);
    CHECK(c.bundles().size() == 2);
    CHECK(c == graph_c());
    CHECK(load_graph(fixture("graph_a.json")) == graph_a());
    CHECK(load_graph(fixture("graph_b.json")) == graph_b());
    CHECK(load_graph(fixture("graph_c3.json")) == graph_c3());
    CHECK(load_graph(fixture("graph_d.json")) == graph_d());
    CHECK(load_graph(fixture("graph_e2.json")) == graph_e2());
}

TEST_CASE("malformed inputs are rejected with a located message") {
    CHECK(error_of([] { load_graph(fixture("bad_zero.json")); }).find("bundle 'f'") != std::string::npos);
    CHECK(error_of([] { load_graph(fixture("bad_dangling.json")); }).find("'x'") != std::string::npos);
    CHECK(error_of([] { load_graph(fixture("bad_syntax.json")); }).find("line 4") != std::string::npos);
    CHECK(error_of([] { load_graph(fixture("bad_field.json")); }).find("unknown field 'name'") != std::string::npos);
    CHECK_THROWS_AS(load_graph(fixture("missing.json")), InputError);
    CHECK_THROWS_AS(parse_graph(R"({"vertices": ["u", "u"], "bundles": []})"), InputError);
    CHECK_THROWS_AS(parse_graph(R"({"vertices": ["u"], "bundles": [{"id": "u", "source": "u", "target": "u", "multiplicity": 1}]})"),
                    InputError);
    CHECK_THROWS_AS(parse_graph(R"({"vertices": ["u"], "bundles": [{"id": "e", "source": "u", "target": "u", "multiplicity": "many"}]})"),
                    InputError);
    CHECK_THROWS_AS(parse_graph(R"({"vertices": ["u"], "bundles": [{"id": "e", "source": "u", "target": "u", "multiplicity": -2}]})"),
                    InputError);
    CHECK(parse_graph(R"({"vertices": ["v"]})") == graph_d());
    CHECK_THROWS_AS(parse_graph(R"({"bundles": []})"), InputError);
    CHECK_THROWS_AS(parse_graph("[]"), InputError);
}

TEST_CASE("serialize then parse is the identity") {
    for (const Graph& g : corpus())
        CHECK(parse_graph(serialize_graph(g)) == g);
    for (const Graph& g : random_corpus(99, 200))
        CHECK(parse_graph(serialize_graph(g)) == g);
    const std::string s = serialize_graph(graph_b());
    CHECK(s.find("\"omega\"") != std::string::npos);
    CHECK(serialize_graph(parse_graph(s)) == s);
}

TEST_CASE("reports are deterministic and self-consistent") {
    for (const Graph& g : corpus()) {
        const auto r1 = analyze(g), r2 = analyze(g);
        CHECK(r1.dump() == r2.dump());
        CHECK(r1["schema"] == kReportSchema);
        CHECK(r1["tool_version"] == kToolVersion);
        CHECK(r1["decomposition"]["routes_agree"] == true);
        CHECK(render_text(r1) == render_text(r2));
    }
    const auto rc = analyze(graph_c());
    CHECK(rc["decomposition"]["decomposable"] == true);
    CHECK(rc["decomposition"]["lattice_complement"]["witness"]["H"] == nlohmann::ordered_json::array({"u"}));
    CHECK(rc["decomposition"]["compatible_split"]["H2"] == nlohmann::ordered_json::array({"w"}));
    CHECK(rc["lattice"]["size"] == 6);
    const auto ra = analyze(graph_a());
    CHECK(ra["decomposition"]["decomposable"] == false);
    for (const Graph& g : random_corpus(5, 40)) {
        const auto rep = analyze(g);
        CHECK(rep.dump() == analyze(g).dump());
        CHECK(rep["decomposition"]["routes_agree"] == true);
    }
}

TEST_CASE("selfcheck passes on the corpus") {
    for (const Graph& g : corpus()) {
        const auto rep = selfcheck(g);
        for (const auto& chk : rep.checks)
            CHECK_MESSAGE(chk.passed, chk.name << ": " << chk.detail);
    }
}

TEST_CASE("dot output") {
    CHECK(graph_dot(graph_b()).find("∞") != std::string::npos);
    CHECK(graph_dot(graph_a()).rfind("digraph E {", 0) == 0);
    const std::string hc = hasse_dot(graph_c());
    CHECK(count(hc, "[label=") == 6);
    CHECK(count(hc, " -> ") == 7);
    const std::string hd = hasse_dot(graph_d());
    CHECK(count(hd, "[label=") == 2);
    CHECK(count(hd, " -> ") == 1);
}

TEST_CASE("expression parser") {
    const Graph a = graph_a(), c = graph_c();
    const SteinbergAlgebra A(a), C(c);
    const EdgeRef e = parse_edge(a, "e"), f = parse_edge(a, "f");

    CHECK(A.is_zero(parse_expression(A, "e* e - u")));
    CHECK(A.is_zero(parse_expression(A, "u - e e* - f f*")));
    CHECK(parse_expression(A, "e f") == A.product(A.edge(e), A.edge(f)));
    CHECK(parse_expression(A, "-2 e + 1/2 f*") ==
          A.add(A.scale(A.edge(e), -2), A.scale(A.ghost(f), Scalar(1, 2))));
    CHECK(parse_expression(A, "u*") == A.vertex(a.vertex("u")));
    CHECK(parse_expression(A, "(u + v) e") == A.product(A.add(A.vertex(0), A.vertex(1)), A.edge(e)));
    CHECK(parse_expression(A, "3 e") == A.scale(A.edge(e), 3));

    CHECK(parse_expression(C, "a[4]* a[4]") == C.vertex(c.vertex("u")));
    CHECK(C.is_zero(parse_expression(C, "a[4]* a[5]")));
    CHECK(parse_expression(C, "vh(p)", c.make_set({"u"})) == C.vertex_relative(c.vertex("p"), c.make_set({"u"})));

    CHECK(error_of([&] { parse_expression(A, "u + x"); }) == "expression: unknown vertex or bundle 'x' at column 5");
    CHECK(error_of([&] { parse_expression(A, "e[1]"); }).find("column 1") != std::string::npos);
    CHECK(error_of([&] { parse_expression(A, "u v["); }).find("expected a number") != std::string::npos);
    CHECK(error_of([&] { parse_expression(A, "(u"); }).find("expected ')'") != std::string::npos);
    CHECK(error_of([&] { parse_expression(A, "1/0 u"); }).find("zero denominator") != std::string::npos);
    CHECK(error_of([&] { parse_expression(A, "u)"); }).find("unexpected ')'") != std::string::npos);
    CHECK_THROWS_AS(parse_expression(C, "vh(p)"), InputError);
    CHECK_THROWS_AS(parse_expression(A, ""), InputError);

    const SteinbergAlgebra A5(a, Field::prime(5));
    CHECK(parse_expression(A5, "1/2 u") == A5.scale(A5.vertex(0), 3));
    CHECK(A5.is_zero(parse_expression(A5, "5 u")));
    CHECK_THROWS_AS(parse_expression(A5, "1/5 u"), InputError);
}
