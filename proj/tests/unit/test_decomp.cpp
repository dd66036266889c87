#include "fixtures.hpp"
#include "oracles.hpp"

#include "lpadecomp/boundary.hpp"
#include "lpadecomp/decomp.hpp"
#include "lpadecomp/errors.hpp"
#include "lpadecomp/lattice.hpp"
#include "lpadecomp/topology.hpp"

#include <doctest.h>

using namespace lpadecomp;
using namespace fixtures;

namespace {

VertexSet set_of(const Graph& g, std::initializer_list<const char*> ids) {
    return g.make_set(std::vector<std::string>(ids.begin(), ids.end()));
}

HSPair pair_of(const Graph& g, std::initializer_list<const char*> H, std::initializer_list<const char*> S) {
    return HSPair{set_of(g, H), set_of(g, S)};
}

bool same_count(const Multiplicity& m, const oracle::Count& c) {
    return c.infinite ? m.is_omega() : (m.is_finite() && m.value() == c.finite);
}

} // namespace

TEST_CASE("conditions (a) and (b)") {
    const Graph a = graph_a(), b = graph_b(), c = graph_c();
    CHECK_FALSE(condition_a(a, set_of(a, {"v"})).holds);
    CHECK(condition_a(b, set_of(b, {"v"})).holds);
    CHECK(condition_a(c, set_of(c, {"u"})).holds);
    const auto rb = condition_b(b, set_of(b, {"v"}));
    CHECK_FALSE(rb.holds);
    CHECK(b.vertex_name(*rb.vertex) == "u");
    CHECK(condition_b(c, set_of(c, {"u"})).holds);
    CHECK(condition_b(a, set_of(a, {"v"})).holds);
}

TEST_CASE("is_decomposable on fixtures") {
    const Graph a = graph_a(), c = graph_c(), d = graph_d();
    const auto vc = is_decomposable(c);
    CHECK(vc.decomposable);
    CHECK(vc.method == DecompMethod::lattice_complement);
    REQUIRE(vc.witness);
    CHECK(*vc.witness == pair_of(c, {"u"}, {"p"}));
    CHECK(*vc.complement == pair_of(c, {"w"}, {}));
    CHECK_FALSE(is_decomposable(a).decomposable);
    CHECK_FALSE(is_decomposable(a).witness);
    CHECK_FALSE(is_decomposable(d).decomposable);
    CHECK(is_decomposable(graph_e2()).decomposable);
}

TEST_CASE("compatible_count and Property (P)") {
    const Graph a = graph_a(), c = graph_c();
    const auto c1 = compatible_count(c, c.vertex("p"), set_of(c, {"u"}));
    CHECK(c1.count.is_zero());
    CHECK(c1.samples.empty());
    const auto c2 = compatible_count(c, c.vertex("p"), set_of(c, {"w"}));
    CHECK(c2.count == Multiplicity(1));
    REQUIRE(c2.samples.size() == 1);
    CHECK(format_path(c, c2.samples[0]) == "p:b");
    const auto c3 = compatible_count(a, a.vertex("u"), set_of(a, {"v"}), 3);
    CHECK(c3.count.is_omega());
    CHECK(c3.samples.size() == 3);
    CHECK_THROWS_AS(compatible_count(c, c.vertex("u"), set_of(c, {"u"})), ContractError);
    CHECK(satisfies_P(a, a.vertex("u"), set_of(a, {"v"})));
    CHECK_FALSE(satisfies_P(c, c.vertex("p"), set_of(c, {"u"})));
    CHECK_FALSE(satisfies_P(c, c.vertex("p"), set_of(c, {"w"})));
}

TEST_CASE("compat_successor has no valid instance on the corpus") {
    const Graph a = graph_a();
    // {v} fails (a).
    CHECK_THROWS_AS(compat_successor(a, a.vertex("u"), set_of(a, {"v"})), ContractError);
    const Graph c = graph_c();
    CHECK_THROWS_AS(compat_successor(c, c.vertex("p"), set_of(c, {"u"})), ContractError);
}

TEST_CASE("count_paths_into") {
    const Graph a = graph_a(), c = graph_c(), d = graph_d();
    CHECK(count_paths_into(c, c.vertex("p"), set_of(c, {"u", "w"})).is_omega());
    CHECK(count_paths_into(a, a.vertex("u"), set_of(a, {"v"})).is_omega());
    CHECK(count_paths_into(d, d.vertex("v"), set_of(d, {"v"})).is_zero());
    const Graph c3 = graph_c3();
    CHECK(count_paths_into(c3, c3.vertex("p"), set_of(c3, {"u", "w"})) == Multiplicity(4));
}

TEST_CASE("compatible_split_check") {
    const Graph a = graph_a(), c = graph_c(), e2 = graph_e2();
    const auto rc = compatible_split_check(c);
    CHECK(rc.holds);
    REQUIRE(rc.witness);
    CHECK(rc.witness->first == set_of(c, {"u"}));
    CHECK(rc.witness->second == set_of(c, {"w"}));
    CHECK_FALSE(compatible_split_check(a).holds);
    const auto re = compatible_split_check(e2);
    CHECK(re.holds);
    CHECK(re.witness->first == set_of(e2, {"v"}));
    CHECK(re.witness->second == set_of(e2, {"w"}));
}

TEST_CASE("naive_AN_check reproduces the counterexample phenomenon") {
    const Graph c = graph_c(), e2 = graph_e2(), c3 = graph_c3();
    const auto n = naive_AN_check(c, set_of(c, {"u"}), set_of(c, {"w"}));
    CHECK_FALSE(n.holds);
    REQUIRE(n.offending);
    CHECK(c.vertex_name(*n.offending) == "p");
    CHECK(is_decomposable(c).decomposable);
    CHECK(naive_AN_check(e2, set_of(e2, {"v"}), set_of(e2, {"w"})).holds);
    CHECK(naive_AN_check(c3, set_of(c3, {"u"}), set_of(c3, {"w"})).holds);
    CHECK_THROWS_AS(naive_AN_check(c, set_of(c, {"u"}), set_of(c, {"u", "w"})), ContractError);
}

TEST_CASE("random graphs: path counts match explicit enumeration") {
    RandomGraphSpec spec;
    spec.max_vertices = 5;
    spec.max_bundles = 7;
    std::mt19937_64 rng(1234);
    for (int round = 0; round < 250; ++round) {
        const Graph g = random_graph(rng, spec);
        for (const VertexSet& H : enumerate_hs(g)) {
            for (VertexId v = 0; v < g.vertex_count(); ++v) {
                CHECK(same_count(count_paths_into(g, v, H), oracle::paths_into(g, v, H)));
                if (H.contains(v))
                    continue;
                const CompatCount cc = compatible_count(g, v, H, 6);
                CHECK(same_count(cc.count, oracle::compatible_paths(g, v, H)));
                const VertexSet B = breaking_vertices(g, H);
                for (const FinitePath& p : cc.samples) {
                    const auto it = itinerary(g, p);
                    REQUIRE(p.length() >= 1);
                    CHECK(it.front() == v);
                    CHECK(H.contains(it.back()));
                    const VertexId last_src = it[it.size() - 2];
                    CHECK_FALSE(H.contains(last_src));
                    CHECK_FALSE(B.contains(last_src));
                    // H is entered only at the final step.
                    for (std::size_t k = 0; k + 1 < it.size(); ++k)
                        CHECK_FALSE(H.contains(it[k]));
                }
                if (cc.count.is_finite())
                    CHECK(cc.samples.size() == std::min<std::uint64_t>(cc.count.value(), 6));
                else
                    CHECK(cc.samples.size() == 6);
            }
        }
    }
}

TEST_CASE("random graphs: the three decomposability routes agree") {
    std::mt19937_64 rng(777);
    for (int round = 0; round < 300; ++round) {
        const Graph g = random_graph(rng);
        const DecompVerdict a = is_decomposable(g);
        const DecompVerdict b = decomposable_by_clopen(g);
        const CompatibleSplit c = compatible_split_check(g);
        CHECK(a.decomposable == b.decomposable);
        CHECK(a.decomposable == c.holds);
        if (!a.decomposable)
            continue;
        REQUIRE(a.witness);
        const HSPair& w = *a.witness;
        CHECK_FALSE(w.H.empty());
        CHECK_FALSE(w.H.is_full());
        CHECK(w.S == breaking_vertices(g, w.H));
        CHECK(is_clopen(g, w).clopen);
        REQUIRE(a.complement);
        CHECK(a.complement->S == breaking_vertices(g, a.complement->H));
        for (const BoundaryPath& x : canonical_family(g))
            CHECK(membership(g, w, x) != membership(g, *a.complement, x));
        REQUIRE(c.witness);
        CHECK(compatible_pair_condition(g, c.witness->first, c.witness->second).holds);
    }
}

TEST_CASE("random graphs: Property (P) never meets conditions (a) and (b)") {
    std::mt19937_64 rng(555);
    for (int round = 0; round < 300; ++round) {
        const Graph g = random_graph(rng);
        for (const VertexSet& H : enumerate_hs(g)) {
            if (!condition_a(g, H).holds || !condition_b(g, H).holds)
                continue;
            for (VertexId v = 0; v < g.vertex_count(); ++v) {
                if (H.contains(v))
                    continue;
                CHECK_FALSE(satisfies_P(g, v, H));
                CHECK_THROWS_AS(compat_successor(g, v, H), ContractError);
            }
        }
    }
}
