#include "fixtures.hpp"
#include "oracles.hpp"

#include "lpadecomp/boundary.hpp"
#include "lpadecomp/errors.hpp"
#include "lpadecomp/lattice.hpp"

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

// Membership vector of φ(p) over a point family.
std::vector<bool> footprint(const Graph& g, const HSPair& p, const std::vector<BoundaryPath>& family) {
    std::vector<bool> out;
    for (const auto& x : family)
        out.push_back(membership(g, p, x));
    return out;
}

// All (H, S ⊆ B_H) straight from the brute-force oracles.
std::vector<HSPair> brute_pairs(const Graph& g) {
    std::vector<HSPair> out;
    for (const VertexSet& H : oracle::hs_sets(g)) {
        const auto B = oracle::breaking(g, H).members();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << B.size()); ++mask) {
            VertexSet S(g.vertex_count());
            for (std::size_t i = 0; i < B.size(); ++i)
                if (mask >> i & 1)
                    S.insert(B[i]);
            out.push_back(HSPair{H, S});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("pair_leq") {
    const Graph c = graph_c();
    CHECK(pair_leq(c, pair_of(c, {"u"}, {}), pair_of(c, {"u"}, {"p"})));
    CHECK_FALSE(pair_leq(c, pair_of(c, {"u"}, {"p"}), pair_of(c, {"u", "w"}, {})));
    CHECK(pair_leq(c, pair_of(c, {"u"}, {"p"}), pair_of(c, {"p", "u", "w"}, {})));
    for (const HSPair& p : enumerate_TE(c))
        CHECK(pair_leq(c, pair_of(c, {}, {}), p));
}

TEST_CASE("enumerate_TE on fixtures") {
    const Graph a = graph_a(), c = graph_c(), d = graph_d();
    CHECK(enumerate_TE(c) == std::vector<HSPair>{pair_of(c, {}, {}), pair_of(c, {"u"}, {}), pair_of(c, {"u"}, {"p"}),
                                                 pair_of(c, {"w"}, {}), pair_of(c, {"u", "w"}, {}),
                                                 pair_of(c, {"p", "u", "w"}, {})});
    CHECK(enumerate_TE(d) == std::vector<HSPair>{pair_of(d, {}, {}), pair_of(d, {"v"}, {})});
    CHECK(enumerate_TE(a) ==
          std::vector<HSPair>{pair_of(a, {}, {}), pair_of(a, {"v"}, {}), pair_of(a, {"u", "v"}, {})});
    EnumerationCaps tight;
    tight.max_breaking = 0;
    CHECK_THROWS_AS(enumerate_TE(c, tight), ResourceError);
}

TEST_CASE("phi membership") {
    const Graph c = graph_c();
    const auto family = canonical_family(c);
    for (const auto& x : family) {
        CHECK_FALSE(membership(c, phi(c, pair_of(c, {}, {})), x));
        CHECK(membership(c, phi(c, pair_of(c, {"p", "u", "w"}, {})), x));
    }
    const auto U = phi(c, pair_of(c, {"u"}, {"p"}));
    CHECK(membership(c, U, parse_boundary(c, "p:")));
    CHECK_FALSE(membership(c, U, parse_boundary(c, "p:b")));
    CHECK_THROWS_AS(phi(c, pair_of(c, {"p"}, {})), ContractError);
}

TEST_CASE("rho examples") {
    const Graph c = graph_c();
    CHECK(rho(c, phi(c, pair_of(c, {"u"}, {"p"}))) == pair_of(c, {"u"}, {"p"}));
    CHECK(rho(c, InvariantOpen::union_of({pair_of(c, {"u"}, {}), pair_of(c, {"w"}, {})})) ==
          pair_of(c, {"u", "w"}, {}));
    CHECK(rho(c, InvariantOpen::intersection_of({pair_of(c, {"u"}, {"p"}), pair_of(c, {"w"}, {})})) ==
          pair_of(c, {}, {}));
}

TEST_CASE("join and meet examples") {
    const Graph c = graph_c();
    CHECK(join(c, pair_of(c, {"u"}, {}), pair_of(c, {"w"}, {})) == pair_of(c, {"u", "w"}, {}));
    for (const HSPair& p : enumerate_TE(c)) {
        CHECK(meet(c, p, p) == p);
        CHECK(join(c, pair_of(c, {}, {}), p) == p);
    }
}

TEST_CASE("verify_lattice_iso on fixtures") {
    for (const Graph& g : corpus()) {
        const auto rep = verify_lattice_iso(g);
        CHECK(rep.checks.size() >= 4);
        for (const auto& chk : rep.checks)
            CHECK_MESSAGE(chk.passed, chk.name << ": " << chk.detail);
    }
    CHECK(PairLattice(graph_d()).size() == 2);
}

TEST_CASE("hasse diagram") {
    const std::string c = hasse_dot(graph_c());
    CHECK(c.find("digraph") != std::string::npos);
    CHECK(std::count(c.begin(), c.end(), '\n') > 6);
    const PairLattice ld(graph_d());
    CHECK(ld.covering_relation().size() == 1);
    CHECK(PairLattice(graph_c()).size() == 6);
}

TEST_CASE("random graphs: lattice structure against brute force") {
    RandomGraphSpec spec;
    spec.max_vertices = 6;
    spec.max_bundles = 8;
    std::mt19937_64 rng(31337);
    for (int round = 0; round < 120; ++round) {
        const Graph g = random_graph(rng, spec);
        const auto pairs = enumerate_TE(g);
        REQUIRE(pairs == brute_pairs(g));
        const auto family = canonical_family(g);
        std::vector<std::vector<bool>> prints;
        for (const HSPair& p : pairs) {
            // H_{φ(p)} = H and S_{φ(p)} = S.
            CHECK(rho(g, phi(g, p)) == p);
            prints.push_back(footprint(g, p, family));
        }
        for (std::size_t i = 0; i < pairs.size(); ++i)
            for (std::size_t j = 0; j < pairs.size(); ++j) {
                bool implied = true;
                for (std::size_t k = 0; k < family.size(); ++k)
                    implied = implied && (!prints[i][k] || prints[j][k]);
                CHECK(pair_leq(g, pairs[i], pairs[j]) == implied);
                if (i != j)
                    CHECK(prints[i] != prints[j]);
                // Transport of ∪ and ∩ checked pointwise.
                const HSPair jn = join(g, pairs[i], pairs[j]);
                const HSPair mt = meet(g, pairs[i], pairs[j]);
                const auto pj = footprint(g, jn, family);
                const auto pm = footprint(g, mt, family);
                for (std::size_t k = 0; k < family.size(); ++k) {
                    CHECK(pj[k] == (prints[i][k] || prints[j][k]));
                    CHECK(pm[k] == (prints[i][k] && prints[j][k]));
                }
            }
        const auto rep = verify_lattice_iso(g);
        for (const auto& chk : rep.checks)
            CHECK_MESSAGE(chk.passed, chk.name << ": " << chk.detail);
        CHECK(pairs.front() == HSPair{g.empty_set(), g.empty_set()});
        CHECK(pairs.back() == HSPair{g.all_vertices(), g.empty_set()});
    }
}
