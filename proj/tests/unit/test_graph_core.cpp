#include "fixtures.hpp"
#include "oracles.hpp"

#include "lpadecomp/errors.hpp"
#include "lpadecomp/graph.hpp"

#include <doctest.h>

using namespace lpadecomp;
using namespace fixtures;

namespace {

VertexSet set_of(const Graph& g, std::initializer_list<const char*> ids) {
    std::vector<std::string> names(ids.begin(), ids.end());
    return g.make_set(names);
}

} // namespace

TEST_CASE("multiplicity arithmetic absorbs omega") {
    const auto w = Multiplicity::omega();
    CHECK(w + Multiplicity(3) == w);
    CHECK(w * Multiplicity(2) == w);
    CHECK(w * Multiplicity(0) == Multiplicity(0));
    CHECK(Multiplicity(2) + Multiplicity(3) == Multiplicity(5));
    CHECK(Multiplicity(2) * Multiplicity(3) == Multiplicity(6));
    CHECK(Multiplicity(7) < w);
    CHECK(w.to_string() == "omega");
    CHECK_THROWS_AS(Multiplicity(~std::uint64_t{0}) + Multiplicity(1), ResourceError);
}

TEST_CASE("graph construction rejects malformed input") {
    CHECK_THROWS_AS(Graph({"u", "u"}, {}), InputError);
    CHECK_THROWS_AS(Graph({"u"}, {{"e", "u", "x", times(1)}}), InputError);
    CHECK_THROWS_AS(Graph({"u"}, {{"e", "u", "u", times(0)}}), InputError);
    CHECK_THROWS_AS(Graph({"u"}, {{"e", "u", "u", times(1)}, {"e", "u", "u", times(1)}}), InputError);
    CHECK_THROWS_AS(Graph({"u"}, {{"u", "u", "u", times(1)}}), InputError); // ids share one namespace
    CHECK_THROWS_AS(Graph({""}, {}), InputError);
}

TEST_CASE("classify_vertex") {
    const Graph a = graph_a(), b = graph_b(), d = graph_d();
    CHECK(classify_vertex(a, a.vertex("u")) == VertexKind::regular);
    CHECK(classify_vertex(b, b.vertex("u")) == VertexKind::infinite_emitter);
    CHECK(classify_vertex(d, d.vertex("v")) == VertexKind::sink);
    CHECK_THROWS_AS(d.vertex("nope"), InputError);
    CHECK(std::string(to_string(VertexKind::infinite_emitter)) == "infinite-emitter");
}

TEST_CASE("out_count_into") {
    const Graph c = graph_c(), d = graph_d();
    CHECK(out_count_into(c, c.vertex("p"), set_of(c, {"w"})) == Multiplicity(1));
    CHECK(out_count_into(c, c.vertex("p"), set_of(c, {"u"})).is_omega());
    CHECK(out_count_into(d, d.vertex("v"), set_of(d, {"v"})).is_zero());
}

TEST_CASE("reaches counts length-0 paths") {
    const Graph a = graph_a(), c = graph_c();
    CHECK(reaches(a, a.vertex("u"), set_of(a, {"v"})));
    CHECK_FALSE(reaches(a, a.vertex("v"), set_of(a, {"u"})));
    CHECK(reaches(c, c.vertex("u"), set_of(c, {"u"})));
}

TEST_CASE("hereditary and saturated") {
    const Graph a = graph_a(), b = graph_b();
    CHECK(is_hereditary(a, set_of(a, {"v"})));
    CHECK_FALSE(is_hereditary(a, set_of(a, {"u"})));
    CHECK(is_hereditary(a, a.empty_set()));
    CHECK(is_saturated(a, set_of(a, {"v"})));
    CHECK(is_saturated(b, set_of(b, {"v"})));
    CHECK(is_saturated(a, a.all_vertices()));
    CHECK_THROWS_AS(is_saturated(a, set_of(a, {"u"})), ContractError);
}

TEST_CASE("hs_closure") {
    const Graph a = graph_a();
    CHECK(hs_closure(a, set_of(a, {"v"})) == set_of(a, {"v"}));
    CHECK(hs_closure(a, set_of(a, {"u"})) == a.all_vertices());
    CHECK(hs_closure(a, a.empty_set()).empty());
    // Saturation pulls in a regular vertex whose only edges land inside.
    const Graph chain({"x", "y", "z"}, {{"s", "x", "y", times(2)}, {"t", "y", "z", times(1)}});
    CHECK(hs_closure(chain, set_of(chain, {"z"})) == chain.all_vertices());
}

TEST_CASE("enumerate_hs on fixtures") {
    const Graph a = graph_a(), c = graph_c(), d = graph_d();
    CHECK(enumerate_hs(a) == std::vector<VertexSet>{a.empty_set(), set_of(a, {"v"}), a.all_vertices()});
    CHECK(enumerate_hs(c) == std::vector<VertexSet>{c.empty_set(), set_of(c, {"u"}), set_of(c, {"w"}),
                                                    set_of(c, {"u", "w"}), c.all_vertices()});
    CHECK(enumerate_hs(d) == std::vector<VertexSet>{d.empty_set(), d.all_vertices()});
    EnumerationCaps tight;
    tight.max_vertices = 2;
    CHECK_THROWS_AS(enumerate_hs(c, tight), ResourceError);
}

TEST_CASE("breaking_vertices") {
    const Graph b = graph_b(), c = graph_c();
    CHECK(breaking_vertices(c, set_of(c, {"u"})) == set_of(c, {"p"}));
    CHECK(breaking_vertices(c, set_of(c, {"w"})).empty());
    CHECK(breaking_vertices(b, set_of(b, {"v"})).empty());
    CHECK(breaking_vertices(c, c.empty_set()).empty());
}

TEST_CASE("random graphs: enumeration and breaking vertices match brute force") {
    const auto graphs = random_corpus(0x9e3779b97f4a7c15ULL, 300);
    for (const Graph& g : graphs) {
        const auto hs = enumerate_hs(g);
        REQUIRE(hs == oracle::hs_sets(g));
        CHECK(hs.front().empty());
        CHECK(hs.back().is_full());
        for (const VertexSet& H : hs) {
            CHECK(is_hereditary_saturated(g, H));
            const VertexSet B = breaking_vertices(g, H);
            CHECK(B == oracle::breaking(g, H));
            CHECK_FALSE(B.intersects(H));
            for (VertexId v : B.members()) {
                CHECK(g.is_infinite_emitter(v));
                CHECK(out_count_into(g, v, H).is_omega());
            }
        }
    }
}

TEST_CASE("random graphs: hs_closure is an idempotent monotone extensive closure") {
    std::mt19937_64 rng(17);
    for (int round = 0; round < 200; ++round) {
        const Graph g = random_graph(rng);
        const std::size_t n = g.vertex_count();
        std::uniform_int_distribution<std::uint64_t> mask(0, (std::uint64_t{1} << n) - 1);
        const VertexSet x = VertexSet::from_mask(n, mask(rng));
        const VertexSet y = x | VertexSet::from_mask(n, mask(rng));
        const VertexSet cx = hs_closure(g, x);
        CHECK(x.is_subset_of(cx));
        CHECK(hs_closure(g, cx) == cx);
        CHECK(cx.is_subset_of(hs_closure(g, y)));
        CHECK((hs_closure(g, x) == x) == is_hereditary_saturated(g, x));
        CHECK(is_hereditary_saturated(g, cx));
        // Least: every hereditary saturated superset contains the closure.
        for (const VertexSet& H : oracle::hs_sets(g))
            if (x.is_subset_of(H))
                CHECK(cx.is_subset_of(H));
    }
}

TEST_CASE("reachability helpers agree with brute force") {
    const auto graphs = random_corpus(5, 100);
    for (const Graph& g : graphs) {
        const std::size_t n = g.vertex_count();
        for (VertexId t = 0; t < n; ++t) {
            const VertexSet X(n, {t});
            const VertexSet R = reaching_set(g, X);
            for (VertexId v = 0; v < n; ++v) {
                CHECK(reaches(g, v, X) == oracle::reach(g, v, X));
                CHECK(R.contains(v) == oracle::reach(g, v, X));
            }
        }
    }
}
