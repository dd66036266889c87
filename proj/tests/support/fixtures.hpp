#pragma once

#include "lpadecomp/graph.hpp"

#include <random>
#include <string>
#include <vector>

namespace fixtures {

using lpadecomp::BundleSpec;
using lpadecomp::Graph;
using lpadecomp::Multiplicity;

inline Multiplicity times(std::uint64_t n) { return Multiplicity(n); }
inline Multiplicity omega() { return Multiplicity::omega(); }

// u loops on itself and feeds the sink v.
inline Graph graph_a() { return Graph({"u", "v"}, {{"e", "u", "u", times(1)}, {"f", "u", "v", times(1)}}); }
// u emits infinitely many edges into the sink v.
inline Graph graph_b() { return Graph({"u", "v"}, {{"f", "u", "v", omega()}}); }
// p emits infinitely many edges into u and one into w.
inline Graph graph_c() {
    return Graph({"p", "u", "w"}, {{"a", "p", "u", omega()}, {"b", "p", "w", times(1)}});
}
inline Graph graph_c3() {
    return Graph({"p", "u", "w"}, {{"a", "p", "u", times(3)}, {"b", "p", "w", times(1)}});
}
inline Graph graph_d() { return Graph({"v"}, {}); }
inline Graph graph_e2() { return Graph({"v", "w"}, {}); }

inline std::vector<Graph> corpus() { return {graph_a(), graph_b(), graph_c(), graph_c3(), graph_d(), graph_e2()}; }

struct RandomGraphSpec {
    std::size_t max_vertices = 8;
    std::size_t max_bundles = 10;
    double omega_probability = 0.2;
    std::uint64_t max_finite = 3;
};

inline Graph random_graph(std::mt19937_64& rng, const RandomGraphSpec& spec = {}) {
    std::uniform_int_distribution<std::size_t> nv(1, spec.max_vertices);
    const std::size_t n = nv(rng);
    std::uniform_int_distribution<std::size_t> nb(0, spec.max_bundles);
    const std::size_t m = nb(rng);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<std::uint64_t> mult(1, spec.max_finite);
    std::bernoulli_distribution is_omega(spec.omega_probability);
    std::vector<std::string> vertices;
    for (std::size_t i = 0; i < n; ++i)
        vertices.push_back("v" + std::to_string(i));
    std::vector<BundleSpec> bundles;
    for (std::size_t j = 0; j < m; ++j) {
        BundleSpec b{"b" + std::to_string(j), vertices[pick(rng)], vertices[pick(rng)], times(1)};
        b.multiplicity = is_omega(rng) ? omega() : times(mult(rng));
        bundles.push_back(std::move(b));
    }
    return Graph(std::move(vertices), bundles);
}

inline std::vector<Graph> random_corpus(std::uint64_t seed, std::size_t count, const RandomGraphSpec& spec = {}) {
    std::mt19937_64 rng(seed);
    std::vector<Graph> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(random_graph(rng, spec));
    return out;
}

} // namespace fixtures
