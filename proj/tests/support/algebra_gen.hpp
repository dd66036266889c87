#pragma once

// Random algebra elements and groupoid points for property tests.

#include "lpadecomp/boundary.hpp"
#include "lpadecomp/steinberg.hpp"

#include <random>
#include <vector>

namespace fixtures {

using namespace lpadecomp;

// Edges used when sampling: index 0 of every bundle, plus index 1 when the
// bundle has parallel edges.
inline std::vector<EdgeRef> sample_edges(const Graph& g) {
    std::vector<EdgeRef> out;
    for (BundleId b = 0; b < g.bundles().size(); ++b) {
        out.push_back(EdgeRef{b, 0});
        const Multiplicity m = g.bundle(b).multiplicity;
        if (m.is_omega() || m.value() > 1)
            out.push_back(EdgeRef{b, 1});
    }
    return out;
}

// Random product of up to three generators with a small coefficient.
inline AlgebraElement random_word(const SteinbergAlgebra& alg, std::mt19937_64& rng) {
    const Graph& g = alg.graph();
    const auto edges = sample_edges(g);
    std::uniform_int_distribution<int> len(1, 3), coeff(-3, 3), kind(0, 2);
    std::uniform_int_distribution<std::size_t> pick_v(0, g.vertex_count() - 1);
    AlgebraElement w;
    for (int i = 0, n = len(rng); i < n; ++i) {
        AlgebraElement gen;
        const int k = edges.empty() ? 0 : kind(rng);
        if (k == 0) {
            gen = alg.vertex(static_cast<VertexId>(pick_v(rng)));
        } else {
            std::uniform_int_distribution<std::size_t> pick_e(0, edges.size() - 1);
            const EdgeRef e = edges[pick_e(rng)];
            gen = k == 1 ? alg.edge(e) : alg.ghost(e);
        }
        w = i == 0 ? gen : alg.product(w, gen);
    }
    int c = coeff(rng);
    if (c == 0)
        c = 1;
    return alg.scale(w, c);
}

inline AlgebraElement random_element(const SteinbergAlgebra& alg, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> terms(1, 3);
    AlgebraElement f;
    for (int i = 0, n = terms(rng); i < n; ++i)
        f = alg.add(f, random_word(alg, rng));
    return f;
}

// Finite paths of length <= 2 built from sample edges, grouped by range.
inline std::vector<std::vector<FinitePath>> short_paths_into(const Graph& g) {
    std::vector<std::vector<FinitePath>> by_range(g.vertex_count());
    std::vector<FinitePath> frontier;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        frontier.push_back(FinitePath{v, {}});
    for (int len = 0; len <= 2; ++len) {
        std::vector<FinitePath> next;
        for (const FinitePath& p : frontier) {
            by_range[range(g, p)].push_back(p);
            for (const EdgeRef& e : sample_edges(g))
                if (g.bundle(e.bundle).source == range(g, p))
                    next.push_back(extend(p, e));
        }
        frontier = std::move(next);
    }
    return by_range;
}

inline std::vector<GroupoidPoint> random_points(const Graph& g, std::mt19937_64& rng, std::size_t count) {
    const auto family = canonical_family(g);
    const auto into = short_paths_into(g);
    std::uniform_int_distribution<std::size_t> pick(0, family.size() - 1);
    std::vector<GroupoidPoint> out;
    for (std::size_t i = 0; i < count; ++i) {
        const BoundaryPath& t = family[pick(rng)];
        const auto& pre = into[t.start()];
        std::uniform_int_distribution<std::size_t> pp(0, pre.size() - 1);
        const FinitePath& mu = pre[pp(rng)];
        const FinitePath& nu = pre[pp(rng)];
        out.push_back(GroupoidPoint{prepend(g, mu, t),
                                    static_cast<std::int64_t>(mu.length()) - static_cast<std::int64_t>(nu.length()),
                                    prepend(g, nu, t)});
    }
    return out;
}

} // namespace fixtures
