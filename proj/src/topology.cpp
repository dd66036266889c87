#include "lpadecomp/topology.hpp"

#include "lpadecomp/errors.hpp"
#include "lpadecomp/lattice.hpp"

#include <deque>

namespace lpadecomp {

const char* to_string(FailingCondition c) {
    switch (c) {
    case FailingCondition::none:
        return "none";
    case FailingCondition::cond_i:
        return "cond_i";
    case FailingCondition::cond_ii:
        return "cond_ii";
    }
    return "?";
}

namespace {

// Shortest cycle through v using only vertices outside `blocked`.
std::optional<FinitePath> shortest_cycle(const Graph& g, VertexId v, const VertexSet& blocked) {
    const std::size_t n = g.vertex_count();
    std::vector<std::optional<BundleId>> via(n);
    std::vector<bool> seen(n, false);
    std::deque<VertexId> queue;
    for (BundleId b : g.out_bundles(v)) {
        VertexId t = g.bundle(b).target;
        if (t == v)
            return FinitePath{v, {EdgeRef{b, 0}}};
        if (!blocked.contains(t) && !seen[t]) {
            seen[t] = true;
            via[t] = b;
            queue.push_back(t);
        }
    }
    while (!queue.empty()) {
        VertexId x = queue.front();
        queue.pop_front();
        for (BundleId b : g.out_bundles(x)) {
            VertexId t = g.bundle(b).target;
            if (t == v) {
                std::vector<EdgeRef> rev{EdgeRef{b, 0}};
                for (VertexId at = x; at != v; at = g.bundle(*via[at]).source)
                    rev.push_back(EdgeRef{*via[at], 0});
                return FinitePath{v, {rev.rbegin(), rev.rend()}};
            }
            if (!blocked.contains(t) && !seen[t]) {
                seen[t] = true;
                via[t] = b;
                queue.push_back(t);
            }
        }
    }
    return std::nullopt;
}

} // namespace

ConditionResult condition_i(const Graph& g, const VertexSet& H) {
    if (!is_hereditary_saturated(g, H))
        throw ContractError("condition_i: " + g.format_set(H) + " is not hereditary saturated");
    const VertexSet reach = reaching_set(g, H);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (H.contains(v) || !reach.contains(v))
            continue;
        if (auto c = shortest_cycle(g, v, H))
            return ConditionResult{false, std::move(c), std::nullopt};
    }
    return {};
}

ConditionResult condition_ii(const Graph& g, const VertexSet& H, const VertexSet& S) {
    require_valid_pair(g, HSPair{H, S}, "condition_ii");
    const VertexSet reach = reaching_set(g, H);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (H.contains(v) || S.contains(v))
            continue;
        for (BundleId b : g.out_bundles(v)) {
            const Bundle& bd = g.bundle(b);
            if (bd.multiplicity.is_omega() && reach.contains(bd.target))
                return ConditionResult{false, std::nullopt, v};
        }
    }
    return {};
}

ClopenVerdict is_clopen(const Graph& g, const HSPair& pair) {
    require_valid_pair(g, pair, "is_clopen");
    if (auto c = condition_i(g, pair.H); !c.holds)
        return ClopenVerdict{false, FailingCondition::cond_i, c.cycle, std::nullopt};
    if (auto c = condition_ii(g, pair.H, pair.S); !c.holds)
        return ClopenVerdict{false, FailingCondition::cond_ii, std::nullopt, c.vertex};
    return {};
}

bool clopen_breaking_check(const Graph& g, const HSPair& pair) {
    if (!is_clopen(g, pair).clopen)
        return true;
    return pair.S == breaking_vertices(g, pair.H);
}

HSPair complement_pair(const Graph& g, const HSPair& pair) {
    if (!is_clopen(g, pair).clopen)
        throw ContractError("complement_pair: " + format_pair(g, pair) + " is not clopen");
    HSPair out = extract_pair(
        g, [&](const Cylinder& c) { return cylinder_disjoint(g, c, pair); },
        [&](const BoundaryPath& x) { return !membership(g, pair, x); });
    const VertexSet closed_h = reaching_set(g, pair.H).complement();
    const HSPair closed{closed_h, breaking_vertices(g, closed_h)};
    if (!(closed == out))
        throw InvariantViolation("complement_pair: predicate route gives " + format_pair(g, out) +
                                 ", closed form gives " + format_pair(g, closed));
    return out;
}

} // namespace lpadecomp
