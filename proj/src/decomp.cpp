#include "lpadecomp/decomp.hpp"

#include "lpadecomp/errors.hpp"
#include "lpadecomp/lattice.hpp"

#include <deque>
#include <functional>

namespace lpadecomp {

const char* to_string(DecompMethod m) {
    switch (m) {
    case DecompMethod::lattice_complement:
        return "lattice_complement";
    case DecompMethod::compatible_split:
        return "compatible_split";
    case DecompMethod::clopen:
        return "clopen";
    }
    return "?";
}

ConditionResult condition_a(const Graph& g, const VertexSet& H) { return condition_i(g, H); }

ConditionResult condition_b(const Graph& g, const VertexSet& H) {
    if (!is_hereditary_saturated(g, H))
        throw ContractError("condition_b: " + g.format_set(H) + " is not hereditary saturated");
    return condition_ii(g, H, breaking_vertices(g, H));
}

DecompVerdict decomposable_by_clopen(const Graph& g, const EnumerationCaps& caps) {
    for (const HSPair& p : enumerate_TE(g, caps)) {
        if (p.H.empty() || p.H.is_full())
            continue;
        if (is_clopen(g, p).clopen)
            return DecompVerdict{true, DecompMethod::clopen, p, complement_pair(g, p)};
    }
    return DecompVerdict{false, DecompMethod::clopen, std::nullopt, std::nullopt};
}

DecompVerdict is_decomposable(const Graph& g, const EnumerationCaps& caps) {
    DecompVerdict verdict{false, DecompMethod::lattice_complement, std::nullopt, std::nullopt};
    for (const VertexSet& h : enumerate_hs(g, caps)) {
        if (h.empty() || h.is_full())
            continue;
        if (condition_a(g, h).holds && condition_b(g, h).holds) {
            HSPair w{h, breaking_vertices(g, h)};
            verdict = DecompVerdict{true, DecompMethod::lattice_complement, w, complement_pair(g, w)};
            break;
        }
    }
    const DecompVerdict by_clopen = decomposable_by_clopen(g, caps);
    if (by_clopen.decomposable != verdict.decomposable)
        throw InvariantViolation(std::string("is_decomposable: graph conditions say ") +
                                 (verdict.decomposable ? "yes" : "no") + " but clopen search says " +
                                 (by_clopen.decomposable ? "yes" : "no"));
    return verdict;
}

// Compatible paths

namespace {

void require_hs(const Graph& g, const VertexSet& H, const char* where) {
    if (!is_hereditary_saturated(g, H))
        throw ContractError(std::string(where) + ": " + g.format_set(H) + " is not hereditary saturated");
}

// Vertices from which the qualifying set can be reached without entering H.
VertexSet backward_avoiding(const Graph& g, const VertexSet& targets, const VertexSet& blocked) {
    VertexSet reached = targets;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& b : g.bundles())
            if (reached.contains(b.target) && !blocked.contains(b.source) && !reached.contains(b.source)) {
                reached.insert(b.source);
                changed = true;
            }
    }
    return reached;
}

// Paths counted with multiplicity over the acyclic region; `terminal(x)`
// supplies the number of ways a path may stop at x.
Multiplicity count_over_dag(const Graph& g, VertexId v, const VertexSet& region,
                            const std::function<Multiplicity(VertexId)>& terminal, bool count_trivial) {
    std::vector<std::optional<Multiplicity>> memo(g.vertex_count());
    std::function<Multiplicity(VertexId)> walk = [&](VertexId x) -> Multiplicity {
        if (memo[x])
            return *memo[x];
        Multiplicity total = terminal(x);
        for (BundleId b : g.out_bundles(x)) {
            const Bundle& bd = g.bundle(b);
            if (region.contains(bd.target))
                total += bd.multiplicity * walk(bd.target);
        }
        memo[x] = total;
        return total;
    };
    if (count_trivial)
        return walk(v);
    Multiplicity total(0);
    for (BundleId b : g.out_bundles(v)) {
        const Bundle& bd = g.bundle(b);
        if (region.contains(bd.target))
            total += bd.multiplicity * walk(bd.target);
    }
    return total;
}

std::uint64_t sample_indices(Multiplicity m, std::size_t cap) {
    if (m.is_omega())
        return cap;
    return std::min<std::uint64_t>(m.value(), cap);
}

} // namespace

CompatCount compatible_count(const Graph& g, VertexId v, const VertexSet& H, std::size_t sample_cap) {
    require_hs(g, H, "compatible_count");
    if (v >= g.vertex_count())
        throw InputError("compatible_count: unknown vertex");
    if (H.contains(v))
        throw ContractError("compatible_count: " + g.vertex_name(v) + " lies in H");

    const VertexSet breaking = breaking_vertices(g, H);
    VertexSet qualifying = g.empty_set();
    for (VertexId u = 0; u < g.vertex_count(); ++u)
        if (!H.contains(u) && !breaking.contains(u) && !out_count_into(g, u, H).is_zero())
            qualifying.insert(u);

    VertexSet start = g.empty_set();
    start.insert(v);
    const VertexSet region = reachable_avoiding(g, start, H) & backward_avoiding(g, qualifying, H);

    CompatCount out;
    if (!region.contains(v))
        return out;
    auto final_edges = [&](VertexId x) { return qualifying.contains(x) ? out_count_into(g, x, H) : Multiplicity(0); };
    out.count = has_cycle_within(g, region) ? Multiplicity::omega() : count_over_dag(g, v, region, final_edges, true);

    // Shortest-first enumeration of examples.
    std::deque<FinitePath> queue{FinitePath{v, {}}};
    const std::size_t queue_limit = 4096;
    while (!queue.empty() && out.samples.size() < sample_cap) {
        FinitePath p = std::move(queue.front());
        queue.pop_front();
        const VertexId at = range(g, p);
        for (BundleId b : g.out_bundles(at)) {
            const Bundle& bd = g.bundle(b);
            const std::uint64_t k = sample_indices(bd.multiplicity, sample_cap);
            for (std::uint64_t i = 0; i < k; ++i) {
                if (H.contains(bd.target)) {
                    if (qualifying.contains(at) && out.samples.size() < sample_cap)
                        out.samples.push_back(extend(p, EdgeRef{b, i}));
                } else if (region.contains(bd.target) && queue.size() < queue_limit) {
                    queue.push_back(extend(p, EdgeRef{b, i}));
                }
            }
        }
    }
    return out;
}

bool satisfies_P(const Graph& g, VertexId v, const VertexSet& H) {
    return compatible_count(g, v, H, 0).count.is_omega();
}

EdgeRef compat_successor(const Graph& g, VertexId v, const VertexSet& H) {
    require_hs(g, H, "compat_successor");
    if (!condition_a(g, H).holds || !condition_b(g, H).holds)
        throw ContractError("compat_successor: H=" + g.format_set(H) + " does not satisfy conditions (a) and (b)");
    if (H.contains(v))
        throw ContractError("compat_successor: " + g.vertex_name(v) + " lies in H");
    if (!satisfies_P(g, v, H))
        throw ContractError("compat_successor: " + g.vertex_name(v) + " does not satisfy Property (P)");
    for (BundleId b : g.out_bundles(v)) {
        VertexId t = g.bundle(b).target;
        if (!H.contains(t) && satisfies_P(g, t, H))
            return EdgeRef{b, 0};
    }
    throw InvariantViolation("compat_successor: no successor preserves Property (P) at " + g.vertex_name(v));
}

Multiplicity count_paths_into(const Graph& g, VertexId v, const VertexSet& X) {
    if (v >= g.vertex_count())
        throw InputError("count_paths_into: unknown vertex");
    VertexSet start = g.empty_set();
    start.insert(v);
    const VertexSet region = reachable_avoiding(g, start, g.empty_set()) & reaching_set(g, X);
    if (!region.contains(v))
        return Multiplicity(0);
    if (has_cycle_within(g, region))
        return Multiplicity::omega();
    return count_over_dag(
        g, v, region, [&](VertexId x) { return Multiplicity(X.contains(x) ? 1 : 0); }, false);
}

PairCondition compatible_pair_condition(const Graph& g, const VertexSet& H1, const VertexSet& H2) {
    require_hs(g, H1, "compatible_pair_condition");
    require_hs(g, H2, "compatible_pair_condition");
    if (H1.intersects(H2))
        throw ContractError("compatible_pair_condition: H1 and H2 intersect");
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (H1.contains(v) || H2.contains(v))
            continue;
        Multiplicity c = compatible_count(g, v, H1, 0).count + compatible_count(g, v, H2, 0).count;
        if (c.is_zero() || c.is_omega())
            return PairCondition{false, v};
    }
    return {};
}

CompatibleSplit compatible_split_check(const Graph& g, const EnumerationCaps& caps) {
    const auto hs = enumerate_hs(g, caps);
    for (std::size_t i = 0; i < hs.size(); ++i) {
        if (hs[i].empty())
            continue;
        for (std::size_t j = i + 1; j < hs.size(); ++j) {
            if (hs[j].empty() || hs[i].intersects(hs[j]))
                continue;
            if (compatible_pair_condition(g, hs[i], hs[j]).holds)
                return CompatibleSplit{true, std::make_pair(hs[i], hs[j])};
        }
    }
    return {};
}

PairCondition naive_AN_check(const Graph& g, const VertexSet& H1, const VertexSet& H2) {
    require_hs(g, H1, "naive_AN_check");
    require_hs(g, H2, "naive_AN_check");
    if (H1.empty() || H2.empty())
        throw ContractError("naive_AN_check: H1 and H2 must be nonempty");
    if (H1.intersects(H2))
        throw ContractError("naive_AN_check: H1 and H2 intersect");
    const VertexSet both = H1 | H2;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (both.contains(v))
            continue;
        Multiplicity c = count_paths_into(g, v, both);
        if (c.is_zero() || c.is_omega())
            return PairCondition{false, v};
    }
    return {};
}

} // namespace lpadecomp
