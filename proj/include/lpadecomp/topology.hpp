#pragma once

#include "lpadecomp/boundary.hpp"

#include <optional>

namespace lpadecomp {

enum class FailingCondition { none, cond_i, cond_ii };
const char* to_string(FailingCondition c);

/// Outcome of one of the two closedness conditions. A failing cycle
/// condition carries a simple cycle outside H that still reaches H; a
/// failing infinite-emitter condition carries the offending vertex.
struct ConditionResult {
    bool holds = true;
    std::optional<FinitePath> cycle;
    std::optional<VertexId> vertex;
};

struct ClopenVerdict {
    bool clopen = true;
    FailingCondition failing = FailingCondition::none;
    std::optional<FinitePath> cycle;
    std::optional<VertexId> vertex;
};

/// No infinite path outside H keeps reaching H: equivalently no simple
/// cycle disjoint from H whose vertices reach H.
ConditionResult condition_i(const Graph& g, const VertexSet& H);
/// Every vertex with infinitely many edges whose range reaches H lies in
/// H ∪ S: equivalently every source of an ω bundle into reach(H).
ConditionResult condition_ii(const Graph& g, const VertexSet& H, const VertexSet& S);

ClopenVerdict is_clopen(const Graph& g, const HSPair& pair);

/// clopen ⇒ S = B_H.
bool clopen_breaking_check(const Graph& g, const HSPair& pair);

/// The pair whose φ-image is the complement of φ(pair). Requires a clopen
/// pair. Computed through the complement's membership predicate and checked
/// against the closed form H' = {v : v does not reach H}, S' = B_{H'}.
HSPair complement_pair(const Graph& g, const HSPair& pair);

} // namespace lpadecomp
