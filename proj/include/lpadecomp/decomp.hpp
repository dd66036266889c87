#pragma once

#include "lpadecomp/topology.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace lpadecomp {

enum class DecompMethod { lattice_complement, compatible_split, clopen };
const char* to_string(DecompMethod m);

struct DecompVerdict {
    bool decomposable = false;
    DecompMethod method = DecompMethod::lattice_complement;
    std::optional<HSPair> witness;    // (H, B_H)
    std::optional<HSPair> complement; // φ-complement of the witness
};

ConditionResult condition_a(const Graph& g, const VertexSet& H);
ConditionResult condition_b(const Graph& g, const VertexSet& H);

/// First nonempty proper hereditary saturated H passing conditions (a) and
/// (b). Cross-checked against the existence of a nonempty proper clopen pair;
/// disagreement throws InvariantViolation.
DecompVerdict is_decomposable(const Graph& g, const EnumerationCaps& caps = {});
/// First nonempty proper clopen pair in enumeration order.
DecompVerdict decomposable_by_clopen(const Graph& g, const EnumerationCaps& caps = {});

/// Number of H-compatible paths from v (range in H, last edge leaving a
/// vertex outside H ∪ B_H), with up to `sample_cap` examples.
struct CompatCount {
    Multiplicity count{0};
    std::vector<FinitePath> samples;
};

CompatCount compatible_count(const Graph& g, VertexId v, const VertexSet& H, std::size_t sample_cap = 4);
bool satisfies_P(const Graph& g, VertexId v, const VertexSet& H);
/// Successor edge preserving Property (P). Its preconditions are
/// unsatisfiable on finite graphs; violating them throws ContractError.
EdgeRef compat_successor(const Graph& g, VertexId v, const VertexSet& H);

/// Nontrivial finite paths from v with range in X.
Multiplicity count_paths_into(const Graph& g, VertexId v, const VertexSet& X);

struct PairCondition {
    bool holds = true;
    std::optional<VertexId> offending;
};

/// Every v outside H1 ∪ H2 has at least one but finitely many paths that are
/// H1- or H2-compatible.
PairCondition compatible_pair_condition(const Graph& g, const VertexSet& H1, const VertexSet& H2);

struct CompatibleSplit {
    bool holds = false;
    std::optional<std::pair<VertexSet, VertexSet>> witness;
};

/// Search over nonempty disjoint hereditary saturated H1, H2 (enumeration
/// order, H1 before H2).
CompatibleSplit compatible_split_check(const Graph& g, const EnumerationCaps& caps = {});

/// The uncorrected condition: every v outside H1 ∪ H2 has at least one but
/// finitely many paths into H1 ∪ H2, with no compatibility restriction.
PairCondition naive_AN_check(const Graph& g, const VertexSet& H1, const VertexSet& H2);

} // namespace lpadecomp
