#pragma once

#include "lpadecomp/boundary.hpp"
#include "lpadecomp/verification.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace lpadecomp {

/// a.H ⊆ b.H and a.S ⊆ b.S ∪ b.H.
bool pair_leq(const Graph& g, const HSPair& a, const HSPair& b);

/// Every (H, S) with H hereditary saturated and S ⊆ B_H, ordered by H then S.
std::vector<HSPair> enumerate_TE(const Graph& g, const EnumerationCaps& caps = {});

InvariantOpen phi(const Graph& g, const HSPair& pair);
HSPair rho(const Graph& g, const InvariantOpen& u);

/// (H_U, S_U) for an open invariant set described by a cylinder-inclusion
/// decision and a point-membership predicate. Shared by rho and the
/// complement computation.
HSPair extract_pair(const Graph& g, const std::function<bool(const Cylinder&)>& contains_cylinder,
                    const std::function<bool(const BoundaryPath&)>& contains_point);

/// Transported join/meet: ρ(φ(a) ∪ φ(b)) and ρ(φ(a) ∩ φ(b)). When the graph
/// is small enough to enumerate, the result is cross-checked against the
/// order-theoretic bound and a mismatch throws InvariantViolation.
HSPair join(const Graph& g, const HSPair& a, const HSPair& b);
HSPair meet(const Graph& g, const HSPair& a, const HSPair& b);

/// The enumerated lattice with cached order and join/meet tables.
class PairLattice {
  public:
    explicit PairLattice(const Graph& g, const EnumerationCaps& caps = {});

    const Graph& graph() const { return *graph_; }
    const std::vector<HSPair>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    std::size_t index_of(const HSPair& p) const; // throws ContractError if absent
    bool leq(std::size_t a, std::size_t b) const { return leq_[a * size() + b]; }

    // Indices into elements(); cross-checked against least upper / greatest
    // lower bounds.
    std::size_t join(std::size_t a, std::size_t b) const;
    std::size_t meet(std::size_t a, std::size_t b) const;

    /// Pairs (a, b) with a < b and nothing strictly between.
    std::vector<std::pair<std::size_t, std::size_t>> covering_relation() const;

  private:
    const Graph* graph_;
    std::vector<HSPair> elements_;
    std::vector<bool> leq_;
    mutable std::vector<std::optional<std::size_t>> join_cache_;
    mutable std::vector<std::optional<std::size_t>> meet_cache_;
};

/// ρ∘φ = id, order ⇔ inclusion over the canonical family, injectivity of φ,
/// lattice axioms and join/meet transport.
VerificationReport verify_lattice_iso(const Graph& g, const EnumerationCaps& caps = {});

/// Hasse diagram of (T_E, ≤) in DOT.
std::string hasse_dot(const Graph& g, const EnumerationCaps& caps = {});

} // namespace lpadecomp
