#pragma once

#include "lpadecomp/graph.hpp"

#include <compare>
#include <string>
#include <vector>

namespace lpadecomp {

/// (H, S) with H hereditary saturated and S ⊆ B_H; an element of the
/// lattice of admissible pairs.
struct HSPair {
    VertexSet H;
    VertexSet S;

    bool operator==(const HSPair&) const = default;
    std::strong_ordering operator<=>(const HSPair& o) const {
        if (auto c = H <=> o.H; c != 0)
            return c;
        return S <=> o.S;
    }
};

bool is_valid_pair(const Graph& g, const HSPair& p);
/// Throws ContractError naming the violated condition.
void require_valid_pair(const Graph& g, const HSPair& p, const char* where);
std::string format_pair(const Graph& g, const HSPair& p); // "H={..};S={..}"

/// Open invariant subset of the unit space, given as a one-level union or
/// intersection of φ-images of pairs.
class InvariantOpen {
  public:
    enum class Shape { union_of, intersection_of };

    InvariantOpen(Shape shape, std::vector<HSPair> components);
    static InvariantOpen single(HSPair p) { return InvariantOpen(Shape::union_of, {std::move(p)}); }
    static InvariantOpen union_of(std::vector<HSPair> c) { return InvariantOpen(Shape::union_of, std::move(c)); }
    static InvariantOpen intersection_of(std::vector<HSPair> c) {
        return InvariantOpen(Shape::intersection_of, std::move(c));
    }

    Shape shape() const { return shape_; }
    const std::vector<HSPair>& components() const { return components_; }

  private:
    Shape shape_;
    std::vector<HSPair> components_;
};

} // namespace lpadecomp
