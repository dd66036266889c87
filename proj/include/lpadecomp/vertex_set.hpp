#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace lpadecomp {

using VertexId = std::uint32_t;

/// Subset of a graph's vertices, stored as a bitmap sized to the graph.
class VertexSet {
  public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe) : bits_(universe, false) {}
    VertexSet(std::size_t universe, std::initializer_list<VertexId> members);

    static VertexSet full(std::size_t universe);
    static VertexSet from_mask(std::size_t universe, std::uint64_t mask);

    std::size_t universe() const { return bits_.size(); }
    bool contains(VertexId v) const { return v < bits_.size() && bits_[v]; }
    void insert(VertexId v) { bits_.at(v) = true; }
    void erase(VertexId v) { bits_.at(v) = false; }

    std::size_t size() const;
    bool empty() const { return size() == 0; }
    bool is_full() const { return size() == bits_.size(); }
    std::vector<VertexId> members() const;

    bool is_subset_of(const VertexSet& o) const;
    bool intersects(const VertexSet& o) const;
    VertexSet operator|(const VertexSet& o) const;
    VertexSet operator&(const VertexSet& o) const;
    VertexSet operator-(const VertexSet& o) const;
    VertexSet complement() const;

    bool operator==(const VertexSet& o) const { return bits_ == o.bits_; }
    // Size first, then lexicographic over sorted member ids.
    std::strong_ordering operator<=>(const VertexSet& o) const;

  private:
    std::vector<bool> bits_;
};

} // namespace lpadecomp
