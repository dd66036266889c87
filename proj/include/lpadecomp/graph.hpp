#pragma once

#include "lpadecomp/multiplicity.hpp"
#include "lpadecomp/vertex_set.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lpadecomp {

using BundleId = std::uint32_t;

enum class VertexKind { sink, regular, infinite_emitter };

const char* to_string(VertexKind k);

/// A family of parallel edges source -> target. Individual edges are
/// addressed as (bundle, index) with index < multiplicity.
struct Bundle {
    std::string id;
    VertexId source = 0;
    VertexId target = 0;
    Multiplicity multiplicity{1};
};

struct BundleSpec {
    std::string id;
    std::string source;
    std::string target;
    Multiplicity multiplicity{1};
};

/// Finite bundle-graph. Immutable once constructed; the constructor
/// validates ids, endpoints and multiplicities and throws InputError.
class Graph {
  public:
    Graph() = default;
    Graph(std::vector<std::string> vertices, const std::vector<BundleSpec>& bundles);

    std::size_t vertex_count() const { return names_.size(); }
    const std::vector<std::string>& vertex_names() const { return names_; }
    const std::string& vertex_name(VertexId v) const { return names_.at(v); }
    std::optional<VertexId> find_vertex(std::string_view name) const;
    VertexId vertex(std::string_view name) const; // throws InputError

    const std::vector<Bundle>& bundles() const { return bundles_; }
    const Bundle& bundle(BundleId b) const { return bundles_.at(b); }
    std::optional<BundleId> find_bundle(std::string_view id) const;
    std::span<const BundleId> out_bundles(VertexId v) const { return out_.at(v); }

    VertexKind kind(VertexId v) const { return kinds_.at(v); }
    bool is_sink(VertexId v) const { return kind(v) == VertexKind::sink; }
    bool is_regular(VertexId v) const { return kind(v) == VertexKind::regular; }
    bool is_infinite_emitter(VertexId v) const { return kind(v) == VertexKind::infinite_emitter; }

    VertexSet empty_set() const { return VertexSet(vertex_count()); }
    VertexSet all_vertices() const { return VertexSet::full(vertex_count()); }
    VertexSet make_set(const std::vector<std::string>& names) const;
    std::string format_set(const VertexSet& s) const; // "{u,v}"

    bool operator==(const Graph& o) const;

  private:
    std::vector<std::string> names_;
    std::vector<Bundle> bundles_;
    std::vector<std::vector<BundleId>> out_;
    std::vector<VertexKind> kinds_;
};

// Hereditary / saturated machinery.

VertexKind classify_vertex(const Graph& g, VertexId v);

/// |s^{-1}(v) ∩ r^{-1}(targets)| with ω absorbing; zero permitted.
Multiplicity out_count_into(const Graph& g, VertexId v, const VertexSet& targets);

/// Path(v, targets) != ∅, length-0 paths included.
bool reaches(const Graph& g, VertexId v, const VertexSet& targets);

/// Vertices that reach `targets` (including the targets themselves).
VertexSet reaching_set(const Graph& g, const VertexSet& targets);

/// Vertices reachable from `seeds` (seeds included) without entering `blocked`.
VertexSet reachable_avoiding(const Graph& g, const VertexSet& seeds, const VertexSet& blocked);

/// Whether the subgraph induced on `region` contains a cycle.
bool has_cycle_within(const Graph& g, const VertexSet& region);

bool is_hereditary(const Graph& g, const VertexSet& h);
/// Throws ContractError if `h` is not hereditary.
bool is_saturated(const Graph& g, const VertexSet& h);
bool is_hereditary_saturated(const Graph& g, const VertexSet& h);

VertexSet hs_closure(const Graph& g, const VertexSet& x);

struct EnumerationCaps {
    std::size_t max_vertices = 16;
    std::size_t max_breaking = 16;
};

/// All hereditary saturated subsets, ordered by size then lexicographically.
std::vector<VertexSet> enumerate_hs(const Graph& g, const EnumerationCaps& caps = {});

VertexSet breaking_vertices(const Graph& g, const VertexSet& h);

} // namespace lpadecomp
