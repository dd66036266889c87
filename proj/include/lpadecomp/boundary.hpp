#pragma once

#include "lpadecomp/hs_pair.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace lpadecomp {

/// One edge inside a bundle. Any index is valid for an ω bundle.
struct EdgeRef {
    BundleId bundle = 0;
    std::uint64_t index = 0;
    auto operator<=>(const EdgeRef&) const = default;
};

/// Finite path; an empty edge list is the length-0 path at `start`.
struct FinitePath {
    VertexId start = 0;
    std::vector<EdgeRef> edges;

    std::size_t length() const { return edges.size(); }
    auto operator<=>(const FinitePath&) const = default;
};

VertexId range(const Graph& g, const FinitePath& p);
/// Throws InputError on broken chaining or out-of-range indices.
void validate_path(const Graph& g, const FinitePath& p);
/// Vertex after each step: [start, r(e1), ..., r(en)].
std::vector<VertexId> itinerary(const Graph& g, const FinitePath& p);
FinitePath concat(const Graph& g, const FinitePath& a, const FinitePath& b);
FinitePath extend(FinitePath p, EdgeRef e);
bool is_prefix(const FinitePath& prefix, const FinitePath& p);
FinitePath edge_path(const Graph& g, EdgeRef e);

/// A point of the unit space: a finite path ending at a sink or infinite
/// emitter, or a lasso stem·cycle^∞ standing for an eventually periodic
/// infinite path.
class BoundaryPath {
  public:
    struct Lasso {
        FinitePath stem;
        FinitePath cycle;
        auto operator<=>(const Lasso&) const = default;
    };

    static BoundaryPath finite(FinitePath p) { return BoundaryPath(std::move(p)); }
    static BoundaryPath lasso(FinitePath stem, FinitePath cycle) {
        return BoundaryPath(Lasso{std::move(stem), std::move(cycle)});
    }

    bool is_finite() const { return std::holds_alternative<FinitePath>(rep_); }
    const FinitePath& path() const { return std::get<FinitePath>(rep_); }
    const Lasso& as_lasso() const { return std::get<Lasso>(rep_); }

    VertexId start() const;
    std::optional<std::size_t> length() const;
    EdgeRef edge_at(std::size_t i) const;

    /// Equality as edge sequences (lassos compared by unrolling).
    bool same_sequence(const BoundaryPath& o) const;
    bool operator==(const BoundaryPath& o) const { return same_sequence(o); }

  private:
    explicit BoundaryPath(FinitePath p) : rep_(std::move(p)) {}
    explicit BoundaryPath(Lasso l) : rep_(std::move(l)) {}
    std::variant<FinitePath, Lasso> rep_;
};

void validate_boundary(const Graph& g, const BoundaryPath& x);
VertexSet vertex_set(const Graph& g, const BoundaryPath& x);
bool has_prefix(const BoundaryPath& x, const FinitePath& mu);
/// Shift by n edges; the result starts at the vertex reached after n steps.
BoundaryPath drop_prefix(const Graph& g, const BoundaryPath& x, std::size_t n);
BoundaryPath prepend(const Graph& g, const FinitePath& mu, const BoundaryPath& x);

/// Z(base \ excluded), excluded edges leaving range(base).
struct Cylinder {
    FinitePath base;
    std::vector<EdgeRef> excluded;
};

bool in_cylinder(const Graph& g, const Cylinder& c, const BoundaryPath& x);

/// x ∈ U_{H,S}.
bool membership(const Graph& g, const HSPair& pair, const BoundaryPath& x);
bool membership(const Graph& g, const InvariantOpen& u, const BoundaryPath& x);
/// Membership by literal unrolling to `depth` steps; independent oracle.
bool brute_membership(const Graph& g, const HSPair& pair, const BoundaryPath& x, std::size_t depth);

/// Simple finite boundary paths and minimal-stem lassos with simple cycles,
/// all of length <= max_length, using edge index 0 of every bundle.
std::vector<BoundaryPath> canonical_family(const Graph& g, std::size_t max_length);
inline std::vector<BoundaryPath> canonical_family(const Graph& g) {
    return canonical_family(g, g.vertex_count() + 1);
}

/// Z(base \ F) ⊆ U.
bool cylinder_subset(const Graph& g, const Cylinder& c, const InvariantOpen& u);
/// Z(base \ F) ∩ U_{H,S} = ∅.
bool cylinder_disjoint(const Graph& g, const Cylinder& c, const HSPair& pair);

/// Points of Z(base \ F) reached by unrolling every walk of up to `depth`
/// steps past the base: finite boundary paths where the walk stops at a
/// sink or infinite emitter, lassos wherever the walk closes a cycle.
std::vector<BoundaryPath> cylinder_points(const Graph& g, const Cylinder& c, std::size_t depth);
/// Oracles for cylinder_subset / cylinder_disjoint over cylinder_points,
/// judged by brute_membership.
bool brute_cylinder_subset(const Graph& g, const Cylinder& c, const InvariantOpen& u, std::size_t depth);
bool brute_cylinder_disjoint(const Graph& g, const Cylinder& c, const HSPair& pair, std::size_t depth);

// Text forms: "u:e,f[3]" (finite), "u:e|c1,c2" (lasso), "u:" (length 0).
std::string format_edge(const Graph& g, EdgeRef e);
std::string format_path(const Graph& g, const FinitePath& p);
std::string format_boundary(const Graph& g, const BoundaryPath& x);
EdgeRef parse_edge(const Graph& g, std::string_view text);
FinitePath parse_path(const Graph& g, std::string_view text);
BoundaryPath parse_boundary(const Graph& g, std::string_view text);

} // namespace lpadecomp
