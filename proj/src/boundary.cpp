#include "lpadecomp/boundary.hpp"

#include "lpadecomp/errors.hpp"

#include <algorithm>
#include <numeric>

namespace lpadecomp {

VertexId range(const Graph& g, const FinitePath& p) {
    return p.edges.empty() ? p.start : g.bundle(p.edges.back().bundle).target;
}

void validate_path(const Graph& g, const FinitePath& p) {
    if (p.start >= g.vertex_count())
        throw InputError("path starts at an unknown vertex");
    VertexId at = p.start;
    for (const EdgeRef& e : p.edges) {
        if (e.bundle >= g.bundles().size())
            throw InputError("path uses an unknown bundle");
        const Bundle& b = g.bundle(e.bundle);
        if (b.multiplicity.is_finite() && e.index >= b.multiplicity.value())
            throw InputError("edge index " + std::to_string(e.index) + " out of range for bundle '" + b.id + "'");
        if (b.source != at)
            throw InputError("path does not chain: bundle '" + b.id + "' leaves " + g.vertex_name(b.source) +
                             ", expected " + g.vertex_name(at));
        at = b.target;
    }
}

std::vector<VertexId> itinerary(const Graph& g, const FinitePath& p) {
    std::vector<VertexId> out{p.start};
    for (const EdgeRef& e : p.edges)
        out.push_back(g.bundle(e.bundle).target);
    return out;
}

FinitePath concat(const Graph& g, const FinitePath& a, const FinitePath& b) {
    if (range(g, a) != b.start)
        throw ContractError("concat: paths do not chain");
    FinitePath out = a;
    out.edges.insert(out.edges.end(), b.edges.begin(), b.edges.end());
    return out;
}

FinitePath extend(FinitePath p, EdgeRef e) {
    p.edges.push_back(e);
    return p;
}

bool is_prefix(const FinitePath& prefix, const FinitePath& p) {
    return prefix.start == p.start && prefix.edges.size() <= p.edges.size() &&
           std::equal(prefix.edges.begin(), prefix.edges.end(), p.edges.begin());
}

FinitePath edge_path(const Graph& g, EdgeRef e) { return FinitePath{g.bundle(e.bundle).source, {e}}; }

// BoundaryPath

VertexId BoundaryPath::start() const { return is_finite() ? path().start : as_lasso().stem.start; }

std::optional<std::size_t> BoundaryPath::length() const {
    if (is_finite())
        return path().length();
    return std::nullopt;
}

EdgeRef BoundaryPath::edge_at(std::size_t i) const {
    if (is_finite())
        return path().edges.at(i);
    const auto& l = as_lasso();
    if (i < l.stem.length())
        return l.stem.edges[i];
    return l.cycle.edges[(i - l.stem.length()) % l.cycle.length()];
}

bool BoundaryPath::same_sequence(const BoundaryPath& o) const {
    if (start() != o.start() || is_finite() != o.is_finite())
        return false;
    if (is_finite())
        return path() == o.path();
    const auto& a = as_lasso();
    const auto& b = o.as_lasso();
    std::size_t horizon = std::max(a.stem.length(), b.stem.length()) + std::lcm(a.cycle.length(), b.cycle.length());
    for (std::size_t i = 0; i < horizon; ++i)
        if (edge_at(i) != o.edge_at(i))
            return false;
    return true;
}

void validate_boundary(const Graph& g, const BoundaryPath& x) {
    if (x.is_finite()) {
        validate_path(g, x.path());
        VertexId t = range(g, x.path());
        if (g.is_regular(t))
            throw InputError("finite boundary path must end at a sink or infinite emitter, not " + g.vertex_name(t));
        return;
    }
    const auto& l = x.as_lasso();
    validate_path(g, l.stem);
    validate_path(g, l.cycle);
    if (l.cycle.edges.empty())
        throw InputError("lasso cycle must be nonempty");
    if (l.cycle.start != range(g, l.stem) || range(g, l.cycle) != l.cycle.start)
        throw InputError("lasso cycle must start and end at the stem's range");
}

VertexSet vertex_set(const Graph& g, const BoundaryPath& x) {
    validate_boundary(g, x);
    VertexSet out = g.empty_set();
    auto add = [&](const FinitePath& p) {
        for (VertexId v : itinerary(g, p))
            out.insert(v);
    };
    if (x.is_finite()) {
        add(x.path());
    } else {
        add(x.as_lasso().stem);
        add(x.as_lasso().cycle);
    }
    return out;
}

bool has_prefix(const BoundaryPath& x, const FinitePath& mu) {
    if (x.start() != mu.start)
        return false;
    if (auto len = x.length(); len && *len < mu.length())
        return false;
    for (std::size_t i = 0; i < mu.length(); ++i)
        if (x.edge_at(i) != mu.edges[i])
            return false;
    return true;
}

BoundaryPath drop_prefix(const Graph& g, const BoundaryPath& x, std::size_t n) {
    if (x.is_finite()) {
        const FinitePath& p = x.path();
        if (n > p.length())
            throw ContractError("drop_prefix beyond path length");
        std::vector<VertexId> it = itinerary(g, p);
        return BoundaryPath::finite(FinitePath{it[n], {p.edges.begin() + static_cast<std::ptrdiff_t>(n), p.edges.end()}});
    }
    const auto& l = x.as_lasso();
    if (n <= l.stem.length()) {
        std::vector<VertexId> it = itinerary(g, l.stem);
        FinitePath stem{it[n], {l.stem.edges.begin() + static_cast<std::ptrdiff_t>(n), l.stem.edges.end()}};
        return BoundaryPath::lasso(std::move(stem), l.cycle);
    }
    std::size_t k = (n - l.stem.length()) % l.cycle.length();
    std::vector<VertexId> it = itinerary(g, l.cycle);
    FinitePath cycle{it[k], {}};
    for (std::size_t i = 0; i < l.cycle.length(); ++i)
        cycle.edges.push_back(l.cycle.edges[(k + i) % l.cycle.length()]);
    return BoundaryPath::lasso(FinitePath{it[k], {}}, std::move(cycle));
}

BoundaryPath prepend(const Graph& g, const FinitePath& mu, const BoundaryPath& x) {
    if (range(g, mu) != x.start())
        throw ContractError("prepend: path does not chain into boundary path");
    if (x.is_finite())
        return BoundaryPath::finite(concat(g, mu, x.path()));
    return BoundaryPath::lasso(concat(g, mu, x.as_lasso().stem), x.as_lasso().cycle);
}

bool in_cylinder(const Graph& g, const Cylinder& c, const BoundaryPath& x) {
    if (!has_prefix(x, c.base))
        return false;
    std::size_t n = c.base.length();
    if (x.length() && *x.length() == n)
        return true;
    EdgeRef next = x.edge_at(n);
    (void)g;
    return std::find(c.excluded.begin(), c.excluded.end(), next) == c.excluded.end();
}

bool membership(const Graph& g, const HSPair& pair, const BoundaryPath& x) {
    require_valid_pair(g, pair, "membership");
    VertexSet seen = vertex_set(g, x);
    if (seen.intersects(pair.H))
        return true;
    return x.is_finite() && pair.S.contains(range(g, x.path()));
}

bool membership(const Graph& g, const InvariantOpen& u, const BoundaryPath& x) {
    const auto& cs = u.components();
    auto member = [&](const HSPair& p) { return membership(g, p, x); };
    if (u.shape() == InvariantOpen::Shape::union_of)
        return std::any_of(cs.begin(), cs.end(), member);
    return std::all_of(cs.begin(), cs.end(), member);
}

bool brute_membership(const Graph& g, const HSPair& pair, const BoundaryPath& x, std::size_t depth) {
    if (depth == 0)
        throw ContractError("brute_membership: depth must be >= 1");
    validate_boundary(g, x);
    // Unroll edge by edge and apply r(x_n) ∈ H for some n, with r(x_0) = s(x).
    VertexId at = x.start();
    if (pair.H.contains(at))
        return true;
    std::size_t steps = depth;
    if (auto len = x.length())
        steps = std::min(steps, *len);
    for (std::size_t i = 0; i < steps; ++i) {
        at = g.bundle(x.edge_at(i).bundle).target;
        if (pair.H.contains(at))
            return true;
    }
    if (auto len = x.length(); len && *len <= depth)
        return pair.S.contains(at);
    return false;
}

// canonical family

namespace {

struct FamilyBuilder {
    const Graph& g;
    std::size_t max_length;
    std::vector<BoundaryPath> finite;
    std::vector<BoundaryPath> lassos;

    void finite_from(FinitePath& p, std::vector<bool>& on_path) {
        VertexId at = range(g, p);
        if (!g.is_regular(at))
            finite.push_back(BoundaryPath::finite(p));
        if (p.length() == max_length)
            return;
        for (BundleId b : g.out_bundles(at)) {
            VertexId next = g.bundle(b).target;
            if (on_path[next])
                continue;
            on_path[next] = true;
            p.edges.push_back(EdgeRef{b, 0});
            finite_from(p, on_path);
            p.edges.pop_back();
            on_path[next] = false;
        }
    }

    void cycles_from(const FinitePath& stem, FinitePath& cycle, std::vector<bool>& blocked) {
        VertexId at = range(g, cycle);
        if (cycle.length() == max_length)
            return;
        for (BundleId b : g.out_bundles(at)) {
            VertexId next = g.bundle(b).target;
            cycle.edges.push_back(EdgeRef{b, 0});
            if (next == cycle.start) {
                lassos.push_back(BoundaryPath::lasso(stem, cycle));
            } else if (!blocked[next]) {
                blocked[next] = true;
                cycles_from(stem, cycle, blocked);
                blocked[next] = false;
            }
            cycle.edges.pop_back();
        }
    }

    void lassos_from(FinitePath& stem, std::vector<bool>& on_stem) {
        VertexId at = range(g, stem);
        FinitePath cycle{at, {}};
        // Cycle may not revisit the stem: keeps the stem minimal.
        std::vector<bool> blocked = on_stem;
        cycles_from(stem, cycle, blocked);
        if (stem.length() == max_length)
            return;
        for (BundleId b : g.out_bundles(at)) {
            VertexId next = g.bundle(b).target;
            if (on_stem[next])
                continue;
            on_stem[next] = true;
            stem.edges.push_back(EdgeRef{b, 0});
            lassos_from(stem, on_stem);
            stem.edges.pop_back();
            on_stem[next] = false;
        }
    }
};

} // namespace

std::vector<BoundaryPath> canonical_family(const Graph& g, std::size_t max_length) {
    FamilyBuilder fb{g, max_length, {}, {}};
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        std::vector<bool> on_path(g.vertex_count(), false);
        on_path[v] = true;
        FinitePath p{v, {}};
        fb.finite_from(p, on_path);
        FinitePath stem{v, {}};
        fb.lassos_from(stem, on_path);
    }
    std::vector<BoundaryPath> out = std::move(fb.finite);
    out.insert(out.end(), fb.lassos.begin(), fb.lassos.end());
    return out;
}

// cylinder decisions

namespace {

// Bundles leaving range(c.base) that still carry at least one edge after
// removing the excluded ones.
std::vector<BundleId> usable_first_bundles(const Graph& g, const Cylinder& c) {
    VertexId w = range(g, c.base);
    std::vector<BundleId> out;
    for (BundleId b : g.out_bundles(w)) {
        const Multiplicity m = g.bundle(b).multiplicity;
        if (m.is_omega()) {
            out.push_back(b);
            continue;
        }
        std::vector<std::uint64_t> gone;
        for (const EdgeRef& e : c.excluded)
            if (e.bundle == b && e.index < m.value())
                gone.push_back(e.index);
        std::sort(gone.begin(), gone.end());
        gone.erase(std::unique(gone.begin(), gone.end()), gone.end());
        if (gone.size() < m.value())
            out.push_back(b);
    }
    return out;
}

void check_cylinder(const Graph& g, const Cylinder& c) {
    validate_path(g, c.base);
    VertexId w = range(g, c.base);
    for (const EdgeRef& e : c.excluded) {
        validate_path(g, FinitePath{w, {e}});
    }
}

bool subset_of_union(const Graph& g, const Cylinder& c, const VertexSet& H, const VertexSet& S) {
    for (VertexId v : itinerary(g, c.base))
        if (H.contains(v))
            return true;
    VertexId w = range(g, c.base);
    if (g.is_sink(w))
        return false;
    if (g.is_infinite_emitter(w) && !S.contains(w))
        return false;
    VertexSet seeds = g.empty_set();
    for (BundleId b : usable_first_bundles(g, c)) {
        VertexId t = g.bundle(b).target;
        if (!H.contains(t))
            seeds.insert(t);
    }
    VertexSet region = reachable_avoiding(g, seeds, H);
    for (VertexId t : region.members()) {
        if (g.is_sink(t))
            return false;
        if (g.is_infinite_emitter(t) && !S.contains(t))
            return false;
    }
    return !has_cycle_within(g, region);
}

} // namespace

bool cylinder_subset(const Graph& g, const Cylinder& c, const InvariantOpen& u) {
    check_cylinder(g, c);
    if (u.shape() == InvariantOpen::Shape::intersection_of) {
        return std::all_of(u.components().begin(), u.components().end(), [&](const HSPair& p) {
            return subset_of_union(g, c, p.H, p.S);
        });
    }
    VertexSet H = g.empty_set();
    VertexSet S = g.empty_set();
    for (const HSPair& p : u.components()) {
        H = H | p.H;
        S = S | p.S;
    }
    return subset_of_union(g, c, H, S);
}

bool cylinder_disjoint(const Graph& g, const Cylinder& c, const HSPair& pair) {
    check_cylinder(g, c);
    const auto first = usable_first_bundles(g, c);
    // Excluding every edge at a regular vertex leaves no boundary path.
    if (first.empty() && g.is_regular(range(g, c.base)))
        return true;
    for (VertexId v : itinerary(g, c.base))
        if (pair.H.contains(v))
            return false;
    VertexId w = range(g, c.base);
    if (pair.S.contains(w))
        return false;
    VertexSet seeds = g.empty_set();
    for (BundleId b : first)
        seeds.insert(g.bundle(b).target);
    VertexSet region = reachable_avoiding(g, seeds, g.empty_set());
    return !region.intersects(pair.H | pair.S);
}

// text forms

// brute-force cylinder oracle

namespace {

struct WalkUnroller {
    const Graph& g;
    const FinitePath& base;
    std::size_t depth;
    std::vector<BoundaryPath> out;

    void emit_from(FinitePath& walk, std::vector<VertexId>& visited) {
        const VertexId at = visited.back();
        if (!g.is_regular(at))
            out.push_back(BoundaryPath::finite(concat(g, base, walk)));
        // A repeated vertex closes a cycle: record it as a lasso.
        for (std::size_t i = 0; i + 1 < visited.size(); ++i) {
            if (visited[i] != at)
                continue;
            FinitePath stem{walk.start, {walk.edges.begin(), walk.edges.begin() + static_cast<std::ptrdiff_t>(i)}};
            FinitePath cycle{at, {walk.edges.begin() + static_cast<std::ptrdiff_t>(i), walk.edges.end()}};
            out.push_back(BoundaryPath::lasso(concat(g, base, stem), std::move(cycle)));
        }
    }

    void walk_from(FinitePath& walk, std::vector<VertexId>& visited, const std::vector<EdgeRef>& excluded) {
        emit_from(walk, visited);
        if (walk.length() == depth)
            return;
        for (BundleId b : g.out_bundles(visited.back())) {
            const Multiplicity m = g.bundle(b).multiplicity;
            // Any index outside the exclusions represents the whole bundle.
            std::uint64_t index = 0;
            while (std::find(excluded.begin(), excluded.end(), EdgeRef{b, index}) != excluded.end())
                ++index;
            if (m.is_finite() && index >= m.value())
                continue;
            walk.edges.push_back(EdgeRef{b, index});
            visited.push_back(g.bundle(b).target);
            walk_from(walk, visited, {});
            visited.pop_back();
            walk.edges.pop_back();
        }
    }
};

} // namespace

std::vector<BoundaryPath> cylinder_points(const Graph& g, const Cylinder& c, std::size_t depth) {
    check_cylinder(g, c);
    const VertexId w = range(g, c.base);
    WalkUnroller u{g, c.base, depth, {}};
    FinitePath walk{w, {}};
    std::vector<VertexId> visited{w};
    u.walk_from(walk, visited, c.excluded);
    return std::move(u.out);
}

bool brute_cylinder_subset(const Graph& g, const Cylinder& c, const InvariantOpen& u, std::size_t depth) {
    const std::size_t unroll = c.base.length() + 2 * depth + 2;
    for (const BoundaryPath& x : cylinder_points(g, c, depth)) {
        auto member = [&](const HSPair& p) { return brute_membership(g, p, x, unroll); };
        const auto& comps = u.components();
        const bool in = u.shape() == InvariantOpen::Shape::union_of ? std::any_of(comps.begin(), comps.end(), member)
                                                                    : std::all_of(comps.begin(), comps.end(), member);
        if (!in)
            return false;
    }
    return true;
}

bool brute_cylinder_disjoint(const Graph& g, const Cylinder& c, const HSPair& pair, std::size_t depth) {
    const std::size_t unroll = c.base.length() + 2 * depth + 2;
    const auto points = cylinder_points(g, c, depth);
    return std::none_of(points.begin(), points.end(),
                        [&](const BoundaryPath& x) { return brute_membership(g, pair, x, unroll); });
}

std::string format_edge(const Graph& g, EdgeRef e) {
    std::string s = g.bundle(e.bundle).id;
    if (e.index != 0)
        s += "[" + std::to_string(e.index) + "]";
    return s;
}

namespace {
std::string join_edges(const Graph& g, const std::vector<EdgeRef>& edges) {
    std::string out;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (i)
            out += ',';
        out += format_edge(g, edges[i]);
    }
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

std::vector<EdgeRef> parse_edges(const Graph& g, std::string_view text) {
    std::vector<EdgeRef> out;
    text = trim(text);
    if (text.empty())
        return out;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        out.push_back(parse_edge(g, text.substr(pos, comma == std::string_view::npos ? comma : comma - pos)));
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return out;
}
} // namespace

std::string format_path(const Graph& g, const FinitePath& p) {
    return g.vertex_name(p.start) + ":" + join_edges(g, p.edges);
}

std::string format_boundary(const Graph& g, const BoundaryPath& x) {
    if (x.is_finite())
        return format_path(g, x.path());
    const auto& l = x.as_lasso();
    return g.vertex_name(l.stem.start) + ":" + join_edges(g, l.stem.edges) + "|" + join_edges(g, l.cycle.edges);
}

EdgeRef parse_edge(const Graph& g, std::string_view text) {
    text = trim(text);
    std::uint64_t index = 0;
    if (auto open = text.find('['); open != std::string_view::npos) {
        if (text.back() != ']')
            throw InputError("malformed edge '" + std::string(text) + "'");
        std::string digits(text.substr(open + 1, text.size() - open - 2));
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw InputError("malformed edge index in '" + std::string(text) + "'");
        index = std::stoull(digits);
        text = text.substr(0, open);
    }
    auto b = g.find_bundle(text);
    if (!b)
        throw InputError("unknown bundle '" + std::string(text) + "'");
    const Multiplicity m = g.bundle(*b).multiplicity;
    if (m.is_finite() && index >= m.value())
        throw InputError("edge index " + std::to_string(index) + " out of range for bundle '" + std::string(text) + "'");
    return EdgeRef{*b, index};
}

FinitePath parse_path(const Graph& g, std::string_view text) {
    text = trim(text);
    auto colon = text.find(':');
    FinitePath p{g.vertex(trim(text.substr(0, colon))), {}};
    if (colon != std::string_view::npos)
        p.edges = parse_edges(g, text.substr(colon + 1));
    validate_path(g, p);
    return p;
}

BoundaryPath parse_boundary(const Graph& g, std::string_view text) {
    text = trim(text);
    auto bar = text.find('|');
    if (bar == std::string_view::npos) {
        BoundaryPath x = BoundaryPath::finite(parse_path(g, text));
        validate_boundary(g, x);
        return x;
    }
    FinitePath stem = parse_path(g, text.substr(0, bar));
    FinitePath cycle{range(g, stem), parse_edges(g, text.substr(bar + 1))};
    BoundaryPath x = BoundaryPath::lasso(std::move(stem), std::move(cycle));
    validate_boundary(g, x);
    return x;
}

} // namespace lpadecomp
