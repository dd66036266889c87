#include "lpadecomp/graph.hpp"

#include "lpadecomp/errors.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace lpadecomp {

const char* to_string(VertexKind k) {
    switch (k) {
    case VertexKind::sink:
        return "sink";
    case VertexKind::regular:
        return "regular";
    case VertexKind::infinite_emitter:
        return "infinite-emitter";
    }
    return "?";
}

Graph::Graph(std::vector<std::string> vertices, const std::vector<BundleSpec>& bundles) : names_(std::move(vertices)) {
    std::set<std::string, std::less<>> seen;
    for (const auto& name : names_) {
        if (name.empty())
            throw InputError("vertex id must be nonempty");
        if (!seen.insert(name).second)
            throw InputError("duplicate vertex id '" + name + "'");
    }
    out_.resize(names_.size());
    for (const auto& spec : bundles) {
        if (spec.id.empty())
            throw InputError("bundle id must be nonempty");
        if (!seen.insert(spec.id).second)
            throw InputError("bundle id '" + spec.id + "' duplicates an existing vertex or bundle id");
        auto src = find_vertex(spec.source);
        if (!src)
            throw InputError("bundle '" + spec.id + "': source '" + spec.source + "' is not a declared vertex");
        auto dst = find_vertex(spec.target);
        if (!dst)
            throw InputError("bundle '" + spec.id + "': target '" + spec.target + "' is not a declared vertex");
        if (spec.multiplicity.is_zero())
            throw InputError("bundle '" + spec.id + "': multiplicity must be positive");
        out_[*src].push_back(static_cast<BundleId>(bundles_.size()));
        bundles_.push_back(Bundle{spec.id, *src, *dst, spec.multiplicity});
    }
    kinds_.resize(names_.size(), VertexKind::sink);
    for (VertexId v = 0; v < names_.size(); ++v) {
        if (out_[v].empty())
            continue;
        bool inf = std::any_of(out_[v].begin(), out_[v].end(),
                               [&](BundleId b) { return bundles_[b].multiplicity.is_omega(); });
        kinds_[v] = inf ? VertexKind::infinite_emitter : VertexKind::regular;
    }
}

std::optional<VertexId> Graph::find_vertex(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end())
        return std::nullopt;
    return static_cast<VertexId>(it - names_.begin());
}

VertexId Graph::vertex(std::string_view name) const {
    if (auto v = find_vertex(name))
        return *v;
    throw InputError("unknown vertex '" + std::string(name) + "'");
}

std::optional<BundleId> Graph::find_bundle(std::string_view id) const {
    for (BundleId b = 0; b < bundles_.size(); ++b)
        if (bundles_[b].id == id)
            return b;
    return std::nullopt;
}

VertexSet Graph::make_set(const std::vector<std::string>& names) const {
    VertexSet s = empty_set();
    for (const auto& n : names)
        s.insert(vertex(n));
    return s;
}

std::string Graph::format_set(const VertexSet& s) const {
    std::string out = "{";
    bool first = true;
    for (VertexId v : s.members()) {
        if (!first)
            out += ',';
        out += names_[v];
        first = false;
    }
    return out + "}";
}

bool Graph::operator==(const Graph& o) const {
    if (names_ != o.names_ || bundles_.size() != o.bundles_.size())
        return false;
    for (std::size_t i = 0; i < bundles_.size(); ++i) {
        const auto& a = bundles_[i];
        const auto& b = o.bundles_[i];
        if (a.id != b.id || a.source != b.source || a.target != b.target || a.multiplicity != b.multiplicity)
            return false;
    }
    return true;
}

namespace {
void check_vertex(const Graph& g, VertexId v) {
    if (v >= g.vertex_count())
        throw InputError("vertex index " + std::to_string(v) + " out of range");
}
void check_set(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.vertex_count())
        throw InputError("vertex set does not belong to this graph");
}
} // namespace

VertexKind classify_vertex(const Graph& g, VertexId v) {
    check_vertex(g, v);
    return g.kind(v);
}

Multiplicity out_count_into(const Graph& g, VertexId v, const VertexSet& targets) {
    check_vertex(g, v);
    check_set(g, targets);
    Multiplicity total(0);
    for (BundleId b : g.out_bundles(v))
        if (targets.contains(g.bundle(b).target))
            total += g.bundle(b).multiplicity;
    return total;
}

VertexSet reaching_set(const Graph& g, const VertexSet& targets) {
    check_set(g, targets);
    VertexSet reached = targets;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& b : g.bundles())
            if (reached.contains(b.target) && !reached.contains(b.source)) {
                reached.insert(b.source);
                changed = true;
            }
    }
    return reached;
}

bool has_cycle_within(const Graph& g, const VertexSet& region) {
    // Kahn's algorithm on the induced subgraph.
    std::vector<std::size_t> indeg(g.vertex_count(), 0);
    for (const auto& b : g.bundles())
        if (region.contains(b.source) && region.contains(b.target))
            ++indeg[b.target];
    std::vector<VertexId> ready;
    std::size_t remaining = region.size();
    for (VertexId v : region.members())
        if (indeg[v] == 0)
            ready.push_back(v);
    while (!ready.empty()) {
        VertexId v = ready.back();
        ready.pop_back();
        --remaining;
        for (BundleId b : g.out_bundles(v)) {
            VertexId t = g.bundle(b).target;
            if (region.contains(t) && --indeg[t] == 0)
                ready.push_back(t);
        }
    }
    return remaining != 0;
}

VertexSet reachable_avoiding(const Graph& g, const VertexSet& from, const VertexSet& blocked) {
    VertexSet seeds = from;
    std::vector<VertexId> stack = seeds.members();
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (BundleId b : g.out_bundles(v)) {
            VertexId t = g.bundle(b).target;
            if (!blocked.contains(t) && !seeds.contains(t)) {
                seeds.insert(t);
                stack.push_back(t);
            }
        }
    }
    return seeds;
}

bool reaches(const Graph& g, VertexId v, const VertexSet& targets) {
    check_vertex(g, v);
    check_set(g, targets);
    std::vector<bool> seen(g.vertex_count(), false);
    std::deque<VertexId> queue{v};
    seen[v] = true;
    while (!queue.empty()) {
        VertexId x = queue.front();
        queue.pop_front();
        if (targets.contains(x))
            return true;
        for (BundleId b : g.out_bundles(x)) {
            VertexId y = g.bundle(b).target;
            if (!seen[y]) {
                seen[y] = true;
                queue.push_back(y);
            }
        }
    }
    return false;
}

bool is_hereditary(const Graph& g, const VertexSet& h) {
    check_set(g, h);
    return std::all_of(g.bundles().begin(), g.bundles().end(),
                       [&](const Bundle& b) { return !h.contains(b.source) || h.contains(b.target); });
}

namespace {
bool saturated_unchecked(const Graph& g, const VertexSet& h) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (h.contains(v) || !g.is_regular(v))
            continue;
        auto out = g.out_bundles(v);
        if (std::all_of(out.begin(), out.end(), [&](BundleId b) { return h.contains(g.bundle(b).target); }))
            return false;
    }
    return true;
}
} // namespace

bool is_saturated(const Graph& g, const VertexSet& h) {
    if (!is_hereditary(g, h))
        throw ContractError("is_saturated: " + g.format_set(h) + " is not hereditary");
    return saturated_unchecked(g, h);
}

bool is_hereditary_saturated(const Graph& g, const VertexSet& h) {
    return is_hereditary(g, h) && saturated_unchecked(g, h);
}

VertexSet hs_closure(const Graph& g, const VertexSet& x) {
    check_set(g, x);
    VertexSet h = x;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& b : g.bundles())
            if (h.contains(b.source) && !h.contains(b.target)) {
                h.insert(b.target);
                changed = true;
            }
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            if (h.contains(v) || !g.is_regular(v))
                continue;
            auto out = g.out_bundles(v);
            if (std::all_of(out.begin(), out.end(), [&](BundleId b) { return h.contains(g.bundle(b).target); })) {
                h.insert(v);
                changed = true;
            }
        }
    }
    return h;
}

std::vector<VertexSet> enumerate_hs(const Graph& g, const EnumerationCaps& caps) {
    const std::size_t n = g.vertex_count();
    if (n > caps.max_vertices || n >= 63)
        throw ResourceError("graph has " + std::to_string(n) + " vertices; enumeration cap is " +
                            std::to_string(caps.max_vertices));
    std::vector<VertexSet> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        VertexSet s = VertexSet::from_mask(n, mask);
        if (is_hereditary_saturated(g, s))
            out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

VertexSet breaking_vertices(const Graph& g, const VertexSet& h) {
    check_set(g, h);
    VertexSet outside = h.complement();
    VertexSet out = g.empty_set();
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (h.contains(v) || !g.is_infinite_emitter(v))
            continue;
        Multiplicity c = out_count_into(g, v, outside);
        if (!c.is_zero() && c.is_finite())
            out.insert(v);
    }
    return out;
}

} // namespace lpadecomp
