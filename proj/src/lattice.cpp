#include "lpadecomp/lattice.hpp"

#include "lpadecomp/errors.hpp"

#include <algorithm>
#include <sstream>

namespace lpadecomp {

bool pair_leq(const Graph& g, const HSPair& a, const HSPair& b) {
    if (a.H.universe() != g.vertex_count() || b.H.universe() != g.vertex_count())
        throw InputError("pair_leq: pairs do not belong to this graph");
    return a.H.is_subset_of(b.H) && a.S.is_subset_of(b.S | b.H);
}

std::vector<HSPair> enumerate_TE(const Graph& g, const EnumerationCaps& caps) {
    std::vector<HSPair> out;
    for (const VertexSet& h : enumerate_hs(g, caps)) {
        const VertexSet bh = breaking_vertices(g, h);
        const std::vector<VertexId> members = bh.members();
        if (members.size() > caps.max_breaking)
            throw ResourceError("|B_H| = " + std::to_string(members.size()) + " for H=" + g.format_set(h) +
                                " exceeds the cap of " + std::to_string(caps.max_breaking));
        std::vector<VertexSet> subsets;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << members.size()); ++mask) {
            VertexSet s = g.empty_set();
            for (std::size_t i = 0; i < members.size(); ++i)
                if (mask >> i & 1U)
                    s.insert(members[i]);
            subsets.push_back(std::move(s));
        }
        std::sort(subsets.begin(), subsets.end());
        for (auto& s : subsets)
            out.push_back(HSPair{h, std::move(s)});
    }
    return out;
}

InvariantOpen phi(const Graph& g, const HSPair& pair) {
    require_valid_pair(g, pair, "phi");
    return InvariantOpen::single(pair);
}

HSPair extract_pair(const Graph& g, const std::function<bool(const Cylinder&)>& contains_cylinder,
                    const std::function<bool(const BoundaryPath&)>& contains_point) {
    HSPair out{g.empty_set(), g.empty_set()};
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (contains_cylinder(Cylinder{FinitePath{v, {}}, {}}))
            out.H.insert(v);
    // A finite boundary path ending at w ∉ H_U avoids H_U entirely, so its
    // membership equals that of the length-0 path at w.
    for (VertexId w = 0; w < g.vertex_count(); ++w)
        if (g.is_infinite_emitter(w) && !out.H.contains(w) && contains_point(BoundaryPath::finite(FinitePath{w, {}})))
            out.S.insert(w);
    return out;
}

HSPair rho(const Graph& g, const InvariantOpen& u) {
    return extract_pair(
        g, [&](const Cylinder& c) { return cylinder_subset(g, c, u); },
        [&](const BoundaryPath& x) { return membership(g, u, x); });
}

namespace {

bool enumerable(const Graph& g) { return g.vertex_count() <= EnumerationCaps{}.max_vertices; }

// Confirms that `r` is the least upper (or greatest lower) bound of a and b
// among all enumerated pairs.
void check_bound(const Graph& g, const HSPair& a, const HSPair& b, const HSPair& r, bool upper, const char* what) {
    if (!enumerable(g))
        return;
    std::vector<HSPair> all;
    try {
        all = enumerate_TE(g);
    } catch (const ResourceError&) {
        return;
    }
    auto below = [&](const HSPair& x, const HSPair& y) { return upper ? pair_leq(g, x, y) : pair_leq(g, y, x); };
    bool ok = below(a, r) && below(b, r);
    for (const HSPair& c : all)
        if (ok && below(a, c) && below(b, c))
            ok = below(r, c);
    if (!ok)
        throw InvariantViolation(std::string(what) + " of " + format_pair(g, a) + " and " + format_pair(g, b) +
                                 " via rho gives " + format_pair(g, r) + ", which is not the order-theoretic bound");
}

} // namespace

HSPair join(const Graph& g, const HSPair& a, const HSPair& b) {
    require_valid_pair(g, a, "join");
    require_valid_pair(g, b, "join");
    HSPair r = rho(g, InvariantOpen::union_of({a, b}));
    check_bound(g, a, b, r, true, "join");
    return r;
}

HSPair meet(const Graph& g, const HSPair& a, const HSPair& b) {
    require_valid_pair(g, a, "meet");
    require_valid_pair(g, b, "meet");
    HSPair r = rho(g, InvariantOpen::intersection_of({a, b}));
    check_bound(g, a, b, r, false, "meet");
    return r;
}

// PairLattice

PairLattice::PairLattice(const Graph& g, const EnumerationCaps& caps) : graph_(&g), elements_(enumerate_TE(g, caps)) {
    const std::size_t n = elements_.size();
    leq_.assign(n * n, false);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            leq_[i * n + j] = pair_leq(g, elements_[i], elements_[j]);
    join_cache_.assign(n * n, std::nullopt);
    meet_cache_.assign(n * n, std::nullopt);
}

std::size_t PairLattice::index_of(const HSPair& p) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
    if (it == elements_.end() || !(*it == p))
        throw ContractError("pair " + format_pair(*graph_, p) + " is not an element of the lattice");
    return static_cast<std::size_t>(it - elements_.begin());
}

std::size_t PairLattice::join(std::size_t a, std::size_t b) const {
    auto& slot = join_cache_[a * size() + b];
    if (slot)
        return *slot;
    const HSPair r = rho(*graph_, InvariantOpen::union_of({elements_[a], elements_[b]}));
    auto it = std::lower_bound(elements_.begin(), elements_.end(), r);
    if (it == elements_.end() || !(*it == r))
        throw InvariantViolation("join: rho produced " + format_pair(*graph_, r) + ", not a lattice element");
    const auto j = static_cast<std::size_t>(it - elements_.begin());
    bool least = leq(a, j) && leq(b, j);
    for (std::size_t u = 0; least && u < size(); ++u)
        if (leq(a, u) && leq(b, u) && !leq(j, u))
            least = false;
    if (!least)
        throw InvariantViolation("join of " + format_pair(*graph_, elements_[a]) + " and " +
                                 format_pair(*graph_, elements_[b]) + " via rho (" + format_pair(*graph_, r) +
                                 ") is not the least upper bound");
    slot = j;
    return j;
}

std::size_t PairLattice::meet(std::size_t a, std::size_t b) const {
    auto& slot = meet_cache_[a * size() + b];
    if (slot)
        return *slot;
    const HSPair r = rho(*graph_, InvariantOpen::intersection_of({elements_[a], elements_[b]}));
    auto it = std::lower_bound(elements_.begin(), elements_.end(), r);
    if (it == elements_.end() || !(*it == r))
        throw InvariantViolation("meet: rho produced " + format_pair(*graph_, r) + ", not a lattice element");
    const auto m = static_cast<std::size_t>(it - elements_.begin());
    bool greatest = leq(m, a) && leq(m, b);
    for (std::size_t l = 0; greatest && l < size(); ++l)
        if (leq(l, a) && leq(l, b) && !leq(l, m))
            greatest = false;
    if (!greatest)
        throw InvariantViolation("meet of " + format_pair(*graph_, elements_[a]) + " and " +
                                 format_pair(*graph_, elements_[b]) + " via rho (" + format_pair(*graph_, r) +
                                 ") is not the greatest lower bound");
    slot = m;
    return m;
}

std::vector<std::pair<std::size_t, std::size_t>> PairLattice::covering_relation() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < size(); ++a)
        for (std::size_t b = 0; b < size(); ++b) {
            if (a == b || !leq(a, b))
                continue;
            bool covers = true;
            for (std::size_t c = 0; covers && c < size(); ++c)
                if (c != a && c != b && leq(a, c) && leq(c, b))
                    covers = false;
            if (covers)
                out.emplace_back(a, b);
        }
    return out;
}

// verification

namespace {

struct FamilyPoint {
    VertexSet seen;
    std::optional<VertexId> terminal;
};

std::vector<FamilyPoint> prepare_family(const Graph& g, const std::vector<BoundaryPath>& family) {
    std::vector<FamilyPoint> out;
    out.reserve(family.size());
    for (const auto& x : family) {
        FamilyPoint fp{vertex_set(g, x), std::nullopt};
        if (x.is_finite())
            fp.terminal = range(g, x.path());
        out.push_back(std::move(fp));
    }
    return out;
}

std::vector<bool> membership_vector(const std::vector<FamilyPoint>& fam, const HSPair& p) {
    std::vector<bool> out(fam.size());
    for (std::size_t i = 0; i < fam.size(); ++i)
        out[i] = fam[i].seen.intersects(p.H) || (fam[i].terminal && p.S.contains(*fam[i].terminal));
    return out;
}

bool implies(const std::vector<bool>& a, const std::vector<bool>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && !b[i])
            return false;
    return true;
}

} // namespace

VerificationReport verify_lattice_iso(const Graph& g, const EnumerationCaps& caps) {
    VerificationReport rep;
    PairLattice lat(g, caps);
    const auto& T = lat.elements();
    const std::size_t n = T.size();
    const auto family = canonical_family(g);
    const auto fam = prepare_family(g, family);

    std::vector<std::vector<bool>> vec(n);
    for (std::size_t i = 0; i < n; ++i)
        vec[i] = membership_vector(fam, T[i]);

    {
        std::string detail;
        for (std::size_t i = 0; i < n && detail.empty(); ++i) {
            HSPair back = rho(g, phi(g, T[i]));
            if (!(back == T[i]))
                detail = format_pair(g, T[i]) + " maps back to " + format_pair(g, back);
        }
        rep.add("rho_phi_identity", detail.empty(), detail);
    }
    {
        std::string detail;
        for (std::size_t i = 0; i < n && detail.empty(); ++i)
            for (std::size_t j = 0; j < n && detail.empty(); ++j) {
                bool incl = implies(vec[i], vec[j]);
                if (lat.leq(i, j) == incl)
                    continue;
                detail = format_pair(g, T[i]) + (lat.leq(i, j) ? " <= " : " !<= ") + format_pair(g, T[j]) +
                         " but inclusion of phi-images is " + (incl ? "true" : "false");
                if (!incl)
                    for (std::size_t k = 0; k < family.size(); ++k)
                        if (vec[i][k] && !vec[j][k]) {
                            detail += " (witness " + format_boundary(g, family[k]) + ")";
                            break;
                        }
            }
        rep.add("order_iff_inclusion", detail.empty(), detail);
    }
    {
        std::string detail;
        for (std::size_t i = 0; i < n && detail.empty(); ++i)
            for (std::size_t j = i + 1; j < n && detail.empty(); ++j)
                if (vec[i] == vec[j])
                    detail = format_pair(g, T[i]) + " and " + format_pair(g, T[j]) + " have identical membership";
        rep.add("phi_injective", detail.empty(), detail);
    }
    {
        std::string detail;
        try {
            for (std::size_t a = 0; a < n && detail.empty(); ++a) {
                if (lat.join(a, a) != a || lat.meet(a, a) != a)
                    detail = "idempotence fails at " + format_pair(g, T[a]);
                for (std::size_t b = 0; b < n && detail.empty(); ++b) {
                    const std::size_t j = lat.join(a, b);
                    const std::size_t m = lat.meet(a, b);
                    if (j != lat.join(b, a) || m != lat.meet(b, a))
                        detail = "commutativity fails at " + format_pair(g, T[a]) + ", " + format_pair(g, T[b]);
                    else if (lat.join(a, m) != a || lat.meet(a, j) != a)
                        detail = "absorption fails at " + format_pair(g, T[a]) + ", " + format_pair(g, T[b]);
                    for (std::size_t c = 0; c < n && detail.empty(); ++c)
                        if (lat.join(j, c) != lat.join(a, lat.join(b, c)) ||
                            lat.meet(m, c) != lat.meet(a, lat.meet(b, c)))
                            detail = "associativity fails at " + format_pair(g, T[a]) + ", " + format_pair(g, T[b]) +
                                     ", " + format_pair(g, T[c]);
                }
            }
        } catch (const InvariantViolation& e) {
            detail = e.what();
        }
        rep.add("lattice_axioms", detail.empty(), detail);
    }
    {
        std::string detail;
        try {
            for (std::size_t a = 0; a < n && detail.empty(); ++a)
                for (std::size_t b = 0; b < n && detail.empty(); ++b) {
                    std::vector<bool> u(fam.size()), i(fam.size());
                    for (std::size_t k = 0; k < fam.size(); ++k) {
                        u[k] = vec[a][k] || vec[b][k];
                        i[k] = vec[a][k] && vec[b][k];
                    }
                    if (vec[lat.join(a, b)] != u)
                        detail = "phi(join) differs from the union for " + format_pair(g, T[a]) + ", " +
                                 format_pair(g, T[b]);
                    else if (vec[lat.meet(a, b)] != i)
                        detail = "phi(meet) differs from the intersection for " + format_pair(g, T[a]) + ", " +
                                 format_pair(g, T[b]);
                }
        } catch (const InvariantViolation& e) {
            detail = e.what();
        }
        rep.add("join_meet_transport", detail.empty(), detail);
    }
    return rep;
}

std::string hasse_dot(const Graph& g, const EnumerationCaps& caps) {
    PairLattice lat(g, caps);
    std::ostringstream os;
    os << "digraph hasse {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < lat.size(); ++i)
        os << "  n" << i << " [label=\"" << format_pair(g, lat.elements()[i]) << "\"];\n";
    for (auto [a, b] : lat.covering_relation())
        os << "  n" << a << " -> n" << b << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace lpadecomp
