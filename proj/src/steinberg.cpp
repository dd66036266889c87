#include "lpadecomp/steinberg.hpp"

#include "lpadecomp/errors.hpp"
#include "lpadecomp/topology.hpp"

#include <algorithm>
#include <optional>

namespace lpadecomp {

void AlgebraElement::accumulate(const Field& k, const Atom& a, const Scalar& c) {
    auto [it, inserted] = terms_.try_emplace(a, 0);
    it->second = k.add(it->second, c);
    if (it->second == 0)
        terms_.erase(it);
}

namespace {

// Pure bisection Z(mu, nu) with no exclusions.
struct Span {
    FinitePath mu;
    FinitePath nu;
    auto operator<=>(const Span&) const = default;
};

using SpanMap = std::map<Span, Scalar>;

void add_span(SpanMap& m, const Field& k, Span s, const Scalar& c) {
    auto [it, inserted] = m.try_emplace(std::move(s), 0);
    it->second = k.add(it->second, c);
    if (it->second == 0)
        m.erase(it);
}

// 1_{Z((mu,nu)\F)} = 1_{Z(mu,nu)} - Σ_{e∈F} 1_{Z(mu e, nu e)}.
SpanMap expand(const Field& k, const AlgebraElement& a) {
    SpanMap out;
    for (const auto& [atom, c] : a.terms()) {
        add_span(out, k, Span{atom.mu, atom.nu}, c);
        for (const EdgeRef& e : atom.excluded)
            add_span(out, k, Span{extend(atom.mu, e), extend(atom.nu, e)}, -c);
    }
    return out;
}

std::vector<EdgeRef> suffix_after(const FinitePath& p, std::size_t n) {
    return {p.edges.begin() + static_cast<std::ptrdiff_t>(n), p.edges.end()};
}

FinitePath append_edges(FinitePath p, const std::vector<EdgeRef>& edges) {
    p.edges.insert(p.edges.end(), edges.begin(), edges.end());
    return p;
}

std::optional<Span> multiply(const Span& a, const Span& b) {
    if (is_prefix(a.nu, b.mu))
        return Span{append_edges(a.mu, suffix_after(b.mu, a.nu.length())), b.nu};
    if (is_prefix(b.mu, a.nu))
        return Span{a.mu, append_edges(b.nu, suffix_after(a.nu, b.mu.length()))};
    return std::nullopt;
}

// Normal-form tree for the function restricted to one root bisection.
struct Node {
    bool constant = true;
    Scalar value;      // when constant
    bool regular = false;
    Scalar fallback;   // value on the residual set at an infinite emitter
    std::map<EdgeRef, Node> children;

    bool is_const(const Scalar& v) const { return constant && value == v; }
};

struct Item {
    const std::vector<EdgeRef>* tail;
    Scalar coeff;
};

constexpr std::uint64_t kMaxRegularFanout = 100000;

class Normalizer {
  public:
    Normalizer(const Graph& g, const Field& k) : g_(g), k_(k) {}

    Node canon(VertexId w, const Scalar& base, const std::vector<Item>& items, std::size_t depth) const {
        if (items.empty())
            return Node{true, base, false, 0, {}};
        std::map<EdgeRef, std::pair<Scalar, std::vector<Item>>> groups;
        for (const Item& it : items) {
            auto& grp = groups[(*it.tail)[depth]];
            if (it.tail->size() == depth + 1)
                grp.first = k_.add(grp.first, it.coeff);
            else
                grp.second.push_back(it);
        }
        std::map<EdgeRef, Node> kids;
        for (auto& [e, grp] : groups)
            kids.emplace(e, canon(g_.bundle(e.bundle).target, k_.add(base, grp.first), grp.second, depth + 1));

        if (g_.is_regular(w)) {
            std::uint64_t fanout = 0;
            for (BundleId b : g_.out_bundles(w))
                fanout += g_.bundle(b).multiplicity.value();
            if (fanout > kMaxRegularFanout)
                throw ResourceError("regular vertex " + g_.vertex_name(w) + " emits too many edges to refine");
            for (BundleId b : g_.out_bundles(w))
                for (std::uint64_t i = 0; i < g_.bundle(b).multiplicity.value(); ++i)
                    kids.try_emplace(EdgeRef{b, i}, Node{true, base, false, 0, {}});
            const Node& first = kids.begin()->second;
            if (first.constant &&
                std::all_of(kids.begin(), kids.end(), [&](const auto& kv) { return kv.second.is_const(first.value); }))
                return Node{true, first.value, false, 0, {}};
            return Node{false, 0, true, 0, std::move(kids)};
        }
        std::erase_if(kids, [&](const auto& kv) { return kv.second.is_const(base); });
        if (kids.empty())
            return Node{true, base, false, 0, {}};
        return Node{false, 0, false, base, std::move(kids)};
    }

    void emit(const FinitePath& mu, const FinitePath& nu, const Node& n, AlgebraElement& out) const {
        if (n.constant) {
            if (n.value != 0)
                out.accumulate(k_, Atom{mu, nu, {}}, n.value);
            return;
        }
        if (!n.regular && n.fallback != 0) {
            std::vector<EdgeRef> excluded;
            for (const auto& kv : n.children)
                excluded.push_back(kv.first);
            out.accumulate(k_, Atom{mu, nu, std::move(excluded)}, n.fallback);
        }
        for (const auto& [e, child] : n.children)
            emit(extend(mu, e), extend(nu, e), child, out);
    }

  private:
    const Graph& g_;
    const Field& k_;
};

} // namespace

Atom SteinbergAlgebra::make_atom(FinitePath mu, FinitePath nu, std::vector<EdgeRef> excluded) const {
    validate_path(*g_, mu);
    validate_path(*g_, nu);
    const VertexId w = range(*g_, mu);
    if (w != range(*g_, nu))
        throw InputError("atom: ranges of " + format_path(*g_, mu) + " and " + format_path(*g_, nu) + " differ");
    for (const EdgeRef& e : excluded)
        validate_path(*g_, FinitePath{w, {e}});
    std::sort(excluded.begin(), excluded.end());
    excluded.erase(std::unique(excluded.begin(), excluded.end()), excluded.end());
    return Atom{std::move(mu), std::move(nu), std::move(excluded)};
}

AlgebraElement SteinbergAlgebra::indicator(const Atom& a, const Scalar& c) const {
    AlgebraElement out;
    out.accumulate(k_, a, k_.reduce(c));
    return out;
}

AlgebraElement SteinbergAlgebra::vertex(VertexId v) const {
    if (v >= g_->vertex_count())
        throw InputError("unknown vertex");
    return indicator(Atom{FinitePath{v, {}}, FinitePath{v, {}}, {}});
}

AlgebraElement SteinbergAlgebra::edge(EdgeRef e) const {
    FinitePath p = edge_path(*g_, e);
    validate_path(*g_, p);
    const VertexId r = range(*g_, p);
    return indicator(Atom{std::move(p), FinitePath{r, {}}, {}});
}

AlgebraElement SteinbergAlgebra::ghost(EdgeRef e) const {
    FinitePath p = edge_path(*g_, e);
    validate_path(*g_, p);
    const VertexId r = range(*g_, p);
    return indicator(Atom{FinitePath{r, {}}, std::move(p), {}});
}

AlgebraElement SteinbergAlgebra::vertex_relative(VertexId v, const VertexSet& H) const {
    if (v >= g_->vertex_count())
        throw InputError("unknown vertex");
    if (!breaking_vertices(*g_, H).contains(v))
        throw ContractError("vertex_relative: " + g_->vertex_name(v) + " is not a breaking vertex of " +
                            g_->format_set(H));
    std::vector<EdgeRef> leaving;
    for (BundleId b : g_->out_bundles(v)) {
        const Bundle& bd = g_->bundle(b);
        if (H.contains(bd.target))
            continue;
        for (std::uint64_t i = 0; i < bd.multiplicity.value(); ++i)
            leaving.push_back(EdgeRef{b, i});
    }
    return indicator(make_atom(FinitePath{v, {}}, FinitePath{v, {}}, std::move(leaving)));
}

AlgebraElement SteinbergAlgebra::add(const AlgebraElement& a, const AlgebraElement& b) const {
    AlgebraElement out = a;
    for (const auto& [atom, c] : b.terms())
        out.accumulate(k_, atom, c);
    return out;
}

AlgebraElement SteinbergAlgebra::subtract(const AlgebraElement& a, const AlgebraElement& b) const {
    AlgebraElement out = a;
    for (const auto& [atom, c] : b.terms())
        out.accumulate(k_, atom, k_.reduce(-c));
    return out;
}

AlgebraElement SteinbergAlgebra::scale(const AlgebraElement& a, const Scalar& c) const {
    AlgebraElement out;
    for (const auto& [atom, v] : a.terms())
        out.accumulate(k_, atom, k_.mul(v, c));
    return out;
}

AlgebraElement SteinbergAlgebra::product(const AlgebraElement& a, const AlgebraElement& b) const {
    const SpanMap left = expand(k_, a);
    const SpanMap right = expand(k_, b);
    SpanMap acc;
    for (const auto& [x, cx] : left)
        for (const auto& [y, cy] : right)
            if (auto z = multiply(x, y))
                add_span(acc, k_, std::move(*z), k_.mul(cx, cy));
    AlgebraElement out;
    for (auto& [s, c] : acc)
        out.accumulate(k_, Atom{s.mu, s.nu, {}}, c);
    return normalize(out);
}

AlgebraElement SteinbergAlgebra::normalize(const AlgebraElement& a) const {
    // Every bisection Z(mu, nu) sits under a unique root obtained by
    // stripping the longest common suffix of mu and nu; roots are disjoint.
    struct Group {
        Scalar base;
        std::vector<std::vector<EdgeRef>> tails;
        std::vector<Scalar> coeffs;
    };
    std::map<Span, Group> roots;
    for (const auto& [s, c] : expand(k_, a)) {
        std::size_t common = 0;
        while (common < s.mu.length() && common < s.nu.length() &&
               s.mu.edges[s.mu.length() - 1 - common] == s.nu.edges[s.nu.length() - 1 - common])
            ++common;
        Span root{FinitePath{s.mu.start, {s.mu.edges.begin(), s.mu.edges.end() - static_cast<std::ptrdiff_t>(common)}},
                  FinitePath{s.nu.start, {s.nu.edges.begin(), s.nu.edges.end() - static_cast<std::ptrdiff_t>(common)}}};
        Group& grp = roots[root];
        if (common == 0) {
            grp.base = k_.add(grp.base, c);
        } else {
            grp.tails.emplace_back(s.mu.edges.end() - static_cast<std::ptrdiff_t>(common), s.mu.edges.end());
            grp.coeffs.push_back(c);
        }
    }
    Normalizer norm(*g_, k_);
    AlgebraElement out;
    for (const auto& [root, grp] : roots) {
        std::vector<Item> items;
        for (std::size_t i = 0; i < grp.tails.size(); ++i)
            items.push_back(Item{&grp.tails[i], grp.coeffs[i]});
        const Node n = norm.canon(range(*g_, root.mu), grp.base, items, 0);
        norm.emit(root.mu, root.nu, n, out);
    }
    return out;
}

void SteinbergAlgebra::validate_point(const GroupoidPoint& p) const {
    validate_boundary(*g_, p.x);
    validate_boundary(*g_, p.y);
    bool ok = p.x.is_finite() == p.y.is_finite();
    if (ok && p.x.is_finite()) {
        ok = static_cast<std::int64_t>(p.x.path().length()) - static_cast<std::int64_t>(p.y.path().length()) == p.k &&
             range(*g_, p.x.path()) == range(*g_, p.y.path());
    } else if (ok) {
        const auto sx = static_cast<std::int64_t>(p.x.as_lasso().stem.length());
        const auto sy = static_cast<std::int64_t>(p.y.as_lasso().stem.length());
        const std::int64_t m = std::max({std::int64_t{0}, p.k, sx, sy + p.k});
        ok = drop_prefix(*g_, p.x, static_cast<std::size_t>(m)) ==
             drop_prefix(*g_, p.y, static_cast<std::size_t>(m - p.k));
    }
    if (!ok)
        throw InputError("groupoid point: " + format_boundary(*g_, p.x) + " and " + format_boundary(*g_, p.y) +
                         " share no tail at lag " + std::to_string(p.k));
}

bool SteinbergAlgebra::contains(const Atom& a, const GroupoidPoint& p) const {
    if (p.k != a.degree() || !has_prefix(p.x, a.mu) || !has_prefix(p.y, a.nu))
        return false;
    const BoundaryPath tx = drop_prefix(*g_, p.x, a.mu.length());
    const BoundaryPath ty = drop_prefix(*g_, p.y, a.nu.length());
    if (!(tx == ty))
        return false;
    if (tx.length() && *tx.length() == 0)
        return true;
    return !std::binary_search(a.excluded.begin(), a.excluded.end(), tx.edge_at(0));
}

Scalar SteinbergAlgebra::eval(const AlgebraElement& a, const GroupoidPoint& p) const {
    validate_point(p);
    Scalar total = 0;
    for (const auto& [atom, c] : a.terms())
        if (contains(atom, p))
            total = k_.add(total, c);
    return total;
}

AlgebraElement SteinbergAlgebra::degree_component(const AlgebraElement& a, std::int64_t n) const {
    AlgebraElement out;
    for (const auto& [atom, c] : a.terms())
        if (atom.degree() == n)
            out.accumulate(k_, atom, c);
    return out;
}

std::vector<std::int64_t> SteinbergAlgebra::degrees(const AlgebraElement& a) const {
    std::vector<std::int64_t> out;
    for (const auto& [atom, c] : a.terms())
        out.push_back(atom.degree());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool SteinbergAlgebra::ideal_membership(const AlgebraElement& a, const HSPair& pair) const {
    require_valid_pair(*g_, pair, "ideal_membership");
    const InvariantOpen u = InvariantOpen::single(pair);
    const AlgebraElement n = normalize(a);
    return std::all_of(n.terms().begin(), n.terms().end(), [&](const auto& kv) {
        return cylinder_subset(*g_, Cylinder{kv.first.nu, kv.first.excluded}, u);
    });
}

namespace {

class Splitter {
  public:
    Splitter(const Graph& g, const Field& k, const HSPair& pair)
        : g_(g), k_(k), pair_(pair), u_(InvariantOpen::single(pair)) {}

    void refine(const FinitePath& mu, const FinitePath& nu, const std::vector<EdgeRef>& excl, const Scalar& c,
                std::size_t depth) {
        const Cylinder cyl{nu, excl};
        if (cylinder_subset(g_, cyl, u_)) {
            inside.accumulate(k_, Atom{mu, nu, excl}, c);
            return;
        }
        if (cylinder_disjoint(g_, cyl, pair_)) {
            outside.accumulate(k_, Atom{mu, nu, excl}, c);
            return;
        }
        // A chain of mixed cylinders longer than |E^0| repeats a vertex,
        // giving a cycle outside H that reaches H; impossible when clopen.
        if (depth > g_.vertex_count() + 1)
            throw InvariantViolation("split_element: refinement does not terminate; pair is not clopen");
        const VertexId w = range(g_, nu);
        auto excluded = [&](EdgeRef e) { return std::find(excl.begin(), excl.end(), e) != excl.end(); };
        if (g_.is_regular(w)) {
            for (BundleId b : g_.out_bundles(w))
                for (std::uint64_t i = 0; i < g_.bundle(b).multiplicity.value(); ++i)
                    if (!excluded(EdgeRef{b, i}))
                        refine(extend(mu, EdgeRef{b, i}), extend(nu, EdgeRef{b, i}), {}, c, depth + 1);
            return;
        }
        if (!g_.is_infinite_emitter(w))
            throw InvariantViolation("split_element: mixed cylinder at a sink");
        // The residual Z(nu \ F) follows the side of the point nu itself.
        const bool point_inside = membership(g_, pair_, BoundaryPath::finite(nu));
        auto on_default_side = [&](const Cylinder& child) {
            return point_inside ? cylinder_subset(g_, child, u_) : cylinder_disjoint(g_, child, pair_);
        };
        std::vector<EdgeRef> residual_excl = excl;
        std::vector<EdgeRef> pending;
        for (BundleId b : g_.out_bundles(w)) {
            const Multiplicity m = g_.bundle(b).multiplicity;
            if (m.is_omega()) {
                if (!on_default_side(Cylinder{extend(nu, EdgeRef{b, 0}), {}}))
                    throw InvariantViolation("split_element: infinitely many edges of bundle '" + g_.bundle(b).id +
                                             "' cross the boundary; pair is not clopen");
                continue;
            }
            for (std::uint64_t i = 0; i < m.value(); ++i) {
                const EdgeRef e{b, i};
                if (excluded(e) || on_default_side(Cylinder{extend(nu, e), {}}))
                    continue;
                residual_excl.push_back(e);
                pending.push_back(e);
            }
        }
        std::sort(residual_excl.begin(), residual_excl.end());
        (point_inside ? inside : outside).accumulate(k_, Atom{mu, nu, residual_excl}, c);
        for (const EdgeRef& e : pending)
            refine(extend(mu, e), extend(nu, e), {}, c, depth + 1);
    }

    AlgebraElement inside;
    AlgebraElement outside;

  private:
    const Graph& g_;
    const Field& k_;
    const HSPair& pair_;
    InvariantOpen u_;
};

} // namespace

std::pair<AlgebraElement, AlgebraElement> SteinbergAlgebra::split_element(const AlgebraElement& a,
                                                                          const HSPair& pair) const {
    if (!is_clopen(*g_, pair).clopen)
        throw ContractError("split_element: " + format_pair(*g_, pair) + " is not clopen");
    Splitter sp(*g_, k_, pair);
    const AlgebraElement n = normalize(a);
    for (const auto& [atom, c] : n.terms())
        sp.refine(atom.mu, atom.nu, atom.excluded, c, 0);
    return {normalize(sp.inside), normalize(sp.outside)};
}

std::string SteinbergAlgebra::format_atom(const Atom& a) const {
    std::string s = "Z(" + format_path(*g_, a.mu) + ", " + format_path(*g_, a.nu);
    if (!a.excluded.empty()) {
        s += " \\ ";
        for (std::size_t i = 0; i < a.excluded.size(); ++i) {
            if (i)
                s += ",";
            s += format_edge(*g_, a.excluded[i]);
        }
    }
    return s + ")";
}

std::string SteinbergAlgebra::format(const AlgebraElement& a) const {
    if (a.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [atom, c] : a.terms()) {
        Scalar mag = c;
        bool negative = c < 0;
        if (negative)
            mag = -c;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (mag != 1)
            out += format_scalar(mag) + " ";
        out += format_atom(atom);
        first = false;
    }
    return out;
}

// Relations

VerificationReport verify_relations(const Graph& g, std::size_t omega_samples, Field k) {
    const SteinbergAlgebra alg(g, k);
    std::vector<EdgeRef> edges;
    for (BundleId b = 0; b < g.bundles().size(); ++b) {
        const Multiplicity m = g.bundle(b).multiplicity;
        const std::uint64_t n = m.is_omega() ? std::max<std::size_t>(omega_samples, 2) : m.value();
        for (std::uint64_t i = 0; i < n; ++i)
            edges.push_back(EdgeRef{b, i});
    }
    auto src = [&](EdgeRef e) { return alg.vertex(g.bundle(e.bundle).source); };
    auto rng = [&](EdgeRef e) { return alg.vertex(g.bundle(e.bundle).target); };

    VerificationReport rep;
    {
        std::string detail;
        for (VertexId v = 0; v < g.vertex_count() && detail.empty(); ++v)
            for (VertexId w = 0; w < g.vertex_count() && detail.empty(); ++w) {
                AlgebraElement expect = v == w ? alg.vertex(v) : AlgebraElement{};
                if (!alg.equal(alg.product(alg.vertex(v), alg.vertex(w)), expect))
                    detail = g.vertex_name(v) + " " + g.vertex_name(w);
            }
        rep.add("V", detail.empty(), detail);
    }
    auto e1_ok = [&](EdgeRef e) {
        return alg.equal(alg.product(src(e), alg.edge(e)), alg.edge(e)) &&
               alg.equal(alg.product(alg.edge(e), rng(e)), alg.edge(e));
    };
    auto e2_ok = [&](EdgeRef e) {
        return alg.equal(alg.product(rng(e), alg.ghost(e)), alg.ghost(e)) &&
               alg.equal(alg.product(alg.ghost(e), src(e)), alg.ghost(e));
    };
    auto ck1_ok = [&](EdgeRef e, EdgeRef f) {
        AlgebraElement expect = e == f ? rng(e) : AlgebraElement{};
        return alg.equal(alg.product(alg.ghost(e), alg.edge(f)), expect);
    };
    {
        std::string detail;
        for (EdgeRef e : edges)
            if (detail.empty() && !e1_ok(e))
                detail = format_edge(g, e);
        rep.add("E1", detail.empty(), detail);
    }
    {
        std::string detail;
        for (EdgeRef e : edges)
            if (detail.empty() && !e2_ok(e))
                detail = format_edge(g, e);
        rep.add("E2", detail.empty(), detail);
    }
    {
        std::string detail;
        for (EdgeRef e : edges)
            for (EdgeRef f : edges)
                if (detail.empty() && !ck1_ok(e, f))
                    detail = format_edge(g, e) + "* " + format_edge(g, f);
        rep.add("CK1", detail.empty(), detail);
    }
    {
        std::string detail;
        std::size_t instances = 0;
        for (VertexId v = 0; v < g.vertex_count() && detail.empty(); ++v) {
            if (!g.is_regular(v))
                continue;
            ++instances;
            AlgebraElement sum = alg.vertex(v);
            for (BundleId b : g.out_bundles(v))
                for (std::uint64_t i = 0; i < g.bundle(b).multiplicity.value(); ++i) {
                    const EdgeRef e{b, i};
                    sum = alg.subtract(sum, alg.product(alg.edge(e), alg.ghost(e)));
                }
            if (!alg.is_zero(sum))
                detail = g.vertex_name(v);
        }
        rep.add("CK2", detail.empty(), instances == 0 && detail.empty() ? "no regular vertices" : detail);
    }
    {
        std::string detail;
        for (BundleId b = 0; b < g.bundles().size() && detail.empty(); ++b) {
            if (!g.bundle(b).multiplicity.is_omega())
                continue;
            const EdgeRef e0{b, 0};
            const EdgeRef e1{b, 1};
            bool same = e1_ok(e0) == e1_ok(e1) && e2_ok(e0) == e2_ok(e1) && ck1_ok(e0, e0) == ck1_ok(e1, e1) &&
                        ck1_ok(e0, e1) == ck1_ok(e1, e0);
            for (EdgeRef f : edges)
                if (f.bundle != b)
                    same = same && ck1_ok(e0, f) == ck1_ok(e1, f) && ck1_ok(f, e0) == ck1_ok(f, e1);
            if (!same)
                detail = g.bundle(b).id;
        }
        rep.add("omega_index_independence", detail.empty(), detail);
    }
    return rep;
}

} // namespace lpadecomp
