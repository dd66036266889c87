#include "lpadecomp/vertex_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace lpadecomp {

VertexSet::VertexSet(std::size_t universe, std::initializer_list<VertexId> members) : bits_(universe, false) {
    for (VertexId v : members)
        insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
    VertexSet s(universe);
    s.bits_.assign(universe, true);
    return s;
}

VertexSet VertexSet::from_mask(std::size_t universe, std::uint64_t mask) {
    VertexSet s(universe);
    for (std::size_t i = 0; i < universe && i < 64; ++i)
        if (mask >> i & 1U)
            s.bits_[i] = true;
    return s;
}

std::size_t VertexSet::size() const { return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true)); }

std::vector<VertexId> VertexSet::members() const {
    std::vector<VertexId> out;
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i])
            out.push_back(static_cast<VertexId>(i));
    return out;
}

namespace {
void check_same(const VertexSet& a, const VertexSet& b) {
    if (a.universe() != b.universe())
        throw std::invalid_argument("vertex sets over different graphs");
}
} // namespace

bool VertexSet::is_subset_of(const VertexSet& o) const {
    check_same(*this, o);
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] && !o.bits_[i])
            return false;
    return true;
}

bool VertexSet::intersects(const VertexSet& o) const {
    check_same(*this, o);
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] && o.bits_[i])
            return true;
    return false;
}

VertexSet VertexSet::operator|(const VertexSet& o) const {
    check_same(*this, o);
    VertexSet r(*this);
    for (std::size_t i = 0; i < bits_.size(); ++i)
        r.bits_[i] = bits_[i] || o.bits_[i];
    return r;
}

VertexSet VertexSet::operator&(const VertexSet& o) const {
    check_same(*this, o);
    VertexSet r(*this);
    for (std::size_t i = 0; i < bits_.size(); ++i)
        r.bits_[i] = bits_[i] && o.bits_[i];
    return r;
}

VertexSet VertexSet::operator-(const VertexSet& o) const {
    check_same(*this, o);
    VertexSet r(*this);
    for (std::size_t i = 0; i < bits_.size(); ++i)
        r.bits_[i] = bits_[i] && !o.bits_[i];
    return r;
}

VertexSet VertexSet::complement() const {
    VertexSet r(*this);
    r.bits_.flip();
    return r;
}

std::strong_ordering VertexSet::operator<=>(const VertexSet& o) const {
    if (auto c = size() <=> o.size(); c != 0)
        return c;
    auto a = members();
    auto b = o.members();
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

} // namespace lpadecomp
