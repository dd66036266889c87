#include "lpadecomp/hs_pair.hpp"

#include "lpadecomp/errors.hpp"

namespace lpadecomp {

namespace {
const char* pair_defect(const Graph& g, const HSPair& p) {
    if (p.H.universe() != g.vertex_count() || p.S.universe() != g.vertex_count())
        return "vertex sets do not belong to this graph";
    if (!is_hereditary(g, p.H))
        return "H is not hereditary";
    if (!is_saturated(g, p.H))
        return "H is not saturated";
    if (!p.S.is_subset_of(breaking_vertices(g, p.H)))
        return "S is not a subset of B_H";
    return nullptr;
}
} // namespace

bool is_valid_pair(const Graph& g, const HSPair& p) { return pair_defect(g, p) == nullptr; }

void require_valid_pair(const Graph& g, const HSPair& p, const char* where) {
    if (const char* why = pair_defect(g, p))
        throw ContractError(std::string(where) + ": invalid pair: " + why);
}

std::string format_pair(const Graph& g, const HSPair& p) {
    return "H=" + g.format_set(p.H) + ";S=" + g.format_set(p.S);
}

InvariantOpen::InvariantOpen(Shape shape, std::vector<HSPair> components)
    : shape_(shape), components_(std::move(components)) {
    if (components_.empty())
        throw ContractError("InvariantOpen needs at least one component");
}

} // namespace lpadecomp
