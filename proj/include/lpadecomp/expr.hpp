#pragma once

#include "lpadecomp/steinberg.hpp"

#include <optional>
#include <string_view>

namespace lpadecomp {

/// Parses an algebra expression into the image of its Leavitt path algebra
/// word under π.
///
///   expr   := ('+'|'-')? term (('+'|'-') term)*
///   term   := coeff? factor+            juxtaposition is the product
///   coeff  := int ('/' int)?
///   factor := ident | ident '*' | 'vh(' ident ')' | '(' expr ')'
///   ident  := vertex id | bundle id | bundle id '[' nat ']'
///
/// A bundle id names the edge of that bundle with index 0 unless an index is
/// given; `ident*` is the ghost edge. `vh(v)` needs the set H. Errors are
/// InputError carrying the 1-based column.
AlgebraElement parse_expression(const SteinbergAlgebra& alg, std::string_view text,
                                const std::optional<VertexSet>& H = std::nullopt);

} // namespace lpadecomp
