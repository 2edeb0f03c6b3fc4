#pragma once

#include <string>
#include <string_view>

#include "facenum/triangulation.hpp"

namespace facenum {

/// Text form of a triangulation:
///
///     dim 4
///     facets 1
///     0 0 -> 0 (1034)
///     0 1 -> 0 (0214)
///
/// Each body line `f r -> g (labels)` glues ridge r of facet f to facet g;
/// the labels are the images of the ridge's corners in increasing order
/// (0-9, then a-z). `#` starts a comment.
///
/// serialize() writes one line per gluing from its smaller slot, in slot
/// order.
std::string serialize(const Triangulation& t);

/// Inverse of serialize(). A line restating an existing gluing from its
/// other side is accepted; any other reuse of a slot is an error. Throws
/// ParseError with the 1-based line number.
Triangulation parse_gluing_table(std::string_view text);

}  // namespace facenum
