#pragma once

#include <string>
#include <string_view>

#include "ackdec/lattice.hpp"

namespace ackdec {

/// Parses either `box d=2 k=[1,3] deg<=3` or `set d=2 {(1,0),(0,1),(1,1)}`.
/// One-dimensional elements may be written bare: `set d=1 {1,2}`.
/// Throws std::invalid_argument with a one-line message on malformed input.
ExponentSet parse_set_literal(std::string_view text);

/// Canonical literal: box form when the set is exactly a box set, explicit
/// form (graded lexicographic element order) otherwise.
std::string format_set_literal(const ExponentSet& set);

} // namespace ackdec
