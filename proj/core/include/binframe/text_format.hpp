#pragma once

// Frame literals: `n; v1,v2,...,vk` where each v is an integer encoding.
// Whitespace anywhere is ignored on input; output always uses the form
// `3; 3,5,6,7`. An empty family is written `3;`.

#include <string>
#include <string_view>

#include "binframe/frame.hpp"
#include "binframe/gf2.hpp"

namespace binframe {

// Throws Error(Parse) on malformed text and Error(OutOfRange) when n is
// outside [1, 64] or an encoding does not fit in n bits.
Frame parse_frame(std::string_view text);

std::string format_frame(const Frame& f);

// Comma-separated encodings without the dimension prefix.
std::string format_encodings(const Frame& f);

// One line per row, entries as 0/1 separated by spaces, column 0 first.
std::string format_matrix(const BinMatrix& m);

} // namespace binframe
