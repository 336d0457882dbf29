#pragma once

#include <cstddef>
#include <vector>

#include "bsv/chartable.hpp"

namespace bsv {

/// Class multiplication coefficient m(a,b,c): the number of pairs
/// (u,v) in a^G x b^G with uv = c. Evaluated exactly from the character
/// table; a non-integer or negative result means the table data is
/// corrupt and raises table_corruption_error.
Int class_mult_coeff(const CharacterTable& t, std::size_t a, std::size_t b, std::size_t c);

/// m(a,b,c) for every class c, in table order.
std::vector<Int> coeff_sweep(const CharacterTable& t, std::size_t a, std::size_t b);

}  // namespace bsv
