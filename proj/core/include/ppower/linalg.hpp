#pragma once

#include "ppower/rational.hpp"

#include <vector>

namespace ppower {

/// Rank of a matrix over GF(p), p prime, by Gaussian elimination.  Entries
/// are reduced mod p internally; rows may have any (consistent) length.
unsigned rank_mod_p(std::vector<std::vector<Int>> m, unsigned p);

/// Rank of an integer matrix over the rationals by fraction-free (Bareiss)
/// elimination; exact.
unsigned rank_exact(std::vector<std::vector<Int>> m);

}  // namespace ppower
