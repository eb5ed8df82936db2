#pragma once

#include "ppower/code.hpp"
#include "ppower/rational.hpp"

#include <array>
#include <string>
#include <vector>

namespace ppower {

bool is_prime(unsigned m);

/// A code together with the power parameters it is claimed to be an
/// independent set for (as vertices of the p-power of a complete graph).
struct ConstructionWitness {
  Code code;
  unsigned k = 1;
  unsigned p = 2;
  std::string provenance;
};

/// n constant tuples of length p; pairwise distances are all exactly p.
ConstructionWitness diagonal_set(unsigned n, unsigned p);

/// All affine lines over GF(p) with the slope prepended:
///   w_{a,b} = (a, a*0+b, a*1+b, ..., a*(p-1)+b),
/// giving p^2 words of length p+1 whose pairwise distances are all exactly p.
/// Requires p prime.
ConstructionWitness affine_line_code(unsigned p);

/// Rows and complemented rows of the order-12 Paley type-I Hadamard matrix
/// over GF(11), mapped +1 -> 0, -1 -> 1: 24 binary words of length 12, any
/// two agreeing in exactly 0 or 6 coordinates (distances in {6, 12}).
ConstructionWitness hadamard_paley_code();

/// All concatenations a+b; sizes multiply and distances add, so independence
/// with the same modulus is preserved.  Requires matching alphabet and
/// modulus.
ConstructionWitness product_concat(const ConstructionWitness& a, const ConstructionWitness& b);

/// Output of the self-orthogonality reduction over GF(3): the input code is
/// split into classes by sum of squared coordinates mod 3, the largest class
/// (ties to the smallest residue) is translated by its lexicographically
/// smallest member, and the result J is checked to be pairwise
/// self-orthogonal with GF(3) span dimension at most floor(k/2).  That caps
/// the input size at 3 * 3^(k/2), i.e. size^2 <= 9 * 3^k.
struct SelfOrthogonalReduction {
  unsigned k = 0;
  std::array<std::size_t, 3> class_sizes{};
  unsigned chosen_class = 0;
  Word translate;
  std::vector<Word> j_words;
  bool self_orthogonal = false;
  unsigned dimension = 0;
  Int size_sq_cap = 0;  // 9 * 3^k
};

/// Requires a nonempty code over alphabet {0,1,2} with all pairwise distances
/// divisible by 3.
SelfOrthogonalReduction self_orthogonal_reduction(const Code& code);

}  // namespace ppower
