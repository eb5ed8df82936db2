#include "ppower/constructions.hpp"

#include "ppower/linalg.hpp"
#include "ppower/power.hpp"

#include <algorithm>
#include <stdexcept>

namespace ppower {

bool is_prime(unsigned m) {
  if (m < 2) return false;
  for (unsigned d = 2; d * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

ConstructionWitness diagonal_set(unsigned n, unsigned p) {
  if (n == 0 || p == 0) throw InvalidInput("diagonal_set: need n >= 1 and p >= 1");
  ConstructionWitness w;
  w.k = p;
  w.p = p;
  w.provenance = "diagonal n=" + std::to_string(n) + " p=" + std::to_string(p);
  w.code.q = std::max(2u, n);
  w.code.k = p;
  for (unsigned u = 0; u < n; ++u) w.code.words.push_back(Word(p, u));
  w.code.validate();
  return w;
}

ConstructionWitness affine_line_code(unsigned p) {
  if (!is_prime(p)) throw InvalidInput("affine_line_code: p must be prime");
  ConstructionWitness w;
  w.k = p + 1;
  w.p = p;
  w.provenance = "affine-lines p=" + std::to_string(p);
  w.code.q = p;
  w.code.k = p + 1;
  for (unsigned a = 0; a < p; ++a) {
    for (unsigned b = 0; b < p; ++b) {
      Word word;
      word.reserve(p + 1);
      word.push_back(a);
      for (unsigned x = 0; x < p; ++x) word.push_back((a * x + b) % p);
      w.code.words.push_back(std::move(word));
    }
  }
  w.code.validate();
  return w;
}

ConstructionWitness hadamard_paley_code() {
  const unsigned q = 11;
  // chi(x) = +1 for nonzero quadratic residues mod 11, -1 for non-residues.
  std::array<int, 11> chi{};
  for (unsigned x = 1; x < q; ++x) chi[(x * x) % q] = 1;
  for (unsigned x = 1; x < q; ++x)
    if (chi[x] == 0) chi[x] = -1;

  // Order-12 Paley type-I matrix: first row all +1, first column -1 below the
  // corner, core entry (x, y) = +1 if x == y else chi(y - x).
  std::array<std::array<int, 12>, 12> h{};
  for (unsigned j = 0; j < 12; ++j) h[0][j] = 1;
  for (unsigned i = 1; i < 12; ++i) h[i][0] = -1;
  for (unsigned i = 1; i < 12; ++i)
    for (unsigned j = 1; j < 12; ++j)
      h[i][j] = (i == j) ? 1 : chi[(j + q - i) % q];

  for (unsigned i = 0; i < 12; ++i) {
    for (unsigned j = 0; j < 12; ++j) {
      int dot = 0;
      for (unsigned t = 0; t < 12; ++t) dot += h[i][t] * h[j][t];
      if (dot != (i == j ? 12 : 0))
        throw std::logic_error("hadamard_paley_code: matrix is not Hadamard");
    }
  }

  ConstructionWitness w;
  w.k = 12;
  w.p = 3;
  w.provenance = "hadamard-paley-12";
  w.code.q = 2;
  w.code.k = 12;
  for (unsigned i = 0; i < 12; ++i) {
    Word row(12), comp(12);
    for (unsigned j = 0; j < 12; ++j) {
      row[j] = h[i][j] == 1 ? 0 : 1;
      comp[j] = 1 - row[j];
    }
    w.code.words.push_back(std::move(row));
    w.code.words.push_back(std::move(comp));
  }
  w.code.validate();
  return w;
}

ConstructionWitness product_concat(const ConstructionWitness& a, const ConstructionWitness& b) {
  if (a.code.q != b.code.q) throw InvalidInput("product_concat: alphabet mismatch");
  if (a.p != b.p) throw InvalidInput("product_concat: modulus mismatch");
  ConstructionWitness w;
  w.k = a.k + b.k;
  w.p = a.p;
  w.provenance = "product(" + a.provenance + ", " + b.provenance + ")";
  w.code.q = a.code.q;
  w.code.k = a.code.k + b.code.k;
  for (const auto& wa : a.code.words) {
    for (const auto& wb : b.code.words) {
      Word word = wa;
      word.insert(word.end(), wb.begin(), wb.end());
      w.code.words.push_back(std::move(word));
    }
  }
  w.code.validate();
  return w;
}

SelfOrthogonalReduction self_orthogonal_reduction(const Code& code) {
  code.validate();
  if (code.words.empty()) throw InvalidInput("self_orthogonal_reduction: empty code");
  if (code.q != 3)
    throw InvalidInput("self_orthogonal_reduction: alphabet must be {0,1,2}");
  for (std::size_t i = 0; i < code.words.size(); ++i)
    for (std::size_t j = i + 1; j < code.words.size(); ++j)
      if (hamming_distance(code.words[i], code.words[j]) % 3 != 0)
        throw InvalidInput("self_orthogonal_reduction: pairwise distances must be divisible by 3");

  SelfOrthogonalReduction out;
  out.k = code.k;
  out.size_sq_cap = Int(9) * int_pow(Int(3), code.k);

  std::array<std::vector<const Word*>, 3> classes;
  for (const auto& word : code.words) {
    unsigned norm = 0;
    for (unsigned x : word) norm += x * x;
    classes[norm % 3].push_back(&word);
  }
  for (unsigned c = 0; c < 3; ++c) out.class_sizes[c] = classes[c].size();
  out.chosen_class = 0;
  for (unsigned c = 1; c < 3; ++c)
    if (classes[c].size() > classes[out.chosen_class].size()) out.chosen_class = c;

  const auto& chosen = classes[out.chosen_class];
  const Word* z = chosen.front();
  for (const Word* w : chosen)
    if (*w < *z) z = w;
  out.translate = *z;

  for (const Word* w : chosen) {
    Word t(code.k);
    for (unsigned i = 0; i < code.k; ++i) t[i] = ((*w)[i] + 3 - out.translate[i]) % 3;
    out.j_words.push_back(std::move(t));
  }

  out.self_orthogonal = true;
  for (const auto& x : out.j_words) {
    for (const auto& y : out.j_words) {
      unsigned dot = 0;
      for (unsigned i = 0; i < code.k; ++i) dot += x[i] * y[i];
      if (dot % 3 != 0) out.self_orthogonal = false;
    }
  }

  std::vector<std::vector<Int>> rows;
  rows.reserve(out.j_words.size());
  for (const auto& word : out.j_words) {
    std::vector<Int> row;
    row.reserve(code.k);
    for (unsigned x : word) row.emplace_back(x);
    rows.push_back(std::move(row));
  }
  out.dimension = rows.empty() ? 0 : rank_mod_p(std::move(rows), 3);
  return out;
}

}  // namespace ppower
