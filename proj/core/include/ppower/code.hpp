#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ppower {

using Word = std::vector<unsigned>;

/// Hamming distance of two same-length words.
unsigned hamming_distance(const Word& a, const Word& b);

/// A set of k-letter words over the alphabet [0, q).
struct Code {
  unsigned q = 2;
  unsigned k = 1;
  std::vector<Word> words;

  std::size_t size() const { return words.size(); }

  /// Throws InvalidInput unless all words have length k, symbols lie in
  /// [0, q), and there are no duplicates.
  void validate() const;
};

/// Code file format: one word per line, base-10 symbols separated by single
/// spaces; '#' lines are comments; width must be uniform.  The alphabet size
/// is max(symbol)+1 unless a larger q is supplied.
Code read_code(std::istream& in, unsigned q_hint = 0);
Code read_code_file(const std::string& path, unsigned q_hint = 0);

/// Writes in the code file format; a nonempty comment becomes a leading
/// '#' line.
void write_code(std::ostream& out, const Code& code, const std::string& comment = "");
void write_code_file(const std::string& path, const Code& code,
                     const std::string& comment = "");

}  // namespace ppower
