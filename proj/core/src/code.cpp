#include "ppower/code.hpp"

#include "ppower/power.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace ppower {

unsigned hamming_distance(const Word& a, const Word& b) {
  if (a.size() != b.size()) throw InvalidInput("word length mismatch");
  unsigned d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += (a[i] != b[i]);
  return d;
}

void Code::validate() const {
  std::set<Word> seen;
  for (const Word& w : words) {
    if (w.size() != k) throw InvalidInput("word length differs from code length");
    for (unsigned c : w) {
      if (c >= q) throw InvalidInput("symbol out of alphabet range");
    }
    if (!seen.insert(w).second) throw InvalidInput("duplicate word in code");
  }
}

Code read_code(std::istream& in, unsigned q_hint) {
  Code code;
  code.words.clear();
  std::string line;
  unsigned max_symbol = 0;
  bool first = true;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    Word w;
    long long sym;
    while (ls >> sym) {
      if (sym < 0) throw InvalidInput("line " + std::to_string(lineno) + ": negative symbol");
      w.push_back(static_cast<unsigned>(sym));
      max_symbol = std::max(max_symbol, static_cast<unsigned>(sym));
    }
    if (!ls.eof()) throw InvalidInput("line " + std::to_string(lineno) + ": malformed symbol");
    if (w.empty()) continue;
    if (first) {
      code.k = static_cast<unsigned>(w.size());
      first = false;
    } else if (w.size() != code.k) {
      throw InvalidInput("line " + std::to_string(lineno) + ": width differs from first word");
    }
    code.words.push_back(std::move(w));
  }
  if (first) throw InvalidInput("code file contained no words");
  code.q = std::max(q_hint, max_symbol + 1);
  if (code.q < 2) code.q = 2;
  code.validate();
  return code;
}

Code read_code_file(const std::string& path, unsigned q_hint) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open code file: " + path);
  return read_code(in, q_hint);
}

void write_code(std::ostream& out, const Code& code, const std::string& comment) {
  if (!comment.empty()) out << "# " << comment << "\n";
  for (const Word& w : code.words) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) out << ' ';
      out << w[i];
    }
    out << "\n";
  }
}

void write_code_file(const std::string& path, const Code& code,
                     const std::string& comment) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot open file for writing: " + path);
  write_code(out, code, comment);
}

}  // namespace ppower
