#include "cancelkit/presentation.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>

#include "cancelkit/errors.hpp"

namespace cancelkit {

namespace {

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// Two relators define the same symmetrized orbit when one is a rotation of
// the other or of its inverse.
bool same_orbit(const Word& a, const Word& b) {
  if (a.size() != b.size()) return false;
  for (const Word& r : rotations(b))
    if (r == a) return true;
  Word bi = inverse_word(b);
  for (const Word& r : rotations(bi))
    if (r == a) return true;
  return false;
}

}  // namespace

bool Presentation::contains_generator(char g) const {
  return generators.find(g) != std::string::npos;
}

bool Presentation::contains_letter(char c) const {
  return is_word_letter(c) && contains_generator(generator_of(c));
}

std::string Presentation::serialize() const {
  std::ostringstream out;
  out << "gens:";
  for (char g : generators) out << ' ' << g;
  out << '\n';
  for (const Word& r : relators) out << "rel: " << r << '\n';
  return out.str();
}

Presentation parse_presentation(std::istream& in) {
  Presentation p;
  bool have_gens = false;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    line = strip(line);
    if (line.empty()) continue;

    if (line.rfind("gens:", 0) == 0) {
      if (have_gens) throw SyntaxError("line " + std::to_string(lineno) + ": duplicate gens line");
      std::istringstream items(line.substr(5));
      std::string tok;
      while (items >> tok) {
        if (tok.size() != 1 || tok[0] < 'a' || tok[0] > 'z')
          throw SyntaxError("line " + std::to_string(lineno) +
                            ": generators must be single lowercase letters, got '" + tok + "'");
        if (p.contains_generator(tok[0]))
          throw SyntaxError("line " + std::to_string(lineno) + ": duplicate generator '" + tok + "'");
        p.generators.push_back(tok[0]);
      }
      if (p.generators.empty())
        throw SyntaxError("line " + std::to_string(lineno) + ": empty generator list");
      have_gens = true;
      continue;
    }

    if (line.rfind("rel:", 0) == 0) {
      if (!have_gens)
        throw SyntaxError("line " + std::to_string(lineno) + ": rel before gens");
      Word r = strip(line.substr(4));
      if (r.empty()) throw RelatorError("line " + std::to_string(lineno) + ": empty relator");
      for (char c : r) {
        if (!is_word_letter(c))
          throw SyntaxError("line " + std::to_string(lineno) + ": bad character '" +
                            std::string(1, c) + "' in relator");
        if (!p.contains_letter(c))
          throw AlphabetError("line " + std::to_string(lineno) + ": letter '" +
                              std::string(1, c) + "' is not a declared generator");
      }
      if (!is_cyclically_reduced(r))
        throw RelatorError("line " + std::to_string(lineno) + ": relator '" + r +
                           "' is not cyclically reduced");
      if (r.size() < 3)
        throw RelatorError("line " + std::to_string(lineno) + ": relator '" + r +
                           "' has length < 3");
      for (const Word& prev : p.relators)
        if (same_orbit(r, prev))
          throw RelatorError("line " + std::to_string(lineno) + ": relator '" + r +
                             "' duplicates '" + prev + "' after symmetrization");
      p.relators.push_back(r);
      continue;
    }

    throw SyntaxError("line " + std::to_string(lineno) + ": unrecognized line '" + line + "'");
  }
  if (!have_gens) throw SyntaxError("missing gens line");
  if (p.relators.empty()) throw SyntaxError("presentation has no relators");
  return p;
}

Presentation parse_presentation(const std::string& text) {
  std::istringstream in(text);
  return parse_presentation(in);
}

Word parse_word(const std::string& text, const Presentation& p) {
  for (char c : text) {
    if (!is_word_letter(c))
      throw SyntaxError("bad character '" + std::string(1, c) + "' in word '" + text + "'");
    if (!p.contains_letter(c))
      throw AlphabetError("letter '" + std::string(1, c) + "' is not in the alphabet of the presentation");
  }
  return text;
}

int SymmetrizedSet::index_of(const Word& w) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), w);
  if (it == members_.end() || *it != w) return -1;
  return static_cast<int>(it - members_.begin());
}

const std::vector<int>& SymmetrizedSet::members_with_prefix(const Word& u) const {
  static const std::vector<int> kEmpty;
  auto it = prefix_index_.find(u);
  return it == prefix_index_.end() ? kEmpty : it->second;
}

SymmetrizedSet symmetrize(const Presentation& p) {
  SymmetrizedSet s;
  std::map<Word, SymmetrizedSet::Origin> seen;
  for (std::size_t ri = 0; ri < p.relators.size(); ++ri) {
    for (int inverted = 0; inverted < 2; ++inverted) {
      Word base = inverted ? inverse_word(p.relators[ri]) : p.relators[ri];
      for (std::size_t rot = 0; rot < base.size(); ++rot) {
        Word m = rotate(base, rot);
        seen.emplace(m, SymmetrizedSet::Origin{static_cast<int>(ri), static_cast<int>(rot),
                                               inverted != 0});
      }
    }
  }
  for (auto& [w, o] : seen) {
    s.members_.push_back(w);
    s.origins_.push_back(o);
  }
  for (int id = 0; id < s.size(); ++id) {
    const Word& m = s.members_[static_cast<std::size_t>(id)];
    for (std::size_t len = 1; len <= m.size(); ++len)
      s.prefix_index_[m.substr(0, len)].push_back(id);
  }
  return s;
}

}  // namespace cancelkit
