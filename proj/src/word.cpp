#include "cancelkit/word.hpp"

#include <algorithm>
#include <cctype>

namespace cancelkit {

bool is_word_letter(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool is_positive(char c) { return c >= 'a' && c <= 'z'; }

char generator_of(char c) {
  return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

char inverse_letter(char c) {
  if (is_positive(c)) return static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

bool is_freely_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == inverse_letter(w[i - 1])) return false;
  return true;
}

bool is_cyclically_reduced(const Word& w) {
  if (!is_freely_reduced(w)) return false;
  if (w.size() <= 1) return true;
  return w.front() != inverse_letter(w.back());
}

Word inverse_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse_letter(*it));
  return out;
}

Word free_reduce(Word w) {
  Word out;
  out.reserve(w.size());
  for (char c : w) {
    if (!out.empty() && out.back() == inverse_letter(c))
      out.pop_back();
    else
      out.push_back(c);
  }
  return out;
}

CyclicReduction cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t i = 0, j = r.size();
  while (j - i >= 2 && r[i] == inverse_letter(r[j - 1])) {
    ++i;
    --j;
  }
  return {r.substr(i, j - i), r.substr(0, i)};
}

Word rotate(const Word& w, std::size_t k) {
  if (w.empty()) return w;
  k %= w.size();
  return w.substr(k) + w.substr(0, k);
}

std::vector<Word> rotations(const Word& w) {
  std::vector<Word> out;
  if (w.empty()) return {w};
  out.reserve(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) out.push_back(rotate(w, k));
  return out;
}

Word least_rotation(const Word& w) {
  Word best = w;
  for (std::size_t k = 1; k < w.size(); ++k) best = std::min(best, rotate(w, k));
  return best;
}

Word power_word(const Word& w, long k) {
  const Word& base = k < 0 ? inverse_word(w) : w;
  long n = k < 0 ? -k : k;
  Word out;
  out.reserve(base.size() * static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) out += base;
  return out;
}

bool is_proper_power(const Word& w) {
  if (w.size() < 2) return false;
  // w is a power of its prefix of length p exactly when w reoccurs in w+w
  // at some offset p < |w|.
  return (w + w).find(w, 1) != w.size();
}

}  // namespace cancelkit
