#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cancelkit/conjtrans.hpp"

namespace testsupport {

using namespace cancelkit;

inline Presentation z2() { return parse_presentation("gens: a b\nrel: abAB\n"); }
inline Presentation klein() { return parse_presentation("gens: a b\nrel: abaB\n"); }
inline Presentation hexp() { return parse_presentation("gens: x y z\nrel: xyz\nrel: xzy\n"); }
inline Presentation freetri() { return parse_presentation("gens: a b c\nrel: abc\n"); }
inline Presentation power4() { return parse_presentation("gens: a\nrel: aaaa\n"); }
inline Presentation aabb() { return parse_presentation("gens: a b\nrel: aabb\n"); }
// Infinite cyclic with y = x^-2: the translation number of x is 1/2.
inline Presentation xxy() { return parse_presentation("gens: x y\nrel: xxy\n"); }

inline std::string alphabet_of(const Presentation& p) {
  std::string s = p.generators;
  for (char g : p.generators) s.push_back(inverse_letter(g));
  return s;
}

inline Word random_reduced(std::mt19937_64& rng, const std::string& alphabet, int len) {
  Word w;
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  while (static_cast<int>(w.size()) < len) {
    char c = alphabet[pick(rng)];
    if (!w.empty() && c == inverse_letter(w.back())) continue;
    w.push_back(c);
  }
  return w;
}

// Calls fn on every freely reduced word of length <= maxlen (including "").
inline void for_all_reduced(const std::string& alphabet, int maxlen,
                            const std::function<void(const Word&)>& fn) {
  std::vector<Word> frontier{""};
  fn("");
  for (int len = 1; len <= maxlen; ++len) {
    std::vector<Word> next;
    for (const Word& w : frontier)
      for (char c : alphabet) {
        if (!w.empty() && c == inverse_letter(w.back())) continue;
        next.push_back(w + c);
      }
    frontier = std::move(next);
    for (const Word& w : frontier) fn(w);
  }
}

inline ConjContext make_ctx(const Presentation& p, bool certify = true, int bound = 6) {
  GeodesicContext geo = GeodesicContext::build(p);
  Oracle oracle(ReferenceModel::for_presentation(p));
  ConjOptions opt;
  opt.certify = certify;
  opt.conjugator_bound = bound;
  opt.sweep_bound = bound;
  return ConjContext(std::move(geo), std::move(oracle), opt);
}

}  // namespace testsupport
