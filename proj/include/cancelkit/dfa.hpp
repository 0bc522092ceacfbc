#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "cancelkit/geodesic.hpp"

namespace cancelkit {

// Deterministic, total automaton accepting exactly the geodesic words.
// Every state except the absorbing dead state is accepting; states are
// numbered in BFS order from the start, the dead state last.
struct GeodesicDfa {
  std::string alphabet;                 // canonical letter order
  int start = 0;
  int dead = 0;
  std::vector<std::vector<int>> next;   // [state][letter index]

  int size() const { return static_cast<int>(next.size()); }
  int letter_index(char c) const;
  int step(int state, char c) const { return next[static_cast<std::size_t>(state)]
                                                 [static_cast<std::size_t>(letter_index(c))]; }
  bool accepts(const Word& w) const;

  std::string to_dot() const;  // dead state and its edges omitted
  std::string to_tsv() const;  // full transition table
};

// Subset construction over live strip frontiers, then minimization.
GeodesicDfa build_geodesic_dfa(const GeodesicContext& ctx);

struct GrowthCount {
  std::vector<boost::multiprecision::cpp_int> counts;  // counts[k] = accepted words of length k
};

GrowthCount count_geodesics(const GeodesicDfa& dfa, int k);

// Accepted words of length <= max_len in shortlex order.
std::vector<Word> enumerate_geodesics(const GeodesicDfa& dfa, int max_len);

}  // namespace cancelkit
