#pragma once

#include <optional>
#include <set>
#include <vector>

#include "cancelkit/presentation.hpp"

namespace cancelkit {

// Display cap for "holds for every p/q": reports clamp unbounded and
// over-large values of c_max / t_max to this sentinel.
inline constexpr int kUnboundedDisplayCap = 64;

struct PieceIndex {
  std::set<Word> pieces;  // nonempty common prefixes of two distinct members
  int max_piece_length = 0;

  bool is_piece(const Word& u) const { return pieces.count(u) != 0; }
};

PieceIndex compute_pieces(const SymmetrizedSet& s);

// True when some member of s starts with u and q*len(u) == p*len(member).
bool is_pq_relator(const Word& u, int p, int q, const SymmetrizedSet& s);

enum class Classification { Cpp4T4, Cpp3T6, C4T4P, C3T6P, C6P, Unclassified };
const char* to_string(Classification c);

struct ConditionWitnesses {
  // When c_max is finite: a relator split into c_max pieces.
  Word decomposed_relator;
  std::vector<Word> piece_decomposition;
  // When t_max is finite: members r_1..r_k, k = t_max, with every product
  // r_i r_{i+1} (cyclically) not cyclically reduced and r_i != r_{i+1}^-1.
  std::vector<Word> bad_sequence;
  // When P fails: one of the two reasons.
  Word long_piece;
  Word proper_power_relator;
};

struct ConditionReport {
  std::optional<int> c_max;  // nullopt: C(p) holds for every p
  std::optional<int> t_max;  // nullopt: T(q) holds for every q
  bool p_holds = false;
  std::optional<int> cpp;    // set iff the presentation is C''(cpp)
  Classification classification = Classification::Unclassified;
  ConditionWitnesses witnesses;
};

ConditionReport check_conditions(const Presentation& p);

}  // namespace cancelkit
