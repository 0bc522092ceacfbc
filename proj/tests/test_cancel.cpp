#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "cancelkit/cancel.hpp"
#include "support.hpp"

using namespace cancelkit;

namespace {

// Independent piece oracle: compare every prefix of every member against
// every other member.
std::set<Word> brute_pieces(const SymmetrizedSet& s) {
  std::set<Word> out;
  for (int i = 0; i < s.size(); ++i)
    for (int j = 0; j < s.size(); ++j) {
      if (i == j) continue;
      const Word& a = s.member(i);
      const Word& b = s.member(j);
      std::size_t l = 0;
      while (l < a.size() && l < b.size() && a[l] == b[l]) ++l;
      for (std::size_t k = 1; k <= l; ++k) out.insert(a.substr(0, k));
    }
  return out;
}

// Exhaustive minimum piece factorization by recursion.
int brute_min_factorization(const Word& r, std::size_t at, const std::set<Word>& pieces) {
  if (at == r.size()) return 0;
  int best = 1 << 20;
  for (std::size_t len = 1; len + at <= r.size(); ++len) {
    if (!pieces.count(r.substr(at, len))) continue;
    int rest = brute_min_factorization(r, at + len, pieces);
    best = std::min(best, rest + 1);
  }
  return best == (1 << 20) ? best : best + 0;
}

// Exhaustive search for a closed cancellation sequence of length exactly k.
bool brute_bad_sequence(const SymmetrizedSet& s, int k) {
  auto edge = [&](int a, int b) {
    const Word& wa = s.member(a);
    const Word& wb = s.member(b);
    if (wb == inverse_word(wa)) return false;
    return wa.back() == inverse_letter(wb.front());
  };
  std::vector<int> seq;
  std::function<bool(int)> go = [&](int depth) {
    if (depth == k) return edge(seq.back(), seq.front());
    for (int v = 0; v < s.size(); ++v) {
      if (!seq.empty() && !edge(seq.back(), v)) continue;
      seq.push_back(v);
      if (go(depth + 1)) return true;
      seq.pop_back();
    }
    return false;
  };
  return go(0);
}

}  // namespace

TEST_CASE("pieces of the reference presentations") {
  {
    PieceIndex p = compute_pieces(symmetrize(testsupport::z2()));
    CHECK(p.pieces == std::set<Word>{"a", "b", "A", "B"});
    CHECK(p.max_piece_length == 1);
  }
  {
    PieceIndex p = compute_pieces(symmetrize(testsupport::hexp()));
    CHECK(p.pieces == std::set<Word>{"x", "y", "z", "X", "Y", "Z"});
    CHECK(p.max_piece_length == 1);
  }
  {
    PieceIndex p = compute_pieces(symmetrize(testsupport::power4()));
    CHECK(p.pieces.empty());
    CHECK(p.max_piece_length == 0);
  }
}

TEST_CASE("pieces match the brute-force oracle") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    Word r;
    do {
      r = testsupport::random_reduced(rng, "abAB", 3 + static_cast<int>(rng() % 5));
    } while (!is_cyclically_reduced(r));
    SymmetrizedSet s = symmetrize(Presentation{"ab", {r}});
    PieceIndex p = compute_pieces(s);
    CHECK(p.pieces == brute_pieces(s));
  }
}

TEST_CASE("piece sets are prefix closed") {
  for (const Presentation& p : {testsupport::z2(), testsupport::klein(), testsupport::aabb()}) {
    PieceIndex idx = compute_pieces(symmetrize(p));
    for (const Word& u : idx.pieces)
      if (u.size() >= 2) CHECK(idx.is_piece(u.substr(0, u.size() - 1)));
  }
}

TEST_CASE("pq-relator lookup") {
  SymmetrizedSet z2 = symmetrize(testsupport::z2());
  CHECK(is_pq_relator("abA", 3, 4, z2));
  CHECK(!is_pq_relator("aa", 1, 2, z2));
  SymmetrizedSet tri = symmetrize(testsupport::freetri());
  CHECK(is_pq_relator("ab", 2, 3, tri));
  CHECK(!is_pq_relator("ab", 1, 3, tri));
}

TEST_CASE("condition table for the reference presentations") {
  {
    ConditionReport r = check_conditions(testsupport::z2());
    CHECK(r.c_max == 4);
    CHECK(r.t_max == 4);
    CHECK(r.p_holds);
    CHECK(r.cpp == 4);
    CHECK(r.classification == Classification::Cpp4T4);
  }
  {
    ConditionReport r = check_conditions(testsupport::klein());
    CHECK(r.c_max == 4);
    CHECK(r.t_max == 4);
    CHECK(r.p_holds);
    CHECK(r.cpp == 4);
    CHECK(r.classification == Classification::Cpp4T4);
  }
  {
    ConditionReport r = check_conditions(testsupport::hexp());
    CHECK(r.c_max == 3);
    CHECK(r.t_max == 6);
    CHECK(r.p_holds);
    CHECK(r.cpp == 3);
    CHECK(r.classification == Classification::Cpp3T6);
  }
  {
    ConditionReport r = check_conditions(testsupport::freetri());
    CHECK(!r.c_max.has_value());  // no pieces: C(p) holds vacuously for all p
    CHECK(!r.t_max.has_value());  // cancellation graph has no edges
    CHECK(r.p_holds);
    CHECK(r.cpp == 3);
    CHECK(r.classification == Classification::Cpp3T6);
  }
  {
    ConditionReport r = check_conditions(testsupport::power4());
    CHECK(!r.p_holds);
    CHECK(r.witnesses.proper_power_relator == "aaaa");
    CHECK(r.classification == Classification::Unclassified);
  }
}

TEST_CASE("c_max agrees with exhaustive factorization") {
  for (const Presentation& p : {testsupport::z2(), testsupport::klein(), testsupport::hexp()}) {
    SymmetrizedSet s = symmetrize(p);
    std::set<Word> pieces = brute_pieces(s);
    int best = 1 << 20;
    for (int id = 0; id < s.size(); ++id)
      best = std::min(best, brute_min_factorization(s.member(id), 0, pieces));
    ConditionReport r = check_conditions(p);
    REQUIRE(r.c_max.has_value());
    CHECK(*r.c_max == best);
  }
}

TEST_CASE("t_max agrees with exhaustive sequence search") {
  {
    SymmetrizedSet s = symmetrize(testsupport::z2());
    CHECK(!brute_bad_sequence(s, 3));
    CHECK(brute_bad_sequence(s, 4));
  }
  {
    SymmetrizedSet s = symmetrize(testsupport::klein());
    CHECK(!brute_bad_sequence(s, 3));
    CHECK(brute_bad_sequence(s, 4));
  }
  {
    SymmetrizedSet s = symmetrize(testsupport::hexp());
    for (int k = 3; k <= 5; ++k) CHECK(!brute_bad_sequence(s, k));
    CHECK(brute_bad_sequence(s, 6));
  }
}

TEST_CASE("t witness is independently valid") {
  for (const Presentation& p : {testsupport::z2(), testsupport::klein(), testsupport::hexp()}) {
    ConditionReport r = check_conditions(p);
    REQUIRE(r.t_max.has_value());
    SymmetrizedSet s = symmetrize(p);
    const auto& seq = r.witnesses.bad_sequence;
    REQUIRE(static_cast<int>(seq.size()) == *r.t_max);
    REQUIRE(seq.size() >= 3);
    for (std::size_t i = 0; i < seq.size(); ++i) {
      const Word& a = seq[i];
      const Word& b = seq[(i + 1) % seq.size()];
      CHECK(s.contains(a));
      CHECK(b != inverse_word(a));
      CHECK(!is_cyclically_reduced(a + b));
    }
  }
}

TEST_CASE("piece decomposition witness is valid") {
  for (const Presentation& p : {testsupport::z2(), testsupport::hexp()}) {
    ConditionReport r = check_conditions(p);
    REQUIRE(r.c_max.has_value());
    PieceIndex idx = compute_pieces(symmetrize(p));
    Word joined;
    CHECK(static_cast<int>(r.witnesses.piece_decomposition.size()) == *r.c_max);
    for (const Word& piece : r.witnesses.piece_decomposition) {
      CHECK(idx.is_piece(piece));
      joined += piece;
    }
    CHECK(joined == r.witnesses.decomposed_relator);
  }
}

TEST_CASE("adding a relator never increases c_max") {
  std::mt19937_64 rng(31);
  auto random_relator = [&](int len) {
    Word r;
    do {
      r = testsupport::random_reduced(rng, "abAB", len);
    } while (!is_cyclically_reduced(r));
    return r;
  };
  int tried = 0;
  while (tried < 30) {
    Word r1 = random_relator(3 + static_cast<int>(rng() % 3));
    Word r2 = random_relator(3 + static_cast<int>(rng() % 3));
    Presentation single{"ab", {r1}};
    Presentation both{"ab", {r1, r2}};
    // Skip degenerate duplicates; the parser would reject them.
    bool dup = false;
    for (const Word& rot : rotations(r1))
      if (rot == r2 || rot == inverse_word(r2)) dup = true;
    if (dup) continue;
    ++tried;
    auto a = check_conditions(single).c_max;
    auto b = check_conditions(both).c_max;
    long av = a ? *a : (1L << 20);
    long bv = b ? *b : (1L << 20);
    CHECK(bv <= av);
  }
}

TEST_CASE("classification requires uniform lengths for the C'' classes") {
  // C''(4)-T(4) forces every member length 4 and every piece length 1.
  for (const Presentation& p : {testsupport::z2(), testsupport::klein(), testsupport::aabb()}) {
    ConditionReport r = check_conditions(p);
    if (r.classification != Classification::Cpp4T4) continue;
    SymmetrizedSet s = symmetrize(p);
    for (const Word& m : s.members()) CHECK(m.size() == 4);
    CHECK(compute_pieces(s).max_piece_length == 1);
  }
}
