#include <doctest.h>

#include <random>
#include <set>

#include "cancelkit/errors.hpp"
#include "cancelkit/presentation.hpp"
#include "support.hpp"

using namespace cancelkit;

TEST_CASE("parsing presentations") {
  Presentation p = parse_presentation("gens: a b\nrel: abAB");
  CHECK(p.generators == "ab");
  REQUIRE(p.relators.size() == 1);
  CHECK(p.relators[0] == "abAB");

  CHECK_THROWS_AS(parse_presentation("gens: a b\nrel: abBA"), RelatorError);

  Presentation q = parse_presentation("gens: x y z\nrel: xyz\nrel: xzy");
  CHECK(q.relators.size() == 2);
}

TEST_CASE("parser rejects malformed input") {
  CHECK_THROWS_AS(parse_presentation("rel: abAB"), SyntaxError);
  CHECK_THROWS_AS(parse_presentation("gens: a b"), SyntaxError);             // no relators
  CHECK_THROWS_AS(parse_presentation("gens: a a\nrel: aaa"), SyntaxError);   // dup generator
  CHECK_THROWS_AS(parse_presentation("gens: a b\nrel: abc"), AlphabetError);
  CHECK_THROWS_AS(parse_presentation("gens: a b\nrel: ab"), RelatorError);   // too short
  CHECK_THROWS_AS(parse_presentation("gens: a b\nrel: aabA"), RelatorError); // not cyclically reduced
  CHECK_THROWS_AS(parse_presentation("gens: a b\nwat: x"), SyntaxError);
  // Duplicate after symmetrization: bABa is a rotation of the inverse of abAB.
  CHECK_THROWS_AS(parse_presentation("gens: a b\nrel: abAB\nrel: bABa"), RelatorError);
}

TEST_CASE("comments and blank lines are ignored") {
  Presentation p = parse_presentation("# header\n\ngens: a b  # trailing\nrel: abAB # note\n\n");
  CHECK(p.generators == "ab");
  CHECK(p.relators == std::vector<Word>{"abAB"});
}

TEST_CASE("serialize round-trips through the parser") {
  for (const Presentation& p :
       {testsupport::z2(), testsupport::hexp(), testsupport::freetri()}) {
    Presentation q = parse_presentation(p.serialize());
    CHECK(q.generators == p.generators);
    CHECK(q.relators == p.relators);
    CHECK(q.serialize() == p.serialize());
  }
}

TEST_CASE("word parsing validates the alphabet") {
  Presentation p = testsupport::z2();
  CHECK(parse_word("abAB", p) == "abAB");
  CHECK(parse_word("", p) == "");
  CHECK_THROWS_AS(parse_word("abc", p), AlphabetError);
  CHECK_THROWS_AS(parse_word("a b", p), SyntaxError);
}

TEST_CASE("symmetrized set of the commutator presentation") {
  SymmetrizedSet s = symmetrize(testsupport::z2());
  std::set<Word> expected{"abAB", "bABa", "ABab", "BabA", "baBA", "aBAb", "BAba", "AbaB"};
  std::set<Word> got(s.members().begin(), s.members().end());
  CHECK(got == expected);
}

TEST_CASE("symmetrized set of a triangle relator") {
  SymmetrizedSet s = symmetrize(testsupport::freetri());
  std::set<Word> expected{"abc", "bca", "cab", "CBA", "BAC", "ACB"};
  std::set<Word> got(s.members().begin(), s.members().end());
  CHECK(got == expected);
}

TEST_CASE("symmetrize is idempotent on an already symmetrized relator list") {
  SymmetrizedSet s = symmetrize(testsupport::z2());
  Presentation flat{"ab", s.members()};
  SymmetrizedSet t = symmetrize(flat);
  CHECK(t.members() == s.members());
}

TEST_CASE("symmetrized sets are closed under rotation and inversion") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    Word r;
    do {
      r = testsupport::random_reduced(rng, "abAB", 3 + static_cast<int>(rng() % 4));
    } while (!is_cyclically_reduced(r));
    Presentation p{"ab", {r}};
    SymmetrizedSet s = symmetrize(p);
    for (const Word& m : s.members()) {
      CHECK(is_cyclically_reduced(m));
      CHECK(s.contains(rotate(m, 1)));
      CHECK(s.contains(inverse_word(m)));
      for (std::size_t len = 1; len <= m.size(); ++len) {
        const auto& ids = s.members_with_prefix(m.substr(0, len));
        bool found = false;
        for (int id : ids) found = found || s.member(id) == m;
        CHECK(found);
      }
    }
  }
}

TEST_CASE("origins point back at relators") {
  Presentation p = testsupport::hexp();
  SymmetrizedSet s = symmetrize(p);
  for (int id = 0; id < s.size(); ++id) {
    auto o = s.origin(id);
    Word base = o.inverted ? inverse_word(p.relators[static_cast<std::size_t>(o.relator)])
                           : p.relators[static_cast<std::size_t>(o.relator)];
    CHECK(rotate(base, static_cast<std::size_t>(o.rotation)) == s.member(id));
  }
}
