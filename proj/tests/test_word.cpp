#include <doctest.h>

#include <random>

#include "cancelkit/word.hpp"
#include "support.hpp"

using namespace cancelkit;

TEST_CASE("free reduction cancels inverse pairs") {
  CHECK(free_reduce("aA") == "");
  CHECK(free_reduce("abBA") == "");
  CHECK(free_reduce("aba") == "aba");
  CHECK(free_reduce("") == "");
  CHECK(free_reduce("abBc") == "ac");
}

TEST_CASE("free reduction is idempotent and kills w w^-1") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    Word w;
    std::uniform_int_distribution<int> len(0, 12);
    std::uniform_int_distribution<int> pick(0, 3);
    int n = len(rng);
    for (int j = 0; j < n; ++j) w.push_back("abAB"[pick(rng)]);
    Word r = free_reduce(w);
    CHECK(is_freely_reduced(r));
    CHECK(free_reduce(r) == r);
    CHECK(free_reduce(w + inverse_word(w)).empty());
  }
}

TEST_CASE("cyclic reduction strips matching ends") {
  auto r1 = cyclic_reduce("Baab");
  CHECK(r1.core == "aa");
  CHECK(r1.conjugator == "B");
  auto r2 = cyclic_reduce("ab");
  CHECK(r2.core == "ab");
  CHECK(r2.conjugator == "");
  auto r3 = cyclic_reduce("aBA");
  CHECK(r3.core == "B");
  CHECK(r3.conjugator == "a");
}

TEST_CASE("cyclic reduction reassembles to the free reduction") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    Word w = testsupport::random_reduced(rng, "abAB", static_cast<int>(rng() % 10));
    auto cr = cyclic_reduce(w);
    CHECK(is_cyclically_reduced(cr.core));
    CHECK(free_reduce(cr.conjugator + cr.core + inverse_word(cr.conjugator)) == free_reduce(w));
  }
}

TEST_CASE("inverse word is an involution") {
  CHECK(inverse_word("abAB") == "baBA");
  CHECK(inverse_word("") == "");
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    Word w = testsupport::random_reduced(rng, "abcABC", static_cast<int>(rng() % 8));
    CHECK(inverse_word(inverse_word(w)) == w);
  }
}

TEST_CASE("rotations and least rotation") {
  CHECK(rotate("abc", 1) == "bca");
  CHECK(rotations("ab") == std::vector<Word>{"ab", "ba"});
  CHECK(least_rotation("bca") == "abc");
  CHECK(rotations("").size() == 1);
}

TEST_CASE("proper power test agrees with the naive divisor check") {
  auto naive = [](const Word& w) {
    for (std::size_t p = 1; p < w.size(); ++p) {
      if (w.size() % p != 0) continue;
      Word built;
      while (built.size() < w.size()) built += w.substr(0, p);
      if (built == w) return true;
    }
    return false;
  };
  CHECK(is_proper_power("aaaa"));
  CHECK(is_proper_power("abab"));
  CHECK(!is_proper_power("abAB"));
  CHECK(!is_proper_power("a"));
  std::mt19937_64 rng(17);
  for (int i = 0; i < 500; ++i) {
    Word w = testsupport::random_reduced(rng, "abAB", 1 + static_cast<int>(rng() % 8));
    CHECK(is_proper_power(w) == naive(w));
  }
}

TEST_CASE("power word") {
  CHECK(power_word("ab", 3) == "ababab");
  CHECK(power_word("ab", 0) == "");
  CHECK(power_word("ab", -2) == "BABA");
}
