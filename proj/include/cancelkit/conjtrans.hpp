#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "cancelkit/dfa.hpp"
#include "cancelkit/geodesic.hpp"
#include "cancelkit/halfint.hpp"
#include "cancelkit/oracle.hpp"

namespace cancelkit {

struct ConjOptions {
  int conjugator_bound = 6;  // witness search in conjugacy tests
  int sweep_bound = 6;       // certification sweep conjugator length
  bool certify = true;
};

struct ClassRep {
  Word rep;          // cyclically reduced, every rotation geodesic
  int length = 0;
  Word conjugator;   // input = conjugator * rep * conjugator^-1 in the group
  std::vector<std::string> trail;
  bool certified = false;
};

// Geometry, oracle and search bounds bundled for the conjugacy-side
// operations; caches the DFA and class representatives.
class ConjContext {
 public:
  ConjContext(GeodesicContext geo, Oracle oracle, ConjOptions opt = {});

  const GeodesicContext& geo() const { return geo_; }
  Oracle& oracle() { return oracle_; }
  const ConjOptions& options() const { return opt_; }
  const GeodesicDfa& dfa();
  // Freely reduced conjugator candidates up to the length bound, shortlex.
  const std::vector<Word>& conjugators(int bound);

  std::map<Word, ClassRep>& rep_cache() { return rep_cache_; }

 private:
  GeodesicContext geo_;
  Oracle oracle_;
  ConjOptions opt_;
  std::optional<GeodesicDfa> dfa_;
  std::map<int, std::vector<Word>> conjugator_cache_;
  std::map<Word, ClassRep> rep_cache_;
};

// Minimum-length conjugacy-class representative found by a closure search
// over rotations, strip reductions, ring shortenings and one-letter
// conjugations; lexicographically least among the minimal words visited.
ClassRep shortest_class_rep(const Word& w, ConjContext& ctx);

HalfInteger translation_number(const Word& w, ConjContext& ctx);

// Word-metric length of w^k.
int power_length(const Word& w, int k, const GeodesicContext& geo);

struct ConjAnswer {
  enum class V { Yes, No, Inconclusive };
  V v = V::Inconclusive;
  Word conjugator;  // Yes: w1 = conjugator * w2 * conjugator^-1
};

// Three tiers: certified class-length comparison, rotation equivalence of
// canonical representatives, bounded conjugator search; the reference model's
// closed-form conjugacy supplies final refutations.
ConjAnswer conjugate_in_group(const Word& w1, const Word& w2, ConjContext& ctx);

struct RootAnswer {
  enum class V { Yes, No, Inconclusive };
  enum class Reason { None, LengthBound, Exhausted };
  V v = V::Inconclusive;
  Word witness;     // Yes: witness^n is conjugate to the input
  Word conjugator;  // Yes: input = conjugator * witness^n * conjugator^-1
  Reason reason = Reason::None;
  int bound = 0;    // Inconclusive: exhausted candidate length bound
};

RootAnswer nth_root(const Word& w, int n, ConjContext& ctx);

struct MaxRootAnswer {
  enum class V { Yes, Inconclusive };
  V v = V::Yes;
  int n = 1;
  Word witness;
};

MaxRootAnswer max_root(const Word& w, ConjContext& ctx);

struct PowerConjAnswer {
  enum class V { Yes, No, Inconclusive };
  V v = V::No;
  long n = 0;
  Word conjugator;
};

PowerConjAnswer power_conjugacy(const Word& w1, const Word& w2, ConjContext& ctx);

struct ClassCount {
  long long count = 0;
  std::vector<Word> reps;   // shortlex
  bool conclusive = true;   // false when a conjugacy test was inconclusive
};

ClassCount count_classes_by_tau(HalfInteger r, ConjContext& ctx);

}  // namespace cancelkit
