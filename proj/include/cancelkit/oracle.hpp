#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cancelkit/halfint.hpp"
#include "cancelkit/presentation.hpp"

namespace cancelkit {

enum class ModelKind { Z2Commutator, KleinBottle, HexZ2, FreeTriangle, Generic };
const char* to_string(ModelKind k);

struct EqVerdict {
  enum class V { Equal, Distinct, Inconclusive };
  V v = V::Inconclusive;
  int bound = 0;  // the exhausted cap, for Inconclusive

  bool equal() const { return v == V::Equal; }
  bool distinct() const { return v == V::Distinct; }
  bool inconclusive() const { return v == V::Inconclusive; }
};

struct CayleyBall {
  int radius = -1;
  std::unordered_map<std::string, int> table;  // element key -> distance
  std::vector<long long> spheres;              // spheres[d] = #elements at distance d
};

// A closed-form group structure for one of the built-in presentations, or a
// bounded-rewriting stand-in for anything else. The closed forms are what
// make this layer independent of the strip machinery.
class ReferenceModel {
 public:
  struct Elem {
    long long x = 0, y = 0;  // lattice coordinates (z2 / klein / hex)
    std::string w;           // reduced free-group word (freetri)
  };

  static const Presentation& builtin_presentation(ModelKind k);

  // selector: auto | z2 | klein | hex | freetri | generic. "auto" matches the
  // presentation against the built-ins by symmetrized-set equality.
  static ReferenceModel for_presentation(const Presentation& p,
                                         const std::string& selector = "auto");

  ModelKind kind() const { return kind_; }
  const Presentation& presentation() const { return pres_; }
  const SymmetrizedSet& symmetrized() const { return sym_; }
  std::string alphabet() const;  // lowercase gens then uppercase, declaration order

  bool exact() const { return kind_ != ModelKind::Generic; }

  // Largest Cayley-ball radius that stays desk-sized. The free model grows
  // by a factor of four per step; the lattice models grow quadratically.
  int feasible_ball_radius() const { return kind_ == ModelKind::FreeTriangle ? 10 : 64; }

  Elem identity() const { return {}; }
  Elem mul(const Elem& e, char letter) const;  // throws ModelMismatch on foreign letters
  Elem eval(const Word& w) const;
  std::string key(const Elem& e) const;
  bool is_identity(const Elem& e) const;

  // Exponent vector of w mapped into Z^gens modulo the relator lattice;
  // nonzero image separates elements in any model.
  bool abelianization_separates(const Word& w) const;

 private:
  ModelKind kind_ = ModelKind::Generic;
  Presentation pres_;
  SymmetrizedSet sym_;
  std::vector<std::vector<long long>> abel_basis_;  // row basis of relator lattice
  void build_abelianization();
};

// Stateful oracle with a cached, growable Cayley ball.
class Oracle {
 public:
  // Rewriting searches are capped at start length + slack, or at the
  // absolute cap when one is given.
  explicit Oracle(ReferenceModel model, int rewrite_slack = 4, int rewrite_cap = -1);

  const ReferenceModel& model() const { return model_; }

  // Exact for reference models. Generic: bounded relator rewriting, Distinct
  // only from abelianization, otherwise Equal / Inconclusive.
  EqVerdict equal(const Word& w1, const Word& w2, int rewrite_cap = -1) const;

  // Word-metric length of w, or nullopt when > radius_cap. Reference models only.
  std::optional<int> distance(const Word& w, int radius_cap);

  // Exact conjugacy decision; nullopt for the generic model.
  std::optional<bool> conjugate(const Word& w1, const Word& w2) const;

  // l_X(w^kmax) / kmax as an exact rational (upper bound on tau within 1/kmax).
  Rational tau_estimate(const Word& w, int kmax, int radius_cap = -1);

  const CayleyBall& ball(int radius);

 private:
  void grow_ball(int radius);
  void check_alphabet(const Word& w) const;

  ReferenceModel model_;
  int rewrite_slack_;
  int rewrite_cap_;
  CayleyBall ball_;
  std::vector<ReferenceModel::Elem> frontier_;
};

// One-shot forms.
EqVerdict oracle_equal(const Word& w1, const Word& w2, const ReferenceModel& m, int bound = -1);
std::optional<int> oracle_distance(const Word& w, const ReferenceModel& m, int radius_cap = 10);
CayleyBall cayley_ball(const ReferenceModel& m, int radius);
Rational tau_estimate(const Word& w, const ReferenceModel& m, int kmax);

}  // namespace cancelkit
