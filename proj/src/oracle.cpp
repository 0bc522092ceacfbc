#include "cancelkit/oracle.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <set>

#include "cancelkit/errors.hpp"

namespace cancelkit {

namespace {

const Presentation& builtin(ModelKind k) {
  static const Presentation z2 = parse_presentation("gens: a b\nrel: abAB\n");
  static const Presentation klein = parse_presentation("gens: a b\nrel: abaB\n");
  static const Presentation hex = parse_presentation("gens: x y z\nrel: xyz\nrel: xzy\n");
  static const Presentation freetri = parse_presentation("gens: a b c\nrel: abc\n");
  switch (k) {
    case ModelKind::Z2Commutator: return z2;
    case ModelKind::KleinBottle: return klein;
    case ModelKind::HexZ2: return hex;
    case ModelKind::FreeTriangle: return freetri;
    case ModelKind::Generic: break;
  }
  throw InvalidArg("generic model has no built-in presentation");
}

bool same_member_set(const SymmetrizedSet& a, const SymmetrizedSet& b) {
  return a.members() == b.members();  // both sorted
}

// Append the image of one letter to a reduced free-group word.
void push_reduced(std::string& w, char c) {
  if (!w.empty() && w.back() == inverse_letter(c))
    w.pop_back();
  else
    w.push_back(c);
}

}  // namespace

const char* to_string(ModelKind k) {
  switch (k) {
    case ModelKind::Z2Commutator: return "z2";
    case ModelKind::KleinBottle: return "klein";
    case ModelKind::HexZ2: return "hex";
    case ModelKind::FreeTriangle: return "freetri";
    case ModelKind::Generic: return "generic";
  }
  return "generic";
}

const Presentation& ReferenceModel::builtin_presentation(ModelKind k) { return builtin(k); }

ReferenceModel ReferenceModel::for_presentation(const Presentation& p,
                                                const std::string& selector) {
  ReferenceModel m;
  m.pres_ = p;
  m.sym_ = symmetrize(p);
  auto matches = [&](ModelKind k) {
    const Presentation& bp = builtin(k);
    return bp.generators == p.generators && same_member_set(symmetrize(bp), m.sym_);
  };
  if (selector == "auto") {
    m.kind_ = ModelKind::Generic;
    for (ModelKind k : {ModelKind::Z2Commutator, ModelKind::KleinBottle, ModelKind::HexZ2,
                        ModelKind::FreeTriangle})
      if (matches(k)) {
        m.kind_ = k;
        break;
      }
  } else if (selector == "generic") {
    m.kind_ = ModelKind::Generic;
  } else {
    ModelKind k;
    if (selector == "z2") k = ModelKind::Z2Commutator;
    else if (selector == "klein") k = ModelKind::KleinBottle;
    else if (selector == "hex") k = ModelKind::HexZ2;
    else if (selector == "freetri") k = ModelKind::FreeTriangle;
    else throw InvalidArg("unknown model selector '" + selector + "'");
    if (!matches(k))
      throw ModelMismatch("presentation does not match the built-in '" + selector + "' model");
    m.kind_ = k;
  }
  m.build_abelianization();
  return m;
}

std::string ReferenceModel::alphabet() const {
  std::string a = pres_.generators;
  for (char g : pres_.generators) a.push_back(inverse_letter(g));
  return a;
}

ReferenceModel::Elem ReferenceModel::mul(const Elem& e, char letter) const {
  if (!pres_.contains_letter(letter))
    throw ModelMismatch("letter '" + std::string(1, letter) + "' is outside the model alphabet");
  Elem r = e;
  const bool pos = is_positive(letter);
  const char g = generator_of(letter);
  switch (kind_) {
    case ModelKind::Z2Commutator:
      (g == 'a' ? r.x : r.y) += pos ? 1 : -1;
      return r;
    case ModelKind::KleinBottle:
      // (m, n) * (m', n') = (m + (-1)^n m', n + n')
      if (g == 'a') {
        long long step = pos ? 1 : -1;
        r.x += (e.y % 2 == 0) ? step : -step;
      } else {
        r.y += pos ? 1 : -1;
      }
      return r;
    case ModelKind::HexZ2: {
      long long s = pos ? 1 : -1;
      if (g == 'x') r.x += s;
      else if (g == 'y') r.y += s;
      else { r.x -= s; r.y -= s; }  // z = -x - y
      return r;
    }
    case ModelKind::FreeTriangle: {
      // c maps to b^-1 a^-1 in the free group on {a, b}.
      std::string image;
      if (g == 'c') image = pos ? "BA" : "ab";
      else image = std::string(1, letter);
      for (char c : image) push_reduced(r.w, c);
      return r;
    }
    case ModelKind::Generic:
      break;
  }
  throw ModelMismatch("generic model has no element arithmetic");
}

ReferenceModel::Elem ReferenceModel::eval(const Word& w) const {
  Elem e;
  for (char c : w) e = mul(e, c);
  return e;
}

std::string ReferenceModel::key(const Elem& e) const {
  if (kind_ == ModelKind::FreeTriangle) return e.w;
  return std::to_string(e.x) + "," + std::to_string(e.y);
}

bool ReferenceModel::is_identity(const Elem& e) const {
  return e.x == 0 && e.y == 0 && e.w.empty();
}

void ReferenceModel::build_abelianization() {
  // Row basis (Hermite-style) for the lattice spanned by relator exponent
  // vectors in Z^gens.
  const std::size_t g = pres_.generators.size();
  std::vector<std::vector<long long>> rows;
  for (const Word& r : pres_.relators) {
    std::vector<long long> v(g, 0);
    for (char c : r) {
      std::size_t i = pres_.generators.find(generator_of(c));
      v[i] += is_positive(c) ? 1 : -1;
    }
    rows.push_back(std::move(v));
  }
  // Fraction-free elimination into echelon form over Z.
  std::size_t rank = 0;
  for (std::size_t col = 0; col < g && rank < rows.size(); ++col) {
    for (;;) {
      std::size_t piv = rows.size();
      for (std::size_t i = rank; i < rows.size(); ++i)
        if (rows[i][col] != 0 && (piv == rows.size() ||
                                  std::abs(rows[i][col]) < std::abs(rows[piv][col])))
          piv = i;
      if (piv == rows.size()) break;
      std::swap(rows[rank], rows[piv]);
      bool again = false;
      for (std::size_t i = rank + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        long long q = rows[i][col] / rows[rank][col];
        for (std::size_t j = 0; j < g; ++j) rows[i][j] -= q * rows[rank][j];
        if (rows[i][col] != 0) again = true;
      }
      if (!again) {
        ++rank;
        break;
      }
    }
  }
  rows.resize(rank);
  abel_basis_ = std::move(rows);
}

bool ReferenceModel::abelianization_separates(const Word& w) const {
  const std::size_t g = pres_.generators.size();
  std::vector<long long> v(g, 0);
  for (char c : w) {
    std::size_t i = pres_.generators.find(generator_of(c));
    if (i == std::string::npos)
      throw ModelMismatch("letter '" + std::string(1, c) + "' is outside the model alphabet");
    v[i] += is_positive(c) ? 1 : -1;
  }
  // Reduce v by the echelon basis; nonzero remainder means w != 1 in the
  // abelianized group.
  for (const auto& row : abel_basis_) {
    std::size_t lead = 0;
    while (lead < g && row[lead] == 0) ++lead;
    if (lead == g) continue;
    if (v[lead] % row[lead] != 0) continue;
    long long q = v[lead] / row[lead];
    for (std::size_t j = 0; j < g; ++j) v[j] -= q * row[j];
  }
  return std::any_of(v.begin(), v.end(), [](long long c) { return c != 0; });
}

Oracle::Oracle(ReferenceModel model, int rewrite_slack, int rewrite_cap)
    : model_(std::move(model)), rewrite_slack_(rewrite_slack), rewrite_cap_(rewrite_cap) {}

void Oracle::check_alphabet(const Word& w) const {
  for (char c : w)
    if (!model_.presentation().contains_letter(c))
      throw ModelMismatch("letter '" + std::string(1, c) + "' is outside the model alphabet");
}

EqVerdict Oracle::equal(const Word& w1, const Word& w2, int rewrite_cap) const {
  check_alphabet(w1);
  check_alphabet(w2);
  if (model_.exact()) {
    bool eq = model_.key(model_.eval(w1)) == model_.key(model_.eval(w2));
    return {eq ? EqVerdict::V::Equal : EqVerdict::V::Distinct, 0};
  }
  Word start = free_reduce(w1 + inverse_word(w2));
  if (start.empty()) return {EqVerdict::V::Equal, 0};
  if (model_.abelianization_separates(start)) return {EqVerdict::V::Distinct, 0};
  int cap = rewrite_cap > 0 ? rewrite_cap : rewrite_cap_;
  if (cap <= 0) cap = static_cast<int>(start.size()) + rewrite_slack_;

  // Best-first over rewrites, shortest words first, so that a shortening path
  // to the empty word is found without flooding the long layers. The node
  // budget keeps exhaustion (Inconclusive) cheap.
  constexpr std::size_t kNodeBudget = 20000;
  std::set<Word> seen{start};
  std::priority_queue<std::pair<std::size_t, Word>, std::vector<std::pair<std::size_t, Word>>,
                      std::greater<>>
      queue;
  queue.emplace(start.size(), start);
  while (!queue.empty() && seen.size() < kNodeBudget) {
    Word cur = queue.top().second;
    queue.pop();
    for (std::size_t i = 0; i < cur.size(); ++i) {
      for (const Word& r : model_.symmetrized().members()) {
        std::size_t max_l = std::min(r.size(), cur.size() - i);
        for (std::size_t l = 1; l <= max_l; ++l) {
          if (cur.compare(i, l, r, 0, l) != 0) continue;
          // r = u t with u matched: u equals t^-1 in the group.
          Word next = free_reduce(cur.substr(0, i) + inverse_word(r.substr(l)) + cur.substr(i + l));
          if (next.empty()) return {EqVerdict::V::Equal, 0};
          if (static_cast<int>(next.size()) > cap) continue;
          if (seen.insert(next).second) queue.emplace(next.size(), next);
        }
      }
    }
  }
  return {EqVerdict::V::Inconclusive, cap};
}

void Oracle::grow_ball(int radius) {
  if (!model_.exact())
    throw ModelMismatch("generic model has no exact element table");
  if (ball_.radius < 0) {
    ball_.radius = 0;
    ball_.table[model_.key(model_.identity())] = 0;
    ball_.spheres = {1};
    frontier_ = {model_.identity()};
  }
  std::string letters = model_.alphabet();
  while (ball_.radius < radius) {
    std::vector<ReferenceModel::Elem> next_frontier;
    long long count = 0;
    for (const ReferenceModel::Elem& e : frontier_) {
      for (char c : letters) {
        ReferenceModel::Elem n = model_.mul(e, c);
        std::string k = model_.key(n);
        if (ball_.table.emplace(k, ball_.radius + 1).second) {
          next_frontier.push_back(std::move(n));
          ++count;
        }
      }
    }
    frontier_ = std::move(next_frontier);
    ball_.spheres.push_back(count);
    ++ball_.radius;
  }
}

std::optional<int> Oracle::distance(const Word& w, int radius_cap) {
  check_alphabet(w);
  if (!model_.exact())
    throw ModelMismatch("generic model has no exact element table");
  std::string target = model_.key(model_.eval(w));
  if (ball_.radius >= 0) {
    auto it = ball_.table.find(target);
    if (it != ball_.table.end()) return it->second;
  }
  while (ball_.radius < radius_cap) {
    grow_ball(ball_.radius + 1);
    auto it = ball_.table.find(target);
    if (it != ball_.table.end()) return it->second;
  }
  auto it = ball_.table.find(target);
  if (it != ball_.table.end()) return it->second;
  return std::nullopt;
}

std::optional<bool> Oracle::conjugate(const Word& w1, const Word& w2) const {
  check_alphabet(w1);
  check_alphabet(w2);
  switch (model_.kind()) {
    case ModelKind::Z2Commutator:
    case ModelKind::HexZ2:
      // Abelian: conjugacy is equality.
      return model_.key(model_.eval(w1)) == model_.key(model_.eval(w2));
    case ModelKind::KleinBottle: {
      auto a = model_.eval(w1);
      auto b = model_.eval(w2);
      if (a.y != b.y) return false;
      // Conjugation fixes n, negates m, and shifts m by 2 when n is odd.
      if (a.y % 2 != 0) return ((a.x - b.x) % 2) == 0;
      return a.x == b.x || a.x == -b.x;
    }
    case ModelKind::FreeTriangle: {
      // Free-group conjugacy: equal cyclic words.
      Word ca = cyclic_reduce(model_.eval(w1).w).core;
      Word cb = cyclic_reduce(model_.eval(w2).w).core;
      if (ca.size() != cb.size()) return false;
      return least_rotation(ca) == least_rotation(cb);
    }
    case ModelKind::Generic:
      return std::nullopt;
  }
  return std::nullopt;
}

Rational Oracle::tau_estimate(const Word& w, int kmax, int radius_cap) {
  if (kmax < 1) throw InvalidArg("tau_estimate needs kmax >= 1");
  Word p = power_word(free_reduce(w), kmax);
  int cap = radius_cap > 0 ? radius_cap : static_cast<int>(p.size());
  auto d = distance(p, cap);
  if (!d) throw CapExceeded("power left the feasible search radius");
  return Rational::make(*d, kmax);
}

const CayleyBall& Oracle::ball(int radius) {
  grow_ball(radius);
  return ball_;
}

EqVerdict oracle_equal(const Word& w1, const Word& w2, const ReferenceModel& m, int bound) {
  return Oracle(m).equal(w1, w2, bound);
}

std::optional<int> oracle_distance(const Word& w, const ReferenceModel& m, int radius_cap) {
  Oracle o(m);
  return o.distance(w, radius_cap);
}

CayleyBall cayley_ball(const ReferenceModel& m, int radius) {
  Oracle o(m);
  return o.ball(radius);
}

Rational tau_estimate(const Word& w, const ReferenceModel& m, int kmax) {
  Oracle o(m);
  return o.tau_estimate(w, kmax);
}

}  // namespace cancelkit
