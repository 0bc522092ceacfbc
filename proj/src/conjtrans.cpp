#include "cancelkit/conjtrans.hpp"

#include <algorithm>
#include <deque>

#include "cancelkit/errors.hpp"

namespace cancelkit {

namespace {

struct Normalized {
  Word core;
  Word conj;
};

// Keep the invariant  input = conj * core * conj^-1  while freely and
// cyclically reducing the candidate.
Normalized normalize(const Word& z, const Word& h) {
  CyclicReduction cr = cyclic_reduce(free_reduce(z));
  return {cr.core, free_reduce(h + cr.conjugator)};
}

Word canonical_cyclic(const Word& v) {
  Word a = least_rotation(v);
  Word b = least_rotation(inverse_word(v));
  return std::min(a, b);
}

}  // namespace

ConjContext::ConjContext(GeodesicContext geo, Oracle oracle, ConjOptions opt)
    : geo_(std::move(geo)), oracle_(std::move(oracle)), opt_(opt) {}

const GeodesicDfa& ConjContext::dfa() {
  if (!dfa_) dfa_ = build_geodesic_dfa(geo_);
  return *dfa_;
}

const std::vector<Word>& ConjContext::conjugators(int bound) {
  auto it = conjugator_cache_.find(bound);
  if (it != conjugator_cache_.end()) return it->second;
  std::vector<Word> out{""};
  std::vector<Word> frontier{""};
  const std::string& letters = geo_.alphabet();
  for (int len = 1; len <= bound; ++len) {
    std::vector<Word> next;
    for (const Word& w : frontier)
      for (char c : letters) {
        if (!w.empty() && c == inverse_letter(w.back())) continue;
        next.push_back(w + c);
      }
    frontier = std::move(next);
    out.insert(out.end(), frontier.begin(), frontier.end());
  }
  return conjugator_cache_.emplace(bound, std::move(out)).first->second;
}

ClassRep shortest_class_rep(const Word& w, ConjContext& ctx) {
  auto cached = ctx.rep_cache().find(w);
  if (cached != ctx.rep_cache().end()) return cached->second;

  const GeodesicContext& geo = ctx.geo();
  struct Node {
    Word word;
    Word conj;
    int parent;
    std::string step;
  };
  std::vector<Node> nodes;
  std::map<Word, int> visited;
  std::deque<int> queue;

  Normalized start = normalize(w, "");
  const std::size_t cap = start.core.size() + 1;

  auto admit = [&](const Word& z, const Word& h, int parent, std::string step) {
    Normalized nz = normalize(z, h);
    if (nz.core.size() > cap) return;
    if (visited.count(nz.core)) return;
    nodes.push_back({nz.core, nz.conj, parent, std::move(step)});
    visited.emplace(nz.core, static_cast<int>(nodes.size()) - 1);
    queue.push_back(static_cast<int>(nodes.size()) - 1);
  };

  admit(w, "", -1, "start");
  while (!queue.empty()) {
    int id = queue.front();
    queue.pop_front();
    const Word z = nodes[static_cast<std::size_t>(id)].word;
    const Word h = nodes[static_cast<std::size_t>(id)].conj;
    if (z.size() >= 2) admit(rotate(z, 1), h + z[0], id, "rotate");
    ReductionResult red = reduce_to_geodesic(z, geo);
    if (red.geodesic != z) admit(red.geodesic, h, id, "reduce");
    if (auto ws = wrap_strip_shorten(z, geo))
      admit(ws->shorter, h + ws->conjugator, id, "wrap");
    for (char x : geo.alphabet()) {
      Word conjugated = free_reduce(std::string(1, x) + z + std::string(1, inverse_letter(x)));
      Word reduced = reduce_to_geodesic(conjugated, geo).geodesic;
      admit(reduced, h + inverse_letter(x), id, std::string("conj ") + x);
    }
  }

  int best = 0;
  for (int id = 1; id < static_cast<int>(nodes.size()); ++id) {
    const Word& cand = nodes[static_cast<std::size_t>(id)].word;
    const Word& cur = nodes[static_cast<std::size_t>(best)].word;
    if (cand.size() < cur.size() || (cand.size() == cur.size() && cand < cur)) best = id;
  }

  ClassRep rep;
  rep.rep = nodes[static_cast<std::size_t>(best)].word;
  rep.length = static_cast<int>(rep.rep.size());
  rep.conjugator = nodes[static_cast<std::size_t>(best)].conj;
  for (int id = best; id >= 0; id = nodes[static_cast<std::size_t>(id)].parent)
    rep.trail.push_back(nodes[static_cast<std::size_t>(id)].step);
  std::reverse(rep.trail.begin(), rep.trail.end());

  rep.certified = false;
  if (ctx.options().certify && ctx.oracle().model().exact()) {
    bool shorter_found = false;
    if (rep.length > 0) {
      for (const Word& h : ctx.conjugators(ctx.options().sweep_bound)) {
        Word conj = free_reduce(h + rep.rep + inverse_word(h));
        auto d = ctx.oracle().distance(conj, rep.length);
        if (d && *d < rep.length) {
          shorter_found = true;
          break;
        }
      }
    }
    rep.certified = !shorter_found;
  }

  ctx.rep_cache().emplace(w, rep);
  return rep;
}

HalfInteger translation_number(const Word& w, ConjContext& ctx) {
  ClassRep rep = shortest_class_rep(w, ctx);
  const long n = rep.length;
  if (n == 0) return {0};
  if (ctx.geo().kind() == GeometryKind::Square && n == 1) return {2};
  // A power of a class-minimal word is n-locally geodesic, so any bad subword
  // in the bi-infinite power has length n+1 or n+2 and some occurrence starts
  // in the first period; u^4 covers every such window.
  auto cert = find_bad_subword(power_word(rep.rep, 4), ctx.geo());
  const bool wall = cert.has_value();
  if (ctx.geo().kind() == GeometryKind::Square) return {wall ? 2 * (n - 1) : 2 * n};
  return {wall ? 2 * n - 1 : 2 * n};
}

int power_length(const Word& w, int k, const GeodesicContext& geo) {
  if (k < 1) throw InvalidArg("power_length needs k >= 1");
  return static_cast<int>(reduce_to_geodesic(power_word(free_reduce(w), k), geo).geodesic.size());
}

ConjAnswer conjugate_in_group(const Word& w1, const Word& w2, ConjContext& ctx) {
  ClassRep r1 = shortest_class_rep(w1, ctx);
  ClassRep r2 = shortest_class_rep(w2, ctx);

  if (r1.length == r2.length) {
    const std::vector<Word> rots = rotations(r2.rep);
    for (std::size_t k = 0; k < rots.size(); ++k) {
      if (rots[k] != r1.rep) continue;
      Word pre = r2.rep.substr(0, k);
      Word h = free_reduce(r1.conjugator + inverse_word(pre) + inverse_word(r2.conjugator));
      return {ConjAnswer::V::Yes, h};
    }
  } else if (r1.certified && r2.certified) {
    return {ConjAnswer::V::No, ""};
  }

  auto oc = ctx.oracle().conjugate(w1, w2);
  if (oc && !*oc) return {ConjAnswer::V::No, ""};

  for (const Word& h : ctx.conjugators(ctx.options().conjugator_bound)) {
    Word candidate = free_reduce(h + w2 + inverse_word(h));
    if (ctx.oracle().equal(candidate, w1).equal()) return {ConjAnswer::V::Yes, h};
  }
  return {ConjAnswer::V::Inconclusive, ""};
}

RootAnswer nth_root(const Word& w, int n, ConjContext& ctx) {
  if (n < 1) throw InvalidArg("nth_root needs n >= 1");
  RootAnswer out;
  if (n == 1) {
    out.v = RootAnswer::V::Yes;
    out.witness = w;
    return out;
  }
  ClassRep rep = shortest_class_rep(w, ctx);
  const int lu = rep.length;
  if (lu == 0) {
    // Trivial input: the identity is an n-th root of itself.
    out.v = RootAnswer::V::Yes;
    return out;
  }
  const bool square = ctx.geo().kind() == GeometryKind::Square;
  if ((square && lu < n) || (!square && 2 * lu < n)) {
    // A root would have translation number tau(w)/n below the minimum
    // positive translation number of the class.
    out.v = RootAnswer::V::No;
    out.reason = RootAnswer::Reason::LengthBound;
    return out;
  }
  const int bound = square ? lu / n + 1 : (2 * lu + n) / (2 * n);

  bool any_inconclusive = false;
  std::set<Word> seen;
  for (const Word& v : enumerate_geodesics(ctx.dfa(), bound)) {
    if (v.empty()) continue;
    Word canon = canonical_cyclic(v);
    if (!seen.insert(canon).second) continue;
    std::vector<Word> candidates{v};
    if (least_rotation(inverse_word(v)) != least_rotation(v)) candidates.push_back(inverse_word(v));
    for (const Word& cand : candidates) {
      ConjAnswer ans = conjugate_in_group(w, power_word(cand, n), ctx);
      if (ans.v == ConjAnswer::V::Yes) {
        out.v = RootAnswer::V::Yes;
        out.witness = cand;
        out.conjugator = ans.conjugator;
        return out;
      }
      if (ans.v == ConjAnswer::V::Inconclusive) any_inconclusive = true;
    }
  }
  if (any_inconclusive) {
    out.v = RootAnswer::V::Inconclusive;
    out.bound = bound;
    return out;
  }
  out.v = RootAnswer::V::No;
  out.reason = RootAnswer::Reason::Exhausted;
  return out;
}

MaxRootAnswer max_root(const Word& w, ConjContext& ctx) {
  ClassRep rep = shortest_class_rep(w, ctx);
  if (rep.length == 0) throw IdentityInput("max_root needs a nontrivial element");
  const bool square = ctx.geo().kind() == GeometryKind::Square;
  const int cap = square ? rep.length : 2 * rep.length;
  bool inconclusive_above = false;
  for (int n = cap; n >= 2; --n) {
    RootAnswer ans = nth_root(w, n, ctx);
    if (ans.v == RootAnswer::V::Yes)
      return {inconclusive_above ? MaxRootAnswer::V::Inconclusive : MaxRootAnswer::V::Yes, n,
              ans.witness};
    if (ans.v == RootAnswer::V::Inconclusive) inconclusive_above = true;
  }
  return {inconclusive_above ? MaxRootAnswer::V::Inconclusive : MaxRootAnswer::V::Yes, 1, w};
}

PowerConjAnswer power_conjugacy(const Word& w1, const Word& w2, ConjContext& ctx) {
  ClassRep rep1 = shortest_class_rep(w1, ctx);
  if (rep1.length == 0) {
    // Trivial w1 is w2^0 exactly.
    return {PowerConjAnswer::V::Yes, 0, ""};
  }
  // If w1 ~ w2^n then tau(w1) = |n| tau(w2) >= |n|/2, and tau(w1) <= l(rep1).
  const long cap = 2L * rep1.length;
  bool any_inconclusive = false;
  for (long k = 1; k <= cap; ++k) {
    for (long n : {k, -k}) {
      ConjAnswer ans = conjugate_in_group(w1, power_word(w2, n), ctx);
      if (ans.v == ConjAnswer::V::Yes) return {PowerConjAnswer::V::Yes, n, ans.conjugator};
      if (ans.v == ConjAnswer::V::Inconclusive) any_inconclusive = true;
    }
  }
  if (any_inconclusive) return {PowerConjAnswer::V::Inconclusive, 0, ""};
  return {PowerConjAnswer::V::No, 0, ""};
}

ClassCount count_classes_by_tau(HalfInteger r, ConjContext& ctx) {
  if (r.twice < 0) throw InvalidArg("count_classes_by_tau needs r >= 0");
  const bool square = ctx.geo().kind() == GeometryKind::Square;
  // tau >= n - 1 (squares) resp. n - 1/2 (triangles) bounds class lengths.
  const int max_len = square ? static_cast<int>((r.twice + 2) / 2)
                             : static_cast<int>((r.twice + 1) / 2);
  struct Cls {
    Word canon;
    HalfInteger tau;
  };
  std::vector<Cls> kept;
  std::set<Word> seen_canon;
  bool conclusive = true;
  for (const Word& w : enumerate_geodesics(ctx.dfa(), max_len)) {
    ClassRep rep = shortest_class_rep(w, ctx);
    if (!seen_canon.insert(rep.rep).second) continue;
    bool merged = false;
    for (const Cls& cls : kept) {
      if (cls.canon.size() != static_cast<std::size_t>(rep.length)) continue;
      ConjAnswer ans = conjugate_in_group(rep.rep, cls.canon, ctx);
      if (ans.v == ConjAnswer::V::Yes) {
        merged = true;
        break;
      }
      if (ans.v == ConjAnswer::V::Inconclusive) conclusive = false;
    }
    if (merged) continue;
    HalfInteger tau = translation_number(rep.rep, ctx);
    if (tau <= r) kept.push_back({rep.rep, tau});
  }
  ClassCount out;
  out.conclusive = conclusive;
  out.count = static_cast<long long>(kept.size());
  for (const Cls& c : kept) out.reps.push_back(c.canon);
  std::sort(out.reps.begin(), out.reps.end(), [](const Word& a, const Word& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

}  // namespace cancelkit
