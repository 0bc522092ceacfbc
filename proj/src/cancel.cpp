#include "cancelkit/cancel.hpp"

#include <algorithm>
#include <limits>

namespace cancelkit {

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

// Minimum number of pieces multiplying to r, with the DP path for a witness.
// Returns kInf when r has no piece factorization at all.
int min_piece_factorization(const Word& r, const PieceIndex& pieces,
                            std::vector<Word>* decomposition) {
  const int n = static_cast<int>(r.size());
  std::vector<int> dist(static_cast<std::size_t>(n) + 1, kInf);
  std::vector<int> from(static_cast<std::size_t>(n) + 1, -1);
  dist[0] = 0;
  for (int j = 1; j <= n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (dist[static_cast<std::size_t>(i)] == kInf) continue;
      if (j - i > pieces.max_piece_length) continue;
      if (!pieces.is_piece(r.substr(static_cast<std::size_t>(i), static_cast<std::size_t>(j - i))))
        continue;
      if (dist[static_cast<std::size_t>(i)] + 1 < dist[static_cast<std::size_t>(j)]) {
        dist[static_cast<std::size_t>(j)] = dist[static_cast<std::size_t>(i)] + 1;
        from[static_cast<std::size_t>(j)] = i;
      }
    }
  }
  if (dist[static_cast<std::size_t>(n)] == kInf) return kInf;
  if (decomposition) {
    decomposition->clear();
    for (int j = n; j > 0; j = from[static_cast<std::size_t>(j)]) {
      int i = from[static_cast<std::size_t>(j)];
      decomposition->push_back(r.substr(static_cast<std::size_t>(i), static_cast<std::size_t>(j - i)));
    }
    std::reverse(decomposition->begin(), decomposition->end());
  }
  return dist[static_cast<std::size_t>(n)];
}

// The product r * r' cancels at the junction. (Around an interior vertex the
// consecutive-product cancellations line up with the corners, so only the
// junction counts; wrap cancellation belongs to the neighbouring pair.)
bool junction_cancels(const Word& r, const Word& rp) {
  return r.back() == inverse_letter(rp.front());
}

}  // namespace

const char* to_string(Classification c) {
  switch (c) {
    case Classification::Cpp4T4: return "Cpp4T4";
    case Classification::Cpp3T6: return "Cpp3T6";
    case Classification::C4T4P: return "C4T4P";
    case Classification::C3T6P: return "C3T6P";
    case Classification::C6P: return "C6P";
    case Classification::Unclassified: return "Unclassified";
  }
  return "Unclassified";
}

PieceIndex compute_pieces(const SymmetrizedSet& s) {
  PieceIndex out;
  for (const auto& [prefix, ids] : s.prefix_index()) {
    if (ids.size() < 2) continue;
    out.pieces.insert(prefix);
    out.max_piece_length = std::max(out.max_piece_length, static_cast<int>(prefix.size()));
  }
  return out;
}

bool is_pq_relator(const Word& u, int p, int q, const SymmetrizedSet& s) {
  if (u.empty()) return false;
  for (int id : s.members_with_prefix(u))
    if (static_cast<long>(q) * static_cast<long>(u.size()) ==
        static_cast<long>(p) * static_cast<long>(s.member(id).size()))
      return true;
  return false;
}

ConditionReport check_conditions(const Presentation& p) {
  ConditionReport rep;
  SymmetrizedSet sym = symmetrize(p);
  PieceIndex pieces = compute_pieces(sym);
  const int m = sym.size();

  // C(p): the largest p such that no member factors into fewer than p pieces
  // is the minimum factorization size over all members.
  int best = kInf;
  for (int id = 0; id < m; ++id) {
    std::vector<Word> decomposition;
    int k = min_piece_factorization(sym.member(id), pieces, &decomposition);
    if (k < best) {
      best = k;
      rep.witnesses.decomposed_relator = sym.member(id);
      rep.witnesses.piece_decomposition = std::move(decomposition);
    }
  }
  if (best != kInf) rep.c_max = best;

  // T(q): shortest closed walk of length >= 3 in the cancellation graph.
  std::vector<std::vector<int>> succ(static_cast<std::size_t>(m));
  for (int a = 0; a < m; ++a) {
    Word a_inv = inverse_word(sym.member(a));
    for (int b = 0; b < m; ++b) {
      if (sym.member(b) == a_inv) continue;
      if (junction_cancels(sym.member(a), sym.member(b)))
        succ[static_cast<std::size_t>(a)].push_back(b);
    }
  }
  // Any closed walk decomposes into simple cycles of length <= m, so if a
  // closed walk of length >= 3 exists there is one of length <= m + 4.
  const int walk_cap = m + 4;
  int best_k = kInf;
  int best_start = -1;
  std::vector<std::vector<char>> best_layers;
  for (int s0 = 0; s0 < m && best_k > 3; ++s0) {
    std::vector<std::vector<char>> layers(
        static_cast<std::size_t>(walk_cap) + 1,
        std::vector<char>(static_cast<std::size_t>(m), 0));
    layers[0][static_cast<std::size_t>(s0)] = 1;
    for (int t = 1; t <= walk_cap && t < best_k; ++t) {
      bool any = false;
      for (int v = 0; v < m; ++v) {
        if (!layers[static_cast<std::size_t>(t - 1)][static_cast<std::size_t>(v)]) continue;
        for (int w : succ[static_cast<std::size_t>(v)]) {
          layers[static_cast<std::size_t>(t)][static_cast<std::size_t>(w)] = 1;
          any = true;
        }
      }
      if (!any) break;
      if (t >= 3 && layers[static_cast<std::size_t>(t)][static_cast<std::size_t>(s0)]) {
        best_k = t;
        best_start = s0;
        best_layers = layers;
        break;
      }
    }
  }
  if (best_k != kInf) {
    rep.t_max = best_k;
    // Reconstruct one closed walk backwards through the layers.
    std::vector<int> walk(static_cast<std::size_t>(best_k) + 1, -1);
    walk[static_cast<std::size_t>(best_k)] = best_start;
    for (int t = best_k - 1; t >= 1; --t) {
      for (int v = 0; v < m; ++v) {
        if (!best_layers[static_cast<std::size_t>(t)][static_cast<std::size_t>(v)]) continue;
        const auto& sv = succ[static_cast<std::size_t>(v)];
        if (std::find(sv.begin(), sv.end(), walk[static_cast<std::size_t>(t + 1)]) == sv.end())
          continue;
        walk[static_cast<std::size_t>(t)] = v;
        break;
      }
    }
    walk[0] = best_start;
    for (int t = 0; t < best_k; ++t)
      rep.witnesses.bad_sequence.push_back(sym.member(walk[static_cast<std::size_t>(t)]));
  }

  // P: every piece a single letter and no relator a proper power.
  rep.p_holds = true;
  if (pieces.max_piece_length > 1) {
    rep.p_holds = false;
    for (const Word& u : pieces.pieces)
      if (u.size() >= 2) {
        rep.witnesses.long_piece = u;
        break;
      }
  }
  for (const Word& r : p.relators) {
    if (is_proper_power(r)) {
      rep.p_holds = false;
      rep.witnesses.proper_power_relator = r;
      break;
    }
  }

  // C''(L): C(L)-P with every relator of length exactly L.
  if (rep.p_holds && !p.relators.empty()) {
    std::size_t len = p.relators.front().size();
    bool uniform = std::all_of(p.relators.begin(), p.relators.end(),
                               [&](const Word& r) { return r.size() == len; });
    if (uniform && (!rep.c_max || *rep.c_max >= static_cast<int>(len)))
      rep.cpp = static_cast<int>(len);
  }

  auto at_least = [](const std::optional<int>& v, int bound) { return !v || *v >= bound; };
  if (rep.cpp == 4 && at_least(rep.t_max, 4))
    rep.classification = Classification::Cpp4T4;
  else if (rep.cpp == 3 && at_least(rep.t_max, 6))
    rep.classification = Classification::Cpp3T6;
  else if (rep.p_holds && at_least(rep.c_max, 6))
    rep.classification = Classification::C6P;
  else if (rep.p_holds && at_least(rep.c_max, 4) && at_least(rep.t_max, 4))
    rep.classification = Classification::C4T4P;
  else if (rep.p_holds && at_least(rep.c_max, 3) && at_least(rep.t_max, 6))
    rep.classification = Classification::C3T6P;
  else
    rep.classification = Classification::Unclassified;

  return rep;
}

}  // namespace cancelkit
