#include "cancelkit/dfa.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "cancelkit/errors.hpp"

namespace cancelkit {

namespace {

// Scanner state: last letter read plus the live strip frontiers. For squares
// a frontier entry is the pending junction of a partial strip; for triangles
// the two phases (after an odd cell / after an outer cell) are kept apart.
struct ScanState {
  char last = 0;
  std::string a;  // squares: junction set; triangles: phase-A junctions
  std::string b;  // triangles: phase-B junctions

  std::string key() const { return std::string(1, last) + '|' + a + '|' + b; }
};

std::string sorted_unique(std::set<char>& s) { return std::string(s.begin(), s.end()); }

// Returns the successor state, or nullopt for the dead state.
std::optional<ScanState> advance(const ScanState& st, char x, const GeodesicContext& ctx) {
  if (st.last && x == inverse_letter(st.last)) return std::nullopt;
  ScanState out;
  out.last = x;
  if (ctx.kind() == GeometryKind::Square) {
    std::set<char> nj;
    for (char v : st.a) {
      if (v == x) return std::nullopt;  // a strip closes: bad subword
      int c = ctx.cell_with_pair(inverse_letter(v), x);
      if (c >= 0) nj.insert(ctx.cell(c)[2]);
    }
    if (st.last) {
      int c = ctx.cell_with_pair(st.last, x);
      if (c >= 0) nj.insert(ctx.cell(c)[2]);  // new strip opens on the pair
    }
    out.a = sorted_unique(nj);
    return out;
  }
  // Triangle.
  if (st.last && ctx.cell_with_pair(st.last, x) >= 0) return std::nullopt;  // 2/3-relator
  std::set<char> nb;
  for (char v : st.a) {
    int c = ctx.cell_with_pair(inverse_letter(v), x);
    if (c >= 0) nb.insert(ctx.cell(c)[2]);
  }
  for (char v : st.b) {
    if (ctx.cell_with_pair(inverse_letter(v), x) >= 0) return std::nullopt;  // strip closes
    for (int c1 : ctx.cells_with_first(inverse_letter(v))) {
      int c2 = ctx.cell_with_pair(inverse_letter(ctx.cell(c1)[1]), x);
      if (c2 >= 0) nb.insert(ctx.cell(c2)[2]);
    }
  }
  std::set<char> na;
  for (int c : ctx.cells_with_first(x)) na.insert(ctx.cell(c)[1]);
  out.a = sorted_unique(na);
  out.b = sorted_unique(nb);
  return out;
}

GeodesicDfa minimize(const GeodesicDfa& in) {
  const int n = in.size();
  const int letters = static_cast<int>(in.alphabet.size());
  // Moore refinement. Two initial classes: dead, everything else.
  std::vector<int> cls(static_cast<std::size_t>(n), 0);
  cls[static_cast<std::size_t>(in.dead)] = 1;
  int classes = 2;
  for (;;) {
    std::map<std::vector<int>, int> sig_to_class;
    std::vector<int> next_cls(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
      std::vector<int> sig;
      sig.reserve(static_cast<std::size_t>(letters) + 1);
      sig.push_back(cls[static_cast<std::size_t>(s)]);
      for (int l = 0; l < letters; ++l)
        sig.push_back(cls[static_cast<std::size_t>(in.next[static_cast<std::size_t>(s)]
                                                          [static_cast<std::size_t>(l)])]);
      auto [it, inserted] = sig_to_class.try_emplace(sig, static_cast<int>(sig_to_class.size()));
      (void)inserted;
      next_cls[static_cast<std::size_t>(s)] = it->second;
    }
    int next_classes = static_cast<int>(sig_to_class.size());
    cls = std::move(next_cls);
    if (next_classes == classes) break;
    classes = next_classes;
  }
  // Renumber classes in BFS order from the start class; dead class last.
  int dead_cls = cls[static_cast<std::size_t>(in.dead)];
  std::vector<int> order(static_cast<std::size_t>(classes), -1);
  std::vector<int> bfs{cls[static_cast<std::size_t>(in.start)]};
  order[static_cast<std::size_t>(cls[static_cast<std::size_t>(in.start)])] = 0;
  std::vector<int> rep_state(static_cast<std::size_t>(classes), -1);
  for (int s = 0; s < n; ++s)
    if (rep_state[static_cast<std::size_t>(cls[static_cast<std::size_t>(s)])] < 0)
      rep_state[static_cast<std::size_t>(cls[static_cast<std::size_t>(s)])] = s;
  int assigned = 1;
  for (std::size_t head = 0; head < bfs.size(); ++head) {
    int c = bfs[head];
    int s = rep_state[static_cast<std::size_t>(c)];
    for (int l = 0; l < letters; ++l) {
      int tc = cls[static_cast<std::size_t>(in.next[static_cast<std::size_t>(s)]
                                                   [static_cast<std::size_t>(l)])];
      if (tc == dead_cls || order[static_cast<std::size_t>(tc)] >= 0) continue;
      order[static_cast<std::size_t>(tc)] = assigned++;
      bfs.push_back(tc);
    }
  }
  // Unreachable live classes cannot occur (the input is built reachable).
  order[static_cast<std::size_t>(dead_cls)] = assigned++;

  GeodesicDfa out;
  out.alphabet = in.alphabet;
  out.start = 0;
  out.dead = order[static_cast<std::size_t>(dead_cls)];
  out.next.assign(static_cast<std::size_t>(assigned),
                  std::vector<int>(static_cast<std::size_t>(letters), out.dead));
  for (int c = 0; c < classes; ++c) {
    int s = rep_state[static_cast<std::size_t>(c)];
    if (s < 0 || order[static_cast<std::size_t>(c)] < 0) continue;
    for (int l = 0; l < letters; ++l) {
      int tc = cls[static_cast<std::size_t>(in.next[static_cast<std::size_t>(s)]
                                                   [static_cast<std::size_t>(l)])];
      out.next[static_cast<std::size_t>(order[static_cast<std::size_t>(c)])]
              [static_cast<std::size_t>(l)] = order[static_cast<std::size_t>(tc)];
    }
  }
  return out;
}

}  // namespace

int GeodesicDfa::letter_index(char c) const {
  auto pos = alphabet.find(c);
  if (pos == std::string::npos)
    throw ModelMismatch("letter '" + std::string(1, c) + "' is outside the automaton alphabet");
  return static_cast<int>(pos);
}

bool GeodesicDfa::accepts(const Word& w) const {
  int s = start;
  for (char c : w) {
    s = step(s, c);
    if (s == dead) return false;
  }
  return true;
}

std::string GeodesicDfa::to_dot() const {
  std::ostringstream out;
  out << "digraph geodesics {\n  rankdir=LR;\n  __start [shape=point];\n";
  for (int s = 0; s < size(); ++s) {
    if (s == dead) continue;
    out << "  s" << s << " [shape=doublecircle];\n";
  }
  out << "  __start -> s" << start << ";\n";
  for (int s = 0; s < size(); ++s) {
    if (s == dead) continue;
    for (std::size_t l = 0; l < alphabet.size(); ++l) {
      int t = next[static_cast<std::size_t>(s)][l];
      if (t == dead) continue;
      out << "  s" << s << " -> s" << t << " [label=\"" << alphabet[l] << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string GeodesicDfa::to_tsv() const {
  std::ostringstream out;
  auto name = [&](int s) {
    return s == dead ? std::string("dead") : "s" + std::to_string(s);
  };
  for (int s = 0; s < size(); ++s)
    for (std::size_t l = 0; l < alphabet.size(); ++l)
      out << name(s) << '\t' << alphabet[l] << '\t'
          << name(next[static_cast<std::size_t>(s)][l]) << '\n';
  return out.str();
}

GeodesicDfa build_geodesic_dfa(const GeodesicContext& ctx) {
  GeodesicDfa dfa;
  dfa.alphabet = ctx.alphabet();
  const int letters = static_cast<int>(dfa.alphabet.size());

  std::map<std::string, int> ids;
  std::vector<ScanState> states;
  auto intern = [&](const ScanState& st) {
    auto [it, inserted] = ids.try_emplace(st.key(), static_cast<int>(states.size()));
    if (inserted) states.push_back(st);
    return it->second;
  };
  intern(ScanState{});
  dfa.start = 0;
  std::vector<std::vector<int>> table;
  for (std::size_t head = 0; head < states.size(); ++head) {
    ScanState st = states[head];  // copy: states may reallocate
    std::vector<int> row(static_cast<std::size_t>(letters), -1);
    for (int l = 0; l < letters; ++l) {
      auto nxt = advance(st, dfa.alphabet[static_cast<std::size_t>(l)], ctx);
      row[static_cast<std::size_t>(l)] = nxt ? intern(*nxt) : -1;
    }
    table.push_back(std::move(row));
  }
  // Append the dead state and make the table total.
  const int dead = static_cast<int>(states.size());
  dfa.dead = dead;
  for (auto& row : table)
    for (int& t : row)
      if (t < 0) t = dead;
  table.emplace_back(static_cast<std::size_t>(letters), dead);
  dfa.next = std::move(table);
  return minimize(dfa);
}

GrowthCount count_geodesics(const GeodesicDfa& dfa, int k) {
  if (k < 0) throw InvalidArg("count_geodesics needs k >= 0");
  using boost::multiprecision::cpp_int;
  GrowthCount out;
  std::vector<cpp_int> vec(static_cast<std::size_t>(dfa.size()), 0);
  vec[static_cast<std::size_t>(dfa.start)] = 1;
  auto live_total = [&]() {
    cpp_int t = 0;
    for (int s = 0; s < dfa.size(); ++s)
      if (s != dfa.dead) t += vec[static_cast<std::size_t>(s)];
    return t;
  };
  out.counts.push_back(live_total());
  for (int step = 1; step <= k; ++step) {
    std::vector<cpp_int> next(static_cast<std::size_t>(dfa.size()), 0);
    for (int s = 0; s < dfa.size(); ++s) {
      if (s == dfa.dead || vec[static_cast<std::size_t>(s)] == 0) continue;
      for (std::size_t l = 0; l < dfa.alphabet.size(); ++l) {
        int t = dfa.next[static_cast<std::size_t>(s)][l];
        if (t == dfa.dead) continue;
        next[static_cast<std::size_t>(t)] += vec[static_cast<std::size_t>(s)];
      }
    }
    vec = std::move(next);
    out.counts.push_back(live_total());
  }
  return out;
}

std::vector<Word> enumerate_geodesics(const GeodesicDfa& dfa, int max_len) {
  std::vector<Word> out;
  // Frontier of (state, word) pairs per length; lexicographic within a length.
  std::vector<std::pair<int, Word>> frontier{{dfa.start, ""}};
  out.emplace_back("");
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::pair<int, Word>> next;
    for (const auto& [s, w] : frontier) {
      for (std::size_t l = 0; l < dfa.alphabet.size(); ++l) {
        int t = dfa.next[static_cast<std::size_t>(s)][l];
        if (t == dfa.dead) continue;
        next.emplace_back(t, w + dfa.alphabet[l]);
      }
    }
    frontier = std::move(next);
    for (const auto& [s, w] : frontier) out.push_back(w);
  }
  return out;
}

}  // namespace cancelkit
