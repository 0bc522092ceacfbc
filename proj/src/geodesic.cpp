#include "cancelkit/geodesic.hpp"

#include <algorithm>

#include "cancelkit/errors.hpp"

namespace cancelkit {

namespace {

// Junction letter between cell t (1-based) and cell t+1 of a triangle strip.
char triangle_junction(const Word& cell, std::size_t t) {
  if (t == 1) return cell[1];            // opening end cell: (x1, v1, s1)
  if (t % 2 == 0) return cell[2];        // outer cell: (v^-1, x, v')
  return cell[1];                        // inner cell: (v^-1, v', s)
}

std::optional<StripCertificate> square_strip_at(const Word& w, std::size_t i,
                                                const GeodesicContext& ctx) {
  const std::size_t n = w.size();
  if (i + 2 > n) return std::nullopt;
  int c0 = ctx.cell_with_pair(w[i], w[i + 1]);
  if (c0 < 0) return std::nullopt;
  std::vector<int> cells{c0};
  char pending = ctx.cell(c0)[2];
  for (std::size_t j = i + 2; j < n; ++j) {
    if (w[j] == pending) {
      // The last placed cell doubles as the closing cell.
      StripCertificate cert;
      cert.kind = GeometryKind::Square;
      cert.start = i;
      cert.outer = w.substr(i, j - i + 1);
      for (std::size_t t = 0; t < cells.size(); ++t) {
        const Word& r = ctx.cell(cells[t]);
        cert.cells.push_back(r);
        if (t + 1 < cells.size()) cert.junctions.push_back(r[2]);
        cert.replacement.push_back(inverse_letter(r[3]));
      }
      return cert;
    }
    int c = ctx.cell_with_pair(inverse_letter(pending), w[j]);
    if (c < 0) return std::nullopt;
    cells.push_back(c);
    pending = ctx.cell(c)[2];
  }
  return std::nullopt;
}

std::optional<StripCertificate> triangle_strip_at(const Word& w, std::size_t i,
                                                  const GeodesicContext& ctx) {
  const std::size_t n = w.size();
  if (i + 2 > n) return std::nullopt;

  // m = 1: the pair itself is two thirds of a relator.
  if (int c = ctx.cell_with_pair(w[i], w[i + 1]); c >= 0) {
    StripCertificate cert;
    cert.kind = GeometryKind::Triangle;
    cert.start = i;
    cert.outer = w.substr(i, 2);
    cert.cells.push_back(ctx.cell(c));
    cert.replacement.push_back(inverse_letter(ctx.cell(c)[2]));
    return cert;
  }

  struct Node {
    char pending;
    int parent;
    int cell_a;  // inner cell for combined steps, else the single cell
    int cell_b;  // outer cell of a combined step, -1 otherwise
  };
  std::vector<Node> nodes;
  std::vector<int> cur;

  // Level 1: opening cells consume w[i]; only the first letter is pinned.
  {
    std::string seen;
    for (int c : ctx.cells_with_first(w[i])) {
      char v = ctx.cell(c)[1];
      if (seen.find(v) != std::string::npos) continue;
      seen.push_back(v);
      nodes.push_back({v, -1, c, -1});
      cur.push_back(static_cast<int>(nodes.size()) - 1);
    }
  }

  auto build_cert = [&](int leaf, int closing_cell, std::size_t outer_len) {
    std::vector<int> chain;
    for (int idx = leaf; idx >= 0; idx = nodes[static_cast<std::size_t>(idx)].parent)
      chain.push_back(idx);
    std::reverse(chain.begin(), chain.end());
    StripCertificate cert;
    cert.kind = GeometryKind::Triangle;
    cert.start = i;
    cert.outer = w.substr(i, outer_len);
    for (int idx : chain) {
      const Node& nd = nodes[static_cast<std::size_t>(idx)];
      cert.cells.push_back(ctx.cell(nd.cell_a));
      if (nd.cell_b >= 0) cert.cells.push_back(ctx.cell(nd.cell_b));
    }
    cert.cells.push_back(ctx.cell(closing_cell));
    const std::size_t m = cert.cells.size();
    for (std::size_t t = 1; t < m; ++t)
      cert.junctions.push_back(triangle_junction(cert.cells[t - 1], t));
    for (std::size_t t = 1; t <= m; t += 2)
      cert.replacement.push_back(inverse_letter(cert.cells[t - 1][2]));
    return cert;
  };

  std::size_t level = 1;
  while (!cur.empty() && i + level < n) {
    const char x = w[i + level];
    // Closure: possible from phase-B nodes (level >= 2, i.e. after an outer cell).
    if (level >= 2) {
      for (int idx : cur) {
        int c = ctx.cell_with_pair(inverse_letter(nodes[static_cast<std::size_t>(idx)].pending), x);
        if (c >= 0) return build_cert(idx, c, level + 1);
      }
    }
    std::vector<int> next;
    std::string seen;
    auto push = [&](char pending, int parent, int ca, int cb) {
      if (seen.find(pending) != std::string::npos) return;
      seen.push_back(pending);
      nodes.push_back({pending, parent, ca, cb});
      next.push_back(static_cast<int>(nodes.size()) - 1);
    };
    for (int idx : cur) {
      const char pending = nodes[static_cast<std::size_t>(idx)].pending;
      if (level == 1) {
        // Phase A: an outer cell consumes x.
        int c = ctx.cell_with_pair(inverse_letter(pending), x);
        if (c >= 0) push(ctx.cell(c)[2], idx, c, -1);
      } else {
        // Phase B: an inner cell (branching) followed by an outer cell.
        for (int c1 : ctx.cells_with_first(inverse_letter(pending))) {
          int c2 = ctx.cell_with_pair(inverse_letter(ctx.cell(c1)[1]), x);
          if (c2 >= 0) push(ctx.cell(c2)[2], idx, c1, c2);
        }
      }
    }
    cur = std::move(next);
    ++level;
  }
  return std::nullopt;
}

}  // namespace

const char* to_string(GeometryKind k) {
  return k == GeometryKind::Square ? "square" : "triangle";
}

GeodesicContext GeodesicContext::build(const Presentation& p) {
  GeodesicContext ctx;
  ctx.pres_ = p;
  ctx.report_ = check_conditions(p);
  switch (ctx.report_.classification) {
    case Classification::Cpp4T4:
      ctx.kind_ = GeometryKind::Square;
      ctx.relator_length_ = 4;
      break;
    case Classification::Cpp3T6:
      ctx.kind_ = GeometryKind::Triangle;
      ctx.relator_length_ = 3;
      break;
    default:
      throw UnsupportedPresentation(
          std::string("strip machinery needs a C''(4)-T(4) or C''(3)-T(6) presentation, got ") +
          to_string(ctx.report_.classification));
  }
  ctx.sym_ = symmetrize(p);
  ctx.alphabet_ = p.generators;
  for (char g : p.generators) ctx.alphabet_.push_back(inverse_letter(g));
  for (int id = 0; id < ctx.sym_.size(); ++id) {
    const Word& m = ctx.sym_.member(id);
    ctx.pair_cell_.try_emplace({m[0], m[1]}, id);  // unique under P
    ctx.first_cells_[m[0]].push_back(id);
  }
  return ctx;
}

int GeodesicContext::cell_with_pair(char a, char b) const {
  auto it = pair_cell_.find({a, b});
  return it == pair_cell_.end() ? -1 : it->second;
}

const std::vector<int>& GeodesicContext::cells_with_first(char a) const {
  static const std::vector<int> kEmpty;
  auto it = first_cells_.find(a);
  return it == first_cells_.end() ? kEmpty : it->second;
}

std::optional<StripCertificate> find_bad_subword(const Word& w, const GeodesicContext& ctx) {
  if (!is_freely_reduced(w))
    throw InvalidArg("find_bad_subword needs a freely reduced word");
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    auto cert = ctx.kind() == GeometryKind::Square ? square_strip_at(w, i, ctx)
                                                   : triangle_strip_at(w, i, ctx);
    if (cert) return cert;
  }
  return std::nullopt;
}

bool is_geodesic(const Word& w, const GeodesicContext& ctx) {
  if (!is_freely_reduced(w)) return false;
  return !find_bad_subword(w, ctx).has_value();
}

ReductionResult reduce_to_geodesic(const Word& w, const GeodesicContext& ctx) {
  ReductionResult out;
  out.geodesic = free_reduce(w);
  while (auto cert = find_bad_subword(out.geodesic, ctx)) {
    out.geodesic = free_reduce(out.geodesic.substr(0, cert->start) + cert->replacement +
                               out.geodesic.substr(cert->start + cert->outer.size()));
    out.trail.push_back(std::move(*cert));
  }
  return out;
}

void validate_certificate(const StripCertificate& cert, const GeodesicContext& ctx) {
  auto fail = [](const std::string& msg) { throw CertificateError(msg); };
  const std::size_t m = cert.cells.size();
  if (m == 0) fail("certificate has no cells");
  for (const Word& c : cert.cells)
    if (!ctx.symmetrized().contains(c)) fail("cell '" + c + "' is not a member");
  if (cert.junctions.size() != m - 1) fail("junction count mismatch");
  if (!is_freely_reduced(cert.outer)) fail("outer word is not freely reduced");
  if (!is_freely_reduced(cert.replacement)) fail("replacement is not freely reduced");

  const auto& cells = cert.cells;
  const Word& outer = cert.outer;
  if (cert.kind == GeometryKind::Square) {
    if (ctx.kind() != GeometryKind::Square) fail("kind mismatch");
    if (outer.size() != m + 2) fail("outer length != m + 2");
    if (cert.replacement.size() != m) fail("replacement length != m");
    Word repl;
    if (m == 1) {
      if (cells[0].substr(0, 3) != outer) fail("3/4-relator prefix mismatch");
      repl.push_back(inverse_letter(cells[0][3]));
    } else {
      if (cells[0][0] != outer[0] || cells[0][1] != outer[1]) fail("opening cell prefix mismatch");
      if (cells[0][2] != cert.junctions[0]) fail("opening junction mismatch");
      for (std::size_t t = 2; t <= m - 1; ++t) {
        const Word& r = cells[t - 1];
        if (r[0] != inverse_letter(cert.junctions[t - 2])) fail("middle cell junction-in mismatch");
        if (r[1] != outer[t]) fail("middle cell outer letter mismatch");
        if (r[2] != cert.junctions[t - 1]) fail("middle cell junction-out mismatch");
      }
      const Word& last = cells[m - 1];
      if (last[0] != inverse_letter(cert.junctions[m - 2])) fail("closing junction mismatch");
      if (last[1] != outer[m] || last[2] != outer[m + 1]) fail("closing outer letters mismatch");
      for (std::size_t t = 0; t < m; ++t) repl.push_back(inverse_letter(cells[t][3]));
    }
    if (repl != cert.replacement) fail("replacement word mismatch");
  } else {
    if (ctx.kind() != GeometryKind::Triangle) fail("kind mismatch");
    if (m != 1 && m % 2 == 0) fail("triangle strips have odd cell count");
    if (outer.size() != (m + 3) / 2) fail("outer length != (m+3)/2");
    if (cert.replacement.size() != (m + 1) / 2) fail("replacement length != (m+1)/2");
    Word repl;
    if (m == 1) {
      if (cells[0].substr(0, 2) != outer) fail("2/3-relator prefix mismatch");
      repl.push_back(inverse_letter(cells[0][2]));
    } else {
      if (cells[0][0] != outer[0]) fail("opening outer letter mismatch");
      if (cells[0][1] != cert.junctions[0]) fail("opening junction mismatch");
      std::size_t outer_pos = 1;
      for (std::size_t t = 2; t <= m; ++t) {
        const Word& r = cells[t - 1];
        if (r[0] != inverse_letter(cert.junctions[t - 2])) fail("cell junction-in mismatch");
        if (t == m) {
          if (r[1] != outer[outer_pos++]) fail("closing outer letter mismatch");
        } else if (t % 2 == 0) {
          if (r[1] != outer[outer_pos++]) fail("outer cell letter mismatch");
          if (r[2] != cert.junctions[t - 1]) fail("outer cell junction-out mismatch");
        } else {
          if (r[1] != cert.junctions[t - 1]) fail("inner cell junction-out mismatch");
        }
      }
      if (outer_pos != outer.size()) fail("outer letters not fully consumed");
      for (std::size_t t = 1; t <= m; t += 2) repl.push_back(inverse_letter(cells[t - 1][2]));
    }
    if (repl != cert.replacement) fail("replacement word mismatch");
  }
}

std::optional<WrapShortening> wrap_strip_shorten(const Word& z, const GeodesicContext& ctx) {
  const std::size_t n = z.size();
  if (n < 2) return std::nullopt;
  if (ctx.kind() == GeometryKind::Square) {
    // One corner cell carries z[0] z[1]; each remaining cell carries one outer
    // and one inner letter; the junction chain must return to the corner.
    int d = ctx.cell_with_pair(z[0], z[1]);
    if (d < 0) return std::nullopt;
    char pending = ctx.cell(d)[2];
    Word inner;
    for (std::size_t j = 2; j < n; ++j) {
      int c = ctx.cell_with_pair(inverse_letter(pending), z[j]);
      if (c < 0) return std::nullopt;
      inner.push_back(inverse_letter(ctx.cell(c)[3]));
      pending = ctx.cell(c)[2];
    }
    if (pending != inverse_letter(ctx.cell(d)[3])) return std::nullopt;
    return WrapShortening{inner, pending};
  }

  // Triangle ring: n outer cells, n-1 inner cells, adjacent outer cells at the
  // corner. Branch over the corner junction and the inner cells.
  struct Search {
    const Word& z;
    const GeodesicContext& ctx;
    char u0;
    std::vector<std::pair<std::size_t, char>> failed;

    bool known_failed(std::size_t j, char pending) const {
      return std::find(failed.begin(), failed.end(), std::make_pair(j, pending)) != failed.end();
    }
    bool go(std::size_t j, char pending, Word& inner) {
      if (known_failed(j, pending)) return false;
      int c = ctx.cell_with_pair(inverse_letter(pending), z[j]);
      if (c < 0) {
        failed.emplace_back(j, pending);
        return false;
      }
      char after = ctx.cell(c)[2];
      if (j + 1 == z.size()) {
        if (after == u0) return true;
        failed.emplace_back(j, pending);
        return false;
      }
      for (int c1 : ctx.cells_with_first(inverse_letter(after))) {
        inner.push_back(inverse_letter(ctx.cell(c1)[2]));
        if (go(j + 1, ctx.cell(c1)[1], inner)) return true;
        inner.pop_back();
      }
      failed.emplace_back(j, pending);
      return false;
    }
  };
  for (char u0 : ctx.alphabet()) {
    Search s{z, ctx, u0, {}};
    Word inner;
    if (s.go(0, u0, inner)) return WrapShortening{inner, u0};
  }
  return std::nullopt;
}

}  // namespace cancelkit
