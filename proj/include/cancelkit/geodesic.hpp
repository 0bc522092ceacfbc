#pragma once

#include <map>
#include <optional>
#include <vector>

#include "cancelkit/cancel.hpp"
#include "cancelkit/presentation.hpp"

namespace cancelkit {

enum class GeometryKind { Square, Triangle };
const char* to_string(GeometryKind k);

// Prefix lookups over the symmetrized set of a C''(4)-T(4) or C''(3)-T(6)
// presentation. Under condition P any prefix of length >= 2 determines at
// most one member; single-letter prefixes may branch.
class GeodesicContext {
 public:
  static GeodesicContext build(const Presentation& p);  // throws UnsupportedPresentation

  GeometryKind kind() const { return kind_; }
  int relator_length() const { return relator_length_; }
  const Presentation& presentation() const { return pres_; }
  const SymmetrizedSet& symmetrized() const { return sym_; }
  const ConditionReport& conditions() const { return report_; }

  // Letters in canonical order: lowercase generators then uppercase.
  const std::string& alphabet() const { return alphabet_; }

  // Unique member starting with the two letters, or -1.
  int cell_with_pair(char a, char b) const;
  // Members starting with the letter, ascending ids.
  const std::vector<int>& cells_with_first(char a) const;
  const Word& cell(int id) const { return sym_.member(id); }

 private:
  Presentation pres_;
  SymmetrizedSet sym_;
  ConditionReport report_;
  GeometryKind kind_ = GeometryKind::Square;
  int relator_length_ = 0;
  std::string alphabet_;
  std::map<std::pair<char, char>, int> pair_cell_;
  std::map<char, std::vector<int>> first_cells_;
};

// A strip of 2-cells witnessing that `outer` equals the strictly shorter
// `replacement` in the group.
//
// Square strips (cells of length 4, junction letters v_t between cells):
//   m = 1:  r_1 = x1 x2 x3 s,            outer = x1 x2 x3, replacement = s^-1
//   m >= 2: r_1 = x1 x2 v1 s1
//           r_t = v_{t-1}^-1 x_{t+1} v_t s_t        (2 <= t <= m-1)
//           r_m = v_{m-1}^-1 x_{m+1} x_{m+2} s_m
//           outer = x1..x_{m+2}, replacement = s1^-1 s2^-1 .. s_m^-1
// Triangle strips (cells of length 3, m odd):
//   m = 1:  r_1 = x1 x2 s,               outer = x1 x2, replacement = s^-1
//   m >= 3: r_1 = x1 v1 s1                            (end, 1 outer, 1 inner)
//           r_t = v_{t-1}^-1 x_{t/2+1} v_t            (t even: outer cell)
//           r_t = v_{t-1}^-1 v_t s_t                  (t odd interior: inner cell)
//           r_m = v_{m-1}^-1 x_{(m+3)/2} s_m          (end)
//           outer = x1..x_{(m+3)/2}, replacement = s1^-1 s3^-1 .. s_m^-1
struct StripCertificate {
  GeometryKind kind = GeometryKind::Square;
  std::size_t start = 0;        // offset of outer in the scanned word
  Word outer;
  std::vector<Word> cells;      // r_1 .. r_m, members of the symmetrized set
  Word junctions;               // v_1 .. v_{m-1}
  Word replacement;

  std::size_t cell_count() const { return cells.size(); }
};

// Leftmost, then shortest, bad subword of w. Requires w freely reduced.
std::optional<StripCertificate> find_bad_subword(const Word& w, const GeodesicContext& ctx);

bool is_geodesic(const Word& w, const GeodesicContext& ctx);

struct ReductionResult {
  Word geodesic;
  std::vector<StripCertificate> trail;
};

// Applies bad-subword replacements until none remain. The result represents
// the same group element and its length is the word-metric length.
ReductionResult reduce_to_geodesic(const Word& w, const GeodesicContext& ctx);

// Re-checks every schema equation of the certificate against the symmetrized
// set; throws CertificateError on any violation. Oracle equality of outer and
// replacement is checked separately by the test suites.
void validate_certificate(const StripCertificate& cert, const GeodesicContext& ctx);

// Ring-shaped strip around the full cyclic word z: when it closes, z is
// conjugate (by the returned single letter) to the returned word, which is
// shorter by 2 (Square) or 1 (Triangle).
struct WrapShortening {
  Word shorter;
  char conjugator;  // z = conjugator * shorter * conjugator^-1 in the group
};
std::optional<WrapShortening> wrap_strip_shorten(const Word& z, const GeodesicContext& ctx);

}  // namespace cancelkit
