#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "cancelkit/word.hpp"

namespace cancelkit {

struct Presentation {
  std::string generators;      // distinct lowercase letters, declaration order
  std::vector<Word> relators;  // cyclically reduced, length >= 3 each

  bool contains_generator(char g) const;
  bool contains_letter(char c) const;  // either case of a declared generator

  // Canonical file form: one "gens:" line, one "rel:" line per relator.
  std::string serialize() const;
};

// File format: '#' starts a comment, blank lines are skipped, a single
// "gens: g1 g2 ..." line precedes "rel: WORD" lines.
Presentation parse_presentation(std::istream& in);
Presentation parse_presentation(const std::string& text);

// Validates WORD against the presentation alphabet (AlphabetError).
Word parse_word(const std::string& text, const Presentation& p);

// Closure of the relators under rotation and inversion.
class SymmetrizedSet {
 public:
  struct Origin {
    int relator = 0;
    int rotation = 0;
    bool inverted = false;
  };

  const std::vector<Word>& members() const { return members_; }
  const Word& member(int id) const { return members_[static_cast<std::size_t>(id)]; }
  const Origin& origin(int id) const { return origins_[static_cast<std::size_t>(id)]; }
  int size() const { return static_cast<int>(members_.size()); }

  int index_of(const Word& w) const;  // -1 when absent
  bool contains(const Word& w) const { return index_of(w) >= 0; }

  // Ids of members having u as a prefix (empty vector when none).
  const std::vector<int>& members_with_prefix(const Word& u) const;

  const std::map<Word, std::vector<int>>& prefix_index() const { return prefix_index_; }

  friend SymmetrizedSet symmetrize(const Presentation& p);

 private:
  std::vector<Word> members_;   // sorted, deduplicated
  std::vector<Origin> origins_;
  std::map<Word, std::vector<int>> prefix_index_;
};

SymmetrizedSet symmetrize(const Presentation& p);

}  // namespace cancelkit
