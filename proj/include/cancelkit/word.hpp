#pragma once

#include <string>
#include <vector>

namespace cancelkit {

// A word is a plain ASCII string: a lowercase letter is a generator, the
// matching uppercase letter is its inverse, "" is the identity.
using Word = std::string;

bool is_word_letter(char c);
bool is_positive(char c);
char generator_of(char c);      // lowercase name of the generator
char inverse_letter(char c);

bool is_freely_reduced(const Word& w);
bool is_cyclically_reduced(const Word& w);

Word inverse_word(const Word& w);
Word free_reduce(Word w);

struct CyclicReduction {
  Word core;        // cyclically reduced
  Word conjugator;  // w = conjugator * core * conjugator^-1 in the free group
};
CyclicReduction cyclic_reduce(const Word& w);

Word rotate(const Word& w, std::size_t k);
std::vector<Word> rotations(const Word& w);
Word least_rotation(const Word& w);

// w^k; negative k powers the inverse word. No reduction is performed.
Word power_word(const Word& w, long k);

// True when w reads as s^k for some k >= 2 (w need not be reduced).
bool is_proper_power(const Word& w);

}  // namespace cancelkit
