#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "graev/errors.hpp"

namespace graev {

class Partition;  // space.hpp

/// A generator or its inverse. `point` indexes the ambient alphabet (space
/// points, or partition classes for quotient words); names live elsewhere.
struct Letter {
  int point = 0;
  int sign = +1;  // +1 or -1

  Letter inverse() const { return {point, -sign}; }
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Symbol of the extended alphabet: a letter, or the identity symbol e
/// (nullopt).
using Symbol = std::optional<Letter>;

inline Symbol symbol_inverse(const Symbol& s) {
  return s ? Symbol(s->inverse()) : Symbol{};
}

/// An element of W(X): any sequence over the extended alphabet, possibly
/// containing e and cancelling pairs. No invariants.
struct RawWord {
  std::vector<Symbol> symbols;
  int alphabet_size = 0;

  int length() const { return static_cast<int>(symbols.size()); }
};

/// Irreducible word: no identity symbol, no adjacent letter/inverse pair.
/// The group identity is the empty sequence (printed "e"); equality is
/// sequence equality.
class Word {
 public:
  Word() = default;

  /// Validates the irreducibility invariant; throws argument_error.
  Word(std::vector<Letter> letters, int alphabet_size);

  static Word identity(int alphabet_size) { return Word({}, alphabet_size); }

  int length() const { return static_cast<int>(letters_.size()); }
  bool is_identity() const { return letters_.empty(); }
  int alphabet_size() const { return alphabet_size_; }
  const Letter& letter(int i) const { return letters_[static_cast<size_t>(i)]; }
  const std::vector<Letter>& letters() const { return letters_; }

  RawWord raw() const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.letters_ == b.letters_;
  }
  friend auto operator<=>(const Word& a, const Word& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  std::vector<Letter> letters_;
  int alphabet_size_ = 0;
};

/// Free reduction: drop e symbols, cancel adjacent inverse pairs (stack
/// algorithm, O(length)). Idempotent.
Word reduce(const RawWord& w);

/// Concatenation followed by reduction. Throws argument_error on alphabet
/// mismatch.
Word multiply(const Word& v, const Word& w);

Word inverse(const Word& w);

/// u w u^-1.
Word conjugate(const Word& u, const Word& w);

/// Exponent-sum homomorphism F(X) -> Z (each generator maps to 1).
int alpha(const Word& w);

/// Quotient relabeling F(q): replace each letter's point by its partition
/// class (dense class index), preserve signs, reduce. A group homomorphism
/// onto the free group over the quotient alphabet.
Word map_word(const Word& w, const Partition& p);

// Text format: space-separated tokens, token = name or name^-1; the single
// token "e" is the identity symbol. parse_word reduces; parse_raw_word keeps
// e symbols and cancelling pairs.
RawWord parse_raw_word(const std::string& text,
                       const std::vector<std::string>& names);
Word parse_word(const std::string& text, const std::vector<std::string>& names);
std::string print_word(const Word& w, const std::vector<std::string>& names);
std::string print_raw_word(const RawWord& w,
                           const std::vector<std::string>& names);

}  // namespace graev
