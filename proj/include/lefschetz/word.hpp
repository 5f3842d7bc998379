#pragma once

#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lefschetz/integer.hpp"

namespace lefschetz {

/// A syllable g_i^m of a free-group word. Generators are 1-based.
struct Letter {
  int generator = 1;
  Integer exponent = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Freely reduced word over a ranked alphabet.
///
/// Adjacent letters never share a generator and no exponent is zero, so the
/// letter count of a Word is its syllable length. The empty word is the
/// identity. Words are immutable values; every operation returns a new word.
class Word {
 public:
  Word() = default;

  /// Single syllable g_index^exponent (identity when exponent is zero).
  static Word generator(int index, const Integer& exponent = 1);

  /// Reduces an arbitrary letter sequence; indices must be >= 1.
  static Word reduce(std::span<const Letter> raw);
  static Word reduce(std::initializer_list<Letter> raw) {
    return reduce(std::span<const Letter>(raw.begin(), raw.size()));
  }

  const std::vector<Letter>& letters() const { return letters_; }
  bool is_identity() const { return letters_.empty(); }
  std::size_t syllable_length() const { return letters_.size(); }

  /// Sum of |exponent| over all syllables.
  Integer letter_count() const;

  /// Largest generator index used, 0 for the identity.
  int max_generator() const;
  bool uses_generator(int index) const;

  Word inverse() const;
  Word pow(const Integer& exponent) const;

  Word& operator*=(const Word& rhs);
  friend Word operator*(Word lhs, const Word& rhs) {
    lhs *= rhs;
    return lhs;
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend bool operator<(const Word& lhs, const Word& rhs);

 private:
  void push(int generator, Integer exponent);

  std::vector<Letter> letters_;
};

inline std::size_t syllable_length(const Word& w) { return w.syllable_length(); }

/// x^y = y^-1 x y.
Word conjugate(const Word& x, const Word& y);

/// [x, y] = x y x^-1 y^-1.
Word commutator(const Word& x, const Word& y);

/// Applies the homomorphism g_i -> images.at(i). Throws std::out_of_range
/// naming the first generator without an image.
Word substitute(const Word& w, const std::map<int, Word>& images);

/// Same, with images[i - 1] the image of g_i.
Word substitute(const Word& w, std::span<const Word> images);

/// Abelianization of a word: component i - 1 is the total exponent of g_i.
IntVector<Integer> exponent_sums(const Word& w, int rank);

// ---------------------------------------------------------------------------
// Cyclic words. Relators only matter up to conjugation, so presentations
// compare them through these.

Word cyclically_reduce(const Word& w);

/// Least rotation of w or w^-1 (after cyclic reduction).
Word cyclic_canonical(const Word& w);

inline bool same_cyclic_word(const Word& a, const Word& b) {
  return cyclic_canonical(a) == cyclic_canonical(b);
}

// ---------------------------------------------------------------------------
// Text form: whitespace-separated `name` or `name^k` tokens, `1` is the
// identity.

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

Word parse_word(std::string_view text, std::span<const std::string> names);
std::string format_word(const Word& w, std::span<const std::string> names);

/// Default generator names g1..gn.
std::vector<std::string> indexed_names(std::string_view stem, int count);

bool is_identifier(std::string_view name);

}  // namespace lefschetz
