#pragma once

#include <random>
#include <string>
#include <vector>

#include <doctest.h>

#include "lefschetz/presentation.hpp"

namespace test_support {

using lefschetz::Letter;
using lefschetz::Presentation;
using lefschetz::Word;

inline Word g(int i, int e = 1) { return Word::generator(i, e); }

inline Word w(std::initializer_list<std::pair<int, int>> raw) {
  std::vector<Letter> letters;
  for (auto [i, e] : raw) letters.push_back({i, e});
  return Word::reduce(letters);
}

// Random unreduced letter sequence; exponents in [-2, 2] \ {0}.
inline std::vector<Letter> random_letters(std::mt19937_64& rng, int rank, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), gen(1, rank), exp(-2, 1);
  std::vector<Letter> out;
  for (int k = len(rng); k > 0; --k) {
    int e = exp(rng);
    if (e >= 0) ++e;
    out.push_back({gen(rng), e});
  }
  return out;
}

inline Word random_word(std::mt19937_64& rng, int rank, int max_len) {
  auto letters = random_letters(rng, rank, max_len);
  return Word::reduce(letters);
}

inline Presentation random_presentation(std::mt19937_64& rng, int rank, int relators, int max_len) {
  Presentation p;
  p.generators = lefschetz::indexed_names("x", rank);
  for (int k = 0; k < relators; ++k) p.relators.push_back(random_word(rng, rank, max_len));
  return p;
}

inline Presentation pres(const std::string& text) { return lefschetz::parse_presentation(text); }

}  // namespace test_support
