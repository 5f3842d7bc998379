#include "lefschetz/relator_curves.hpp"

#include <random>
#include <stdexcept>

namespace lefschetz {

namespace {

void check_relator(const Word& r, int n, int genus) {
  if (r.is_identity()) throw std::invalid_argument("relator curve needs a nonempty relator");
  if (r.max_generator() > n)
    throw std::invalid_argument("relator uses g" + std::to_string(r.max_generator()) + " but n = " + std::to_string(n));
  const int need = n + static_cast<int>(r.syllable_length()) - 1;
  if (genus < need)
    throw std::out_of_range("genus " + std::to_string(genus) + " below n + l - 1 = " + std::to_string(need));
}

// Image of a filler once b_1..b_g and a_{n+1}..a_{n+l-1} are killed.
Word residue(const Word& w, int n, int syllables, int genus) {
  std::map<int, Word> images;
  for (int t = 1; t <= genus; ++t) {
    images[t] = (t > n && t <= n + syllables - 1) ? Word() : Word::generator(t);
    images[genus + t] = Word();
  }
  return substitute(w, images);
}

}  // namespace

Word l_tilde(const Word& relator, int genus) {
  if (relator.is_identity()) throw std::invalid_argument("l_tilde of the empty relator");
  const SurfaceGroup s(genus);
  const int first = relator.letters().front().generator;
  const int last = relator.letters().back().generator;
  Word out;
  if (first <= last) {
    for (int t = last; t >= first; --t) out *= s.b(t).inverse();
  } else {
    for (int t = last; t < first; ++t) out *= s.b(t + 1) * s.b(t);
  }
  return out;
}

Word hat(const Word& relator, int genus) {
  if (relator.max_generator() > genus)
    throw std::out_of_range("a_" + std::to_string(relator.max_generator()) + " does not exist in genus " +
                            std::to_string(genus));
  return relator;
}

std::vector<Word> filler_alphabet(int n, int syllables, int genus) {
  const SurfaceGroup s(genus);
  std::vector<Word> out;
  for (int t = n + 1; t <= std::min(n + syllables - 1, genus); ++t) {
    out.push_back(s.a(t));
    out.push_back(s.b(t));
  }
  if (n + 1 <= genus) out.push_back(s.c_curve(n + 1));
  return out;
}

RelatorCurve build_relator_curve(const Word& relator, int n, int genus, const FillerChoice& fillers) {
  check_relator(relator, n, genus);
  const int syllables = static_cast<int>(relator.syllable_length());
  RelatorCurve out;
  out.relator = relator;
  out.n = n;
  out.genus = genus;

  const auto alphabet = filler_alphabet(n, syllables, genus);
  std::mt19937_64 rng(fillers.seed);
  std::size_t explicit_index = 0;
  Integer blocks = 0;
  for (const auto& l : relator.letters()) blocks += abs_value(l.exponent);
  if (fillers.mode == FillerChoice::Mode::Explicit && Integer(fillers.words.size()) != blocks)
    throw std::invalid_argument("expected " + blocks.str() + " filler words, got " + std::to_string(fillers.words.size()));
  if (fillers.mode != FillerChoice::Mode::Empty && blocks > 100000)
    throw std::invalid_argument("too many filler blocks (" + blocks.str() + ")");

  const SurfaceGroup s(genus);
  for (const auto& l : relator.letters()) {
    const Word step = s.a(l.generator).pow(l.exponent > 0 ? 1 : -1);
    std::vector<Word> row;
    if (fillers.mode == FillerChoice::Mode::Empty) {
      // all fillers trivial: the blocks collapse to a single syllable
      out.assembled *= s.a(l.generator).pow(l.exponent);
      out.fillers.push_back({});
      continue;
    }
    for (Integer t = 0; t < abs_value(l.exponent); ++t) {
      Word x;
      if (fillers.mode == FillerChoice::Mode::Explicit) {
        x = fillers.words[explicit_index++];
        if (x.max_generator() > 2 * genus) throw std::invalid_argument("filler word outside the surface alphabet");
        if (!residue(x, n, syllables, genus).is_identity())
          throw std::invalid_argument("filler word " + s.format(x) + " survives the kill set");
      } else if (!alphabet.empty()) {
        std::uniform_int_distribution<int> len(0, 3), pick(0, static_cast<int>(alphabet.size()) - 1), sign(0, 1);
        for (int k = len(rng); k > 0; --k) {
          const Word& token = alphabet[static_cast<std::size_t>(pick(rng))];
          x *= sign(rng) ? token : token.inverse();
        }
      }
      row.push_back(x);
      out.assembled *= x * step;
    }
    out.fillers.push_back(std::move(row));
  }
  out.assembled *= l_tilde(relator, genus);
  return out;
}

}  // namespace lefschetz
