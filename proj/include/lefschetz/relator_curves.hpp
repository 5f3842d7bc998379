#pragma once

#include <cstdint>
#include <vector>

#include "lefschetz/surface.hpp"

namespace lefschetz {

/// Tail word of a relator curve. For r = g_{j(1)}^{m(1)} ... g_{j(l)}^{m(l)}:
///   j(1) <= j(l):  b_{j(l)}^-1 b_{j(l)-1}^-1 ... b_{j(1)}^-1
///   j(1) >  j(l):  (b_{j(l)+1} b_{j(l)}) (b_{j(l)+2} b_{j(l)+1}) ... (b_{j(1)} b_{j(1)-1})
Word l_tilde(const Word& relator, int genus);

/// g_j -> a_j. Since a_j is generator j of the surface group this keeps the
/// letters unchanged; it only checks that they fit in the genus.
Word hat(const Word& relator, int genus);

struct FillerChoice {
  enum class Mode { Empty, Random, Explicit };
  Mode mode = Mode::Empty;
  std::uint64_t seed = 0;
  /// Explicit mode: one word per block, in block order (sum of |m(s)| words).
  std::vector<Word> words;

  static FillerChoice empty() { return {}; }
  static FillerChoice random(std::uint64_t seed) { return {Mode::Random, seed, {}}; }
  static FillerChoice explicit_words(std::vector<Word> words) { return {Mode::Explicit, 0, std::move(words)}; }
};

struct RelatorCurve {
  Word relator;
  int n = 0;
  int genus = 0;
  /// fillers[s][t] precedes the t-th copy of a_{j(s)}^{+-1}; rows stay empty
  /// in empty mode, where the blocks collapse to a_{j(s)}^{m(s)}.
  std::vector<std::vector<Word>> fillers;
  Word assembled;
};

/// Letters a filler may use: a_t^{+-1}, b_t^{+-1} for n < t <= n + l - 1, and
/// the word c_{n+1}^{+-1} when n + 1 <= g.
std::vector<Word> filler_alphabet(int n, int syllables, int genus);

/// R = prod_s prod_{t <= |m(s)|} (x_{s,t} a_{j(s)}^{sign m(s)}) * l_tilde(r).
/// Requires g >= n + l(r) - 1 and r over g_1..g_n. Explicit fillers must die
/// once every b_i and a_t (n < t <= n + l - 1) is killed.
RelatorCurve build_relator_curve(const Word& relator, int n, int genus, const FillerChoice& fillers = {});

}  // namespace lefschetz
