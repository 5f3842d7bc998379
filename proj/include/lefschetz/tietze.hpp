#pragma once

#include <vector>

#include "lefschetz/presentation.hpp"

namespace lefschetz {

struct TietzeOptions {
  /// Replace a relator by a strictly shorter one obtained by cancelling more
  /// than half of a cyclic conjugate of a shorter relator.
  bool rewrite_relators = true;
  /// Generators (1-based, input indexing) that must never be eliminated.
  std::vector<int> protected_generators;
  /// Relators longer than this (in letters) are never expanded for rewriting.
  std::size_t rewrite_length_limit = 4096;
};

struct TietzeResult {
  Presentation presentation;
  /// images[i] is input generator i + 1 written in the output generators.
  std::vector<Word> images;
  bool budget_exhausted = false;
  std::size_t passes = 0;
};

/// Isomorphism-preserving simplification, run to a fixed point or until
/// `budget` passes have been spent. Each pass: cyclically reduce relators and
/// drop identities and duplicates (up to rotation and inversion); eliminate
/// generators pinned by a relator (they occur once, with exponent +-1),
/// shortest relator first and, on ties, the highest-index generator first so
/// low-index generators survive; then rewrite relators by shorter ones.
TietzeResult tietze_simplify(const Presentation& p, std::size_t budget, const TietzeOptions& options = {});

}  // namespace lefschetz
