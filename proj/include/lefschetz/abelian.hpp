#pragma once

#include <string>
#include <vector>

#include "lefschetz/presentation.hpp"

namespace lefschetz {

/// Z^free_rank + Z_{t1} + ... with t1 | t2 | ..., every t >= 2.
struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  /// Minimal number of generators of the group.
  std::size_t generator_count() const { return free_rank + torsion.size(); }

  /// Normalizes an arbitrary list of cyclic orders (0 = infinite cyclic,
  /// 1 = trivial) into invariant-factor form.
  static AbelianInvariants from_cyclic_orders(const std::vector<Integer>& orders);

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

std::string format_abelian(const AbelianInvariants& a);

/// Relator exponent matrix: one row per relator, one column per generator.
IntMatrix<Integer> relation_matrix(const Presentation& p);

AbelianInvariants abelianization(const Presentation& p);

/// Minimal generator count of the abelianization; a lower bound for the
/// minimal generator count of the group itself.
std::size_t generator_lower_bound(const Presentation& p);

}  // namespace lefschetz
