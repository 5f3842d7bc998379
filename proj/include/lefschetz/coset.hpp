#pragma once

#include <cstddef>
#include <optional>

#include "lefschetz/presentation.hpp"

namespace lefschetz {

struct CosetOptions {
  /// Largest number of simultaneously live cosets.
  std::size_t max_cosets = 100'000;
  /// Relators whose letter expansion exceeds this are refused (inconclusive).
  std::size_t max_relator_letters = 1'000'000;
};

/// Order of the presented group by enumerating cosets of the trivial
/// subgroup, or nullopt when the table does not close within the limits.
/// A returned order has been re-verified against the completed table.
std::optional<std::size_t> coset_enumerate(const Presentation& p, const CosetOptions& options = {});

inline std::optional<std::size_t> coset_enumerate(const Presentation& p, std::size_t max_cosets) {
  CosetOptions options;
  options.max_cosets = max_cosets;
  return coset_enumerate(p, options);
}

}  // namespace lefschetz
