#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lefschetz/abelian.hpp"
#include "lefschetz/coset.hpp"
#include "lefschetz/finite_group.hpp"

namespace lefschetz {

enum class OrderKind { Finite, Infinite, Inconclusive };

/// Everything the engine can say about the isomorphism type of a presented
/// group. Two presentations with equal vectors are indistinguishable by these
/// invariants; that is the only claim ever made.
struct InvariantVector {
  AbelianInvariants abelian;
  std::vector<std::pair<std::string, std::uint64_t>> hom_counts;
  OrderKind order_kind = OrderKind::Inconclusive;
  std::size_t order = 0;

  friend bool operator==(const InvariantVector&, const InvariantVector&) = default;
};

struct InvariantOptions {
  std::vector<FiniteGroupTable> battery = default_battery();
  HomCountOptions hom;
  CosetOptions coset;
};

/// Infinite abelianization certifies an infinite group, so enumeration is
/// skipped in that case.
InvariantVector compute_invariants(const Presentation& p, const InvariantOptions& options = {});

std::string format_order(const InvariantVector& v);
std::string format_invariants(const InvariantVector& v);

}  // namespace lefschetz
