#include "lefschetz/invariants.hpp"

namespace lefschetz {

InvariantVector compute_invariants(const Presentation& p, const InvariantOptions& options) {
  InvariantVector v;
  v.abelian = abelianization(p);
  for (const auto& g : options.battery) v.hom_counts.emplace_back(g.name(), hom_count(p, g, options.hom));
  if (v.abelian.free_rank > 0) {
    v.order_kind = OrderKind::Infinite;
  } else if (auto order = coset_enumerate(p, options.coset)) {
    v.order_kind = OrderKind::Finite;
    v.order = *order;
  }
  return v;
}

std::string format_order(const InvariantVector& v) {
  switch (v.order_kind) {
    case OrderKind::Finite: return std::to_string(v.order);
    case OrderKind::Infinite: return "infinite";
    case OrderKind::Inconclusive: break;
  }
  return "inconclusive";
}

std::string format_invariants(const InvariantVector& v) {
  std::string out = "abelianization " + format_abelian(v.abelian) + "; hom";
  for (const auto& [name, count] : v.hom_counts) out += " " + name + "=" + std::to_string(count);
  return out + "; order " + format_order(v);
}

}  // namespace lefschetz
