#include "lefschetz/abelian.hpp"

#include "lefschetz/smith.hpp"

namespace lefschetz {

namespace {

AbelianInvariants from_factors(std::size_t columns, const std::vector<Integer>& factors) {
  AbelianInvariants out;
  std::size_t nonzero = 0;
  for (const auto& d : factors) {
    if (d == 0) continue;
    ++nonzero;
    if (d > 1) out.torsion.push_back(d);
  }
  out.free_rank = columns - nonzero;
  return out;
}

}  // namespace

AbelianInvariants AbelianInvariants::from_cyclic_orders(const std::vector<Integer>& orders) {
  const auto n = static_cast<Eigen::Index>(orders.size());
  IntMatrix<Integer> m = IntMatrix<Integer>::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = orders[i];
  return from_factors(orders.size(), smith_normal_form(m).invariant_factors);
}

std::string format_abelian(const AbelianInvariants& a) {
  std::string out;
  if (a.free_rank > 0) out = a.free_rank == 1 ? "Z" : "Z^" + std::to_string(a.free_rank);
  for (const auto& t : a.torsion) {
    if (!out.empty()) out += " + ";
    out += "Z_" + t.str();
  }
  return out.empty() ? "0" : out;
}

IntMatrix<Integer> relation_matrix(const Presentation& p) {
  IntMatrix<Integer> m(static_cast<Eigen::Index>(p.relators.size()), p.rank());
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    m.row(static_cast<Eigen::Index>(i)) = exponent_sums(p.relators[i], p.rank()).transpose();
  return m;
}

AbelianInvariants abelianization(const Presentation& p) {
  return from_factors(p.generators.size(), smith_normal_form(relation_matrix(p)).invariant_factors);
}

std::size_t generator_lower_bound(const Presentation& p) { return abelianization(p).generator_count(); }

}  // namespace lefschetz
