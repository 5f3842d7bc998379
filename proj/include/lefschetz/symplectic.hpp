#pragma once

#include <stdexcept>
#include <vector>

#include "lefschetz/integer.hpp"

namespace lefschetz {

/// J = [[0, I], [-I, 0]] in the basis (a_1..a_g, b_1..b_g), so <a_i, b_i> = 1.
template <typename Scalar>
IntMatrix<Scalar> intersection_form(Eigen::Index genus) {
  IntMatrix<Scalar> j = IntMatrix<Scalar>::Zero(2 * genus, 2 * genus);
  j.topRightCorner(genus, genus).setIdentity();
  j.bottomLeftCorner(genus, genus) = -IntMatrix<Scalar>::Identity(genus, genus);
  return j;
}

/// Algebraic intersection x^T J y.
template <typename DerivedX, typename DerivedY>
typename DerivedX::Scalar intersection(const Eigen::MatrixBase<DerivedX>& x, const Eigen::MatrixBase<DerivedY>& y) {
  using Scalar = typename DerivedX::Scalar;
  if (x.size() != y.size() || x.size() % 2 != 0) throw std::invalid_argument("homology classes of different genus");
  const Eigen::Index g = x.size() / 2;
  // x_a . y_b - x_b . y_a, without forming J
  Scalar out = x.head(g).dot(y.tail(g));
  out -= x.tail(g).dot(y.head(g));
  return out;
}

/// Homology action of the right Dehn twist about a curve of class c:
/// x -> x + <c, x> c, i.e. I + c c^T J. With this sign, composing the twists
/// of W left to right gives the identity.
template <typename Derived>
IntMatrix<typename Derived::Scalar> transvection(const Eigen::MatrixBase<Derived>& c) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index g = c.size() / 2;
  if (c.size() % 2 != 0) throw std::invalid_argument("homology class has odd length");
  IntVector<Scalar> cj(c.size());  // row vector c^T J, stored as a column
  cj.head(g) = -c.tail(g);
  cj.tail(g) = c.head(g);
  IntMatrix<Scalar> m = IntMatrix<Scalar>::Identity(c.size(), c.size());
  m += c * cj.transpose();
  return m;
}

template <typename Derived>
bool is_symplectic(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols() || m.rows() % 2 != 0) return false;
  const IntMatrix<Scalar> j = intersection_form<Scalar>(m.rows() / 2);
  return IntMatrix<Scalar>(m.transpose() * j * m) == j;
}

/// Product of the transvections of `classes`, applied in list order (the
/// first twist acts first, so it is the rightmost matrix factor).
template <typename Scalar>
IntMatrix<Scalar> twist_product(const std::vector<IntVector<Scalar>>& classes, Eigen::Index genus) {
  IntMatrix<Scalar> p = IntMatrix<Scalar>::Identity(2 * genus, 2 * genus);
  for (const auto& c : classes) p = (transvection(c) * p).eval();
  return p;
}

}  // namespace lefschetz
