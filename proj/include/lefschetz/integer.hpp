#pragma once

#include <cstdint>
#include <string>
#include <type_traits>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

// Boost 1.74 probes every type with a `const_iterator` member as a possible
// byte container. Eigen 3.4 expressions have one, which breaks overload
// resolution of mixed scalar/matrix operators. Eigen types are never byte
// containers.
namespace boost::multiprecision::detail {
template <class C>
  requires requires { C::RowsAtCompileTime; }
struct is_byte_container<C> : boost::false_type {};
}  // namespace boost::multiprecision::detail

#include <boost/multiprecision/eigen.hpp>

namespace lefschetz {

using Integer = boost::multiprecision::cpp_int;

template <typename Scalar>
using IntMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using IntVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
Scalar abs_value(const Scalar& x) {
  return x < 0 ? Scalar(-x) : x;
}

// Euclidean gcd, always non-negative; gcd(0, 0) = 0.
template <typename Scalar>
Scalar gcd_value(Scalar a, Scalar b) {
  a = abs_value(a);
  b = abs_value(b);
  while (b != 0) {
    Scalar r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline std::string to_string(const Integer& x) { return x.str(); }

}  // namespace lefschetz
