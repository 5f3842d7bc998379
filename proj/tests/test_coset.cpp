#include <doctest.h>

#include <numeric>

#include "lefschetz/coset.hpp"
#include "lefschetz/finite_group.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace lefschetz;
using test_support::pres;

TEST_CASE("orders from the examples") {
  CHECK(coset_enumerate(pres("<x,y | x^2, y^2, x y x y x y>"), 100) == std::optional<std::size_t>(6));
  CHECK(coset_enumerate(pres("<x | x^5>"), 100) == std::optional<std::size_t>(5));
  CHECK_FALSE(coset_enumerate(pres("<a,b | a b a^-1 b^-1>"), 1000).has_value());
}

TEST_CASE("edge cases") {
  CHECK(coset_enumerate(pres("< | >"), 1) == std::optional<std::size_t>(1));
  CHECK(coset_enumerate(pres("<a | a>"), 1) == std::optional<std::size_t>(1));
  CHECK(coset_enumerate(pres("<a,b | a, b>"), 1) == std::optional<std::size_t>(1));
  CHECK_FALSE(coset_enumerate(pres("<a | >"), 50).has_value());
  CHECK_FALSE(coset_enumerate(pres("<x | x^7>"), 6).has_value());
  CHECK(coset_enumerate(pres("<x | x^7>"), 7) == std::optional<std::size_t>(7));
  CHECK_THROWS_AS(coset_enumerate(pres("<x | x>"), 0), std::invalid_argument);
}

TEST_CASE("classical finite groups") {
  // dihedral of order 2n, quaternion, A4, binary tetrahedral, A5
  for (int n = 3; n <= 12; ++n)
    CHECK(coset_enumerate(pres("<r,s | r^" + std::to_string(n) + ", s^2, s r s r>"), 1000) ==
          std::optional<std::size_t>(2 * n));
  CHECK(coset_enumerate(pres("<i,j | i^4, i^2 j^-2, i j i j^-1>"), 1000) == std::optional<std::size_t>(8));
  CHECK(coset_enumerate(pres("<a,b | a^3, b^3, a b a b>"), 10000) == std::optional<std::size_t>(12));
  CHECK(coset_enumerate(pres("<s,t | s t s t s^-3, s^3 t^-3>"), 10000) == std::optional<std::size_t>(24));
  CHECK(coset_enumerate(pres("<a,b | a^2, b^3, a b a b a b a b a b>"), 10000) == std::optional<std::size_t>(60));
  // coincidence-heavy: trivial group in disguise
  CHECK(coset_enumerate(pres("<a,b | a b a^-1 b^-2, b a b^-1 a^-2>"), 10000) == std::optional<std::size_t>(1));
}

TEST_CASE("order of abelian groups matches the product of invariant factors") {
  CHECK(coset_enumerate(pres("<a,b | a^4, b^6, a b a^-1 b^-1>"), 1000) == std::optional<std::size_t>(24));
  CHECK(coset_enumerate(pres("<a,b,c | a^2, b^2, c^3, a b a^-1 b^-1, a c a^-1 c^-1, b c b^-1 c^-1>"), 1000) ==
        std::optional<std::size_t>(12));
}

TEST_CASE("two powers of one generator give the gcd") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int a = 1 + static_cast<int>(rng() % 12), b = 1 + static_cast<int>(rng() % 12);
    const auto expected = static_cast<std::size_t>(std::gcd(a, b));
    CHECK(coset_enumerate(pres("<x | x^" + std::to_string(a) + ", x^" + std::to_string(b) + ">"), 100) ==
          std::optional<std::size_t>(expected));
  }
}
