#include <doctest.h>

#include <numeric>
#include <random>

#include "lefschetz/coset.hpp"
#include "lefschetz/genus_catalog.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace lefschetz;
using test_support::pres;

namespace {

// Unreduced Burau matrices at t = -1, integer valued.
using Mat = std::vector<std::vector<long long>>;

Mat identity_mat(int n) {
  Mat m(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Mat mul(const Mat& a, const Mat& b) {
  const std::size_t n = a.size();
  Mat c(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

Mat burau(int n, int i, int sign) {
  Mat m = identity_mat(n);
  const int p = i - 1;
  if (sign > 0) {
    m[p][p] = 2, m[p][p + 1] = -1, m[p + 1][p] = 1, m[p + 1][p + 1] = 0;
  } else {
    m[p][p] = 0, m[p][p + 1] = 1, m[p + 1][p] = -1, m[p + 1][p + 1] = 2;
  }
  return m;
}

Mat burau_xy(const Word& w, int n) {
  Mat out = identity_mat(n);
  for (const auto& l : w.letters()) {
    Mat block = identity_mat(n);
    if (l.generator == 1) {
      block = burau(n, 1, 1);
    } else {
      for (int i = 1; i < n; ++i) block = mul(block, burau(n, i, 1));
    }
    if (l.exponent < 0) {
      block = identity_mat(n);
      if (l.generator == 1)
        block = burau(n, 1, -1);
      else
        for (int i = n - 1; i >= 1; --i) block = mul(block, burau(n, i, -1));
    }
    const long long e = static_cast<long long>(abs_value(l.exponent));
    for (long long k = 0; k < e; ++k) out = mul(out, block);
  }
  return out;
}

std::vector<oracle::Perm> transpositions_xy(int n) {
  oracle::Perm xs = oracle::identity(n), ys = oracle::identity(n);
  std::swap(xs[0], xs[1]);
  for (int i = 0; i + 1 < n; ++i) {
    oracle::Perm t = oracle::identity(n);
    std::swap(t[i], t[i + 1]);
    ys = oracle::compose(ys, t);
  }
  return {xs, ys};
}

std::uint64_t factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

FamilySpec spec(Family f, std::vector<long long> p) { return {f, std::move(p)}; }

}  // namespace

TEST_CASE("family names round trip") {
  for (auto f : all_families()) CHECK(parse_family(family_name(f)) == f);
  CHECK_THROWS_AS(parse_family("mcg"), std::invalid_argument);
}

TEST_CASE("braid presentations") {
  CHECK(format_presentation(family_presentation(spec(Family::Braid, {3}))) ==
        "<x,y | x y x y^-1 x y x^-1 y^-1 x^-1 y x^-1 y^-1, x y x y^-2>");
  const auto b4 = family_presentation(spec(Family::Braid, {4}));
  CHECK(b4.relators.size() == 3);
  CHECK(b4.relators[0] == parse_word("x y^2 x y^-2 x^-1 y^2 x^-1 y^-2", b4.generators));
  // B_2 is Z
  CHECK(format_presentation(family_presentation(spec(Family::Braid, {2}))) == "<x,y | x y^-1>");
  CHECK_THROWS_AS(family_presentation(spec(Family::Braid, {1})), std::out_of_range);
  CHECK_THROWS_AS(family_presentation(spec(Family::Braid, {3, 4})), std::out_of_range);
}

TEST_CASE("other two-generator families extend the braid relators") {
  const auto b3 = family_presentation(spec(Family::Braid, {3})).relators;
  const auto s3 = family_presentation(spec(Family::Symmetric, {3}));
  REQUIRE(s3.relators.size() == b3.size() + 1);
  CHECK(std::equal(b3.begin(), b3.end(), s3.relators.begin()));
  CHECK(s3.relators.back() == test_support::g(1, 2));
  const auto m3 = family_presentation(spec(Family::SphereMcg, {3}));
  REQUIRE(m3.relators.size() == b3.size() + 2);
  CHECK(m3.relators[2] == test_support::g(2, 3));
  CHECK(m3.relators[3] == parse_word("y^-1 x y^-1 x", m3.generators));
  CHECK(format_presentation(family_presentation(spec(Family::Symmetric, {2}))) == "<x,y | x y^-1, x^2>");
  const auto hy1 = family_presentation(spec(Family::Hyperelliptic, {1}));
  CHECK(hy1.relators.size() == 6);
  CHECK(hy1.relators[3] == test_support::g(2, 4));
}

TEST_CASE("artin presentation") {
  const auto a5 = family_presentation(spec(Family::Artin, {5}));
  CHECK(a5.rank() == 3);
  // 2 far commutations, braid, power, s_4 tau braid, 3 tau commutations
  CHECK(a5.relators.size() == 8);
  // every s_i and tau are conjugate, so the abelianization is Z
  CHECK(abelianization(a5) == AbelianInvariants{1, {}});
  CHECK(oracle::abelian_profile(a5) == oracle::free_abelian_profile(1));
  CHECK_THROWS_AS(family_presentation(spec(Family::Artin, {4})), std::out_of_range);
  CHECK(hom_count(a5, FiniteGroupTable::symmetric(3)) == oracle::brute_hom_count(a5, oracle::all_perms(3)));
}

TEST_CASE("braid relators act trivially on the free group") {
  for (int n = 2; n <= 6; ++n) {
    const auto cert = braid_relator_check(n);
    CHECK(cert.passed);
    // Burau at t = -1 is an independent representation
    for (const auto& r : family_presentation(spec(Family::Braid, {n})).relators) CHECK(burau_xy(r, n) == identity_mat(n));
  }
  const Presentation bad = pres("<x,y | x y x^-1 y^-1>");
  const auto neg = braid_relator_check(3, bad.relators);
  CHECK_FALSE(neg.passed);
  CHECK_FALSE(neg.checks[0].detail.empty());
  CHECK(burau_xy(bad.relators[0], 3) != identity_mat(3));
  CHECK_THROWS_AS(braid_relator_check(1), std::out_of_range);
  CHECK_THROWS_AS(braid_relator_check(9), std::out_of_range);
}

TEST_CASE("symmetric family has order n!") {
  for (int n = 2; n <= 5; ++n) {
    const auto cert = symmetric_relator_check(n);
    CHECK(cert.passed);
    REQUIRE(cert.order.has_value());
    CHECK(*cert.order == factorial(n));
    const auto p = family_presentation(spec(Family::Symmetric, {n}));
    for (const auto& r : p.relators)
      CHECK(oracle::evaluate(r, transpositions_xy(n), n) == oracle::identity(n));
  }
  CHECK(symmetric_relator_check(3).order == std::optional<std::size_t>(6));
  CHECK(symmetric_relator_check(4).order == std::optional<std::size_t>(24));
  // S_3 into S_3: 6 automorphisms, 3 maps onto each Z_2 subgroup, 1 trivial
  CHECK(oracle::brute_hom_count(family_presentation(spec(Family::Symmetric, {3})), oracle::all_perms(3)) == 10);
  CHECK(symmetric_relator_check(6).passed);
  CHECK_FALSE(symmetric_relator_check(6).order.has_value());
}

TEST_CASE("sphere mapping class group") {
  CHECK(coset_enumerate(family_presentation(spec(Family::SphereMcg, {3}))) == std::optional<std::size_t>(6));
  CHECK(coset_enumerate(family_presentation(spec(Family::SphereMcg, {2}))) == std::optional<std::size_t>(2));
}

TEST_CASE("hyperelliptic identities") {
  for (int g = 1; g <= 4; ++g) {
    const auto cert = hyperelliptic_identity_check(g);
    CHECK(cert.passed);
    for (const auto& c : cert.checks) CHECK_MESSAGE(c.holds, c.label << " " << c.detail);
  }
  CHECK_THROWS_AS(hyperelliptic_identity_check(0), std::out_of_range);
  // y^4 = 1 reduction at g = 1
  const Word y3 = test_support::g(2, 3);
  CHECK(reduce_power_modulo(y3, 2, 4) == test_support::g(2, -1));
  CHECK(reduce_power_modulo(test_support::w({{2, 2}, {1, 1}, {2, -2}}), 2, 4) == test_support::w({{2, 2}, {1, 1}, {2, 2}}));
  CHECK(reduce_power_modulo(test_support::w({{2, 4}, {1, 1}, {2, 5}, {1, 1}}), 2, 4) == test_support::w({{1, 1}, {2, 1}, {1, 1}}));
}

TEST_CASE("genus bounds") {
  CHECK(genus_bounds(spec(Family::Braid, {2})) == GenusBounds{1, 1, true});
  for (int n = 3; n <= 8; ++n) {
    CHECK(genus_bounds(spec(Family::Braid, {n})) == GenusBounds{2, 4, false});
    CHECK(genus_bounds(spec(Family::SphereMcg, {n})) == GenusBounds{2, 4, false});
    CHECK(genus_bounds(spec(Family::Symmetric, {n})) == GenusBounds{2, 4, false});
  }
  CHECK(genus_bounds(spec(Family::Symmetric, {2})) == GenusBounds{2, 2, true});
  CHECK(genus_bounds(spec(Family::SphereMcg, {2})) == GenusBounds{2, 2, true});
  for (int g = 1; g <= 5; ++g) CHECK(genus_bounds(spec(Family::Hyperelliptic, {g})) == GenusBounds{2, 4, false});
  CHECK(genus_bounds(spec(Family::Artin, {5})) == GenusBounds{2, 5, false});
  CHECK(genus_bounds(spec(Family::Abelian, {2, 1, 3})) == GenusBounds{2, 4, false});
  CHECK(genus_bounds(spec(Family::Abelian, {3, 0})) == GenusBounds{2, 4, false});
  CHECK(genus_bounds(spec(Family::Abelian, {0, 4, 2, 2, 2, 2})) == GenusBounds{3, 5, false});
  CHECK(genus_bounds(spec(Family::Surface, {0})) == GenusBounds{0, 0, true});
  CHECK(genus_bounds(spec(Family::Surface, {3})) == GenusBounds{3, 3, true});
  // the genus 0/1/2 table
  CHECK(genus_bounds(spec(Family::SmallAbelian, {0, 0})) == GenusBounds{0, 0, true});
  CHECK(genus_bounds(spec(Family::SmallAbelian, {2, 0})) == GenusBounds{1, 1, true});
  CHECK(genus_bounds(spec(Family::SmallAbelian, {1, 0})) == GenusBounds{1, 1, true});
  CHECK(genus_bounds(spec(Family::SmallAbelian, {1, 1, 5})) == GenusBounds{1, 1, true});
  CHECK(genus_bounds(spec(Family::SmallAbelian, {0, 1, 5})) == GenusBounds{2, 2, true});
  CHECK(genus_bounds(spec(Family::SmallAbelian, {0, 2, 2, 3})) == GenusBounds{2, 2, true});
  CHECK_THROWS_AS(genus_bounds(spec(Family::SmallAbelian, {2, 1, 2})), std::out_of_range);
  CHECK_THROWS_AS(genus_bounds(spec(Family::Abelian, {1, 1, 2})), std::out_of_range);
  CHECK_THROWS_AS(genus_bounds(spec(Family::Abelian, {1, 2, 2})), std::out_of_range);
  CHECK_THROWS_AS(genus_bounds(spec(Family::Abelian, {1, 2, 2, 1})), std::out_of_range);
  CHECK(format_bounds(GenusBounds{2, 4, false}) == "[2,4]");
  CHECK(format_bounds(GenusBounds{1, 1, true}) == "exact 1");
}

TEST_CASE("generator lower bound never exceeds twice the genus lower bound") {
  std::vector<FamilySpec> specs;
  for (int n = 2; n <= 6; ++n)
    for (auto f : {Family::Braid, Family::SphereMcg, Family::Symmetric}) specs.push_back(spec(f, {n}));
  for (int g = 1; g <= 3; ++g) specs.push_back(spec(Family::Hyperelliptic, {g}));
  for (int g = 0; g <= 4; ++g) specs.push_back(spec(Family::Surface, {g}));
  specs.push_back(spec(Family::Artin, {5}));
  specs.push_back(spec(Family::Artin, {7}));
  specs.push_back(spec(Family::Abelian, {3, 0}));
  specs.push_back(spec(Family::Abelian, {0, 5, 2, 2, 2, 2, 2}));
  specs.push_back(spec(Family::SmallAbelian, {2, 0}));
  specs.push_back(spec(Family::SmallAbelian, {0, 2, 4, 6}));
  for (const auto& s : specs) {
    const auto p = family_presentation(s);
    CHECK(generator_lower_bound(p) <= 2 * static_cast<std::size_t>(genus_bounds(s).lower));
  }
}

TEST_CASE("abelian fibrations") {
  SUBCASE("odd rank, no torsion") {
    const auto f = abelian_fibration(3, 0, {});
    CHECK(f.plan.genus() == 4);
    CHECK(abelianization(f.presentation) == AbelianInvariants{3, {}});
    CHECK(f.plan == f.interim);
  }
  SUBCASE("pure torsion") {
    const auto f = abelian_fibration(0, 3, {2, 2, 2});
    CHECK(abelianization(f.presentation) == AbelianInvariants{0, {2, 2, 2}});
    CHECK(oracle::brute_hom_count(f.presentation, oracle::cyclic_perms(2)) == 8);
  }
  SUBCASE("even rank") {
    const auto f = abelian_fibration(2, 2, {2, 4});
    CHECK(f.plan.genus() == 5);
    CHECK(abelianization(f.presentation) == AbelianInvariants{2, {2, 4}});
    CHECK(f.plan.blocks().size() == f.interim.blocks().size() + 2);
  }
  CHECK_THROWS_AS(abelian_fibration(1, 1, {2}), std::out_of_range);
  CHECK_THROWS_AS(abelian_fibration(2, 1, {}), std::out_of_range);
}

TEST_CASE("abelian interim stage is free abelian of rank n + k") {
  for (int rank = 3; rank <= 6; ++rank) {
    FibrationPlan p = FibrationPlan::bare_w(rank + 1);
    for (const auto& d : abelian_interim_centers(rank)) p = append_w_block(p, d).plan;
    CHECK(oracle::abelian_profile(pi1_presentation(p)) == oracle::free_abelian_profile(rank));
    const Presentation s = pi1_from_plan(p);
    CHECK(s.rank() == rank);
    // every simplified relator is a commutator-type word: zero exponent sums
    for (const auto& r : s.relators) CHECK(exponent_sums(r, rank).isZero());
  }
}

TEST_CASE("abelian fibrations match the direct presentation on finite quotients") {
  std::mt19937_64 rng(5);
  for (int total = 3; total <= 5; ++total)
    for (int k = 0; k <= total; ++k) {
      std::vector<long long> m;
      for (int i = 0; i < k; ++i) m.push_back(2 + static_cast<long long>(rng() % 3));
      const auto f = abelian_fibration(total - k, k, m);
      std::vector<long long> params{total - k, k};
      params.insert(params.end(), m.begin(), m.end());
      const auto direct = family_presentation(spec(Family::Abelian, params));
      CHECK(abelianization(f.presentation) == f.expected);
      CHECK(abelianization(direct) == f.expected);
      CHECK(oracle::abelian_profile(f.presentation) == oracle::abelian_profile(direct));
      if (f.presentation.rank() <= 6) {
        CHECK(oracle::brute_hom_count(f.presentation, oracle::cyclic_perms(4)) ==
              oracle::brute_hom_count(direct, oracle::cyclic_perms(4)));
        CHECK(oracle::brute_hom_count(f.presentation, oracle::cyclic_perms(3)) ==
              oracle::brute_hom_count(direct, oracle::cyclic_perms(3)));
      }
    }
}

TEST_CASE("T^2 bundles") {
  CHECK(t2_bundle_pi1(0, 0) == AbelianInvariants{2, {}});
  CHECK(t2_bundle_pi1(1, 0) == AbelianInvariants{1, {}});
  CHECK(t2_bundle_pi1(6, 4) == AbelianInvariants{1, {2}});
  for (int n = 2; n <= 9; ++n) CHECK(t2_bundle_pi1(n, 0) == AbelianInvariants{1, {n}});
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const long long n = static_cast<long long>(rng() % 41) - 20, m = static_cast<long long>(rng() % 41) - 20;
    // Euclid by hand
    long long a = n < 0 ? -n : n, b = m < 0 ? -m : m;
    while (b != 0) a = std::exchange(b, a % b);
    const auto got = t2_bundle_pi1(n, m);
    if (a == 0)
      CHECK(got == AbelianInvariants{2, {}});
    else if (a == 1)
      CHECK(got == AbelianInvariants{1, {}});
    else
      CHECK(got == AbelianInvariants{1, {Integer(a)}});
  }
}

TEST_CASE("sphere mapping class group certificate") {
  for (int n = 2; n <= 6; ++n) CHECK(sphere_mcg_check(n).passed);
  CHECK(sphere_mcg_check(3).order == std::optional<std::size_t>(6));
  CHECK(sphere_mcg_check(2).order == std::optional<std::size_t>(2));
  CHECK_FALSE(sphere_mcg_check(4).order.has_value());
}

TEST_CASE("artin presentations agree on finite quotients") {
  const auto battery = parse_battery("s3,z2..z4");
  const auto cert = artin_invariant_check(5, battery);
  CHECK(cert.passed);
  CHECK(cert.checks.size() == battery.size() + 1);
  const Presentation sig = artin_sigma_presentation(5);
  CHECK(sig.rank() == 5);
  CHECK(hom_count(sig, FiniteGroupTable::symmetric(3)) == oracle::brute_hom_count(sig, oracle::all_perms(3)));
  CHECK_THROWS_AS(artin_invariant_check(8, battery), std::out_of_range);
}
