#include <doctest.h>

#include "lefschetz/abelian.hpp"
#include "support.hpp"

using namespace lefschetz;
using test_support::g;
using test_support::pres;

TEST_CASE("parse and format round trip") {
  for (const char* text : {"<a,b | a b a^-1 b^-1, b^2>", "<a | >", "< | >", "<x,y,z | x^3 y^-1, z>"}) {
    const Presentation p = pres(text);
    CHECK(format_presentation(p) == text);
    CHECK(pres(format_presentation(p)) == p);
  }
  const Presentation p = pres("< a , b|a b >");
  CHECK(p.generators == std::vector<std::string>{"a", "b"});
  REQUIRE(p.relators.size() == 1);
  CHECK(p.relators[0] == g(1) * g(2));
  CHECK(pres("<x|>").relators.empty());
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(pres("a,b | a"), ParseError);
  CHECK_THROWS_AS(pres("<a,a | a>"), ParseError);
  CHECK_THROWS_AS(pres("<a | a"), ParseError);
  CHECK_THROWS_AS(pres("<a | a> tail"), ParseError);
  try {
    pres("<a,b | a c>");
    FAIL("expected parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 9);
  }
}

TEST_CASE("relators up to rotation and inversion") {
  const Presentation p = pres("<a,b | a b a^-1, b^2 a>");
  const Presentation q = pres("<a,b | a^-1 b^-2, b>");
  CHECK(same_relators_up_to_cyclic(p.relators, q.relators));
  CHECK_FALSE(same_relators_up_to_cyclic(p.relators, pres("<a,b | b, a^2 b>").relators));
}

TEST_CASE("abelianization examples") {
  CHECK(abelianization(pres("<a,b | a b a^-1 b^-1>")) == AbelianInvariants{2, {}});
  CHECK(abelianization(pres("<a,b | a^2, b^3>")) == AbelianInvariants{0, {6}});
  // B_3 on x = sigma_1, y = sigma_1 sigma_2
  CHECK(abelianization(pres("<x,y | x y x y^-1 x y x^-1 y^-1 x^-1 y x^-1 y^-1, x y x y y^-3>")) ==
        AbelianInvariants{1, {}});
  CHECK(abelianization(pres("< | >")) == AbelianInvariants{});
  CHECK(format_abelian(AbelianInvariants{2, {6}}) == "Z^2 + Z_6");
  CHECK(format_abelian(AbelianInvariants{}) == "0");
}

TEST_CASE("generator lower bound") {
  CHECK(generator_lower_bound(pres("<a,b | a b a^-1 b^-1>")) == 2);
  // S_3 as the symmetric-family presentation at n = 3
  CHECK(generator_lower_bound(pres("<x,y | x y x y^-1 x y x^-1 y^-1 x^-1 y x^-1 y^-1, x y x y y^-3, x^2>")) == 1);
  CHECK(generator_lower_bound(pres("< | >")) == 0);
  CHECK(generator_lower_bound(pres("<a,b,c | a^2, b^4, c^6>")) == 3);
}

TEST_CASE("cyclic orders normalize to invariant factors") {
  CHECK(AbelianInvariants::from_cyclic_orders({2, 3}) == AbelianInvariants{0, {6}});
  CHECK(AbelianInvariants::from_cyclic_orders({2, 4, 0, 1}) == AbelianInvariants{1, {2, 4}});
  CHECK(AbelianInvariants::from_cyclic_orders({6, 4}) == AbelianInvariants{0, {2, 12}});
}
