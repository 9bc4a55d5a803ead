#include <doctest.h>

#include <random>

#include "reflex/ehrhart.hpp"
#include "reflex/toric.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace reflex;
using namespace reflex::fixtures;

namespace {

std::vector<Rational> rats(std::initializer_list<Rational> xs) { return xs; }

}  // namespace

TEST_CASE("divisor of a polytope") {
  const ToricDivisor d1 = divisor_from_polytope(polytope1());
  CHECK(d1.fan.rays.size() == 3);
  CHECK(equal(d1.fan.rays[2], ivec({2, 3})));
  CHECK(d1.coefficients == rats({1, 1, 1}));
  CHECK(is_weil(d1));

  const ToricDivisor dh = divisor_from_polytope(half_segment());
  CHECK(equal(dh.fan.rays[0], ivec({-1})));
  CHECK(equal(dh.fan.rays[1], ivec({1})));
  CHECK(dh.coefficients == rats({0, Rational(1, 2)}));
  CHECK_FALSE(is_weil(dh));

  CHECK(divisor_from_polytope(centered_square()).coefficients == rats({1, 1, 1, 1}));
  const Polytope tri = hrep({{vec({-1, 0}), 0}, {vec({0, -1}), 0}, {vec({2, 2}), 1}}, 2);
  CHECK_FALSE(is_weil(divisor_from_polytope(tri)));
}

TEST_CASE("polytope of a divisor") {
  const FanRays square{{ivec({-1, 0}), ivec({0, -1}), ivec({0, 1}), ivec({1, 0})}};
  CHECK(polytope_from_divisor(anticanonical_divisor(square)) == centered_square());
  CHECK(polytope_from_divisor(anticanonical_divisor(divisor_from_polytope(polytope1()).fan)) == polytope1());
  CHECK(polytope_from_divisor(anticanonical_divisor(divisor_from_polytope(polytope3()).fan)) ==
        hrep({{vec({-1, 0}), 1}, {vec({0, -1}), 1}, {vec({1, 1}), 1}}, 2));

  CHECK(code_of([&] { polytope_from_divisor({square, rats({1, 1, -2, 1})}); }) == ErrorCode::EmptyOrUnbounded);
  const FanRays half{{ivec({-1, 0}), ivec({0, -1}), ivec({1, 0})}};
  CHECK(code_of([&] { polytope_from_divisor({half, rats({1, 1, 1})}); }) == ErrorCode::EmptyOrUnbounded);
  CHECK(code_of([&] { polytope_from_divisor({square, rats({0, 1, 1, 0})}); }) == ErrorCode::LowerDimensional);
}

TEST_CASE("rounding divisors") {
  const FanRays line{{ivec({-1}), ivec({1})}};
  CHECK(round_down_divisor({line, rats({Rational(1, 2), 0})}).coefficients == rats({0, 0}));
  const FanRays one{{ivec({1})}};
  CHECK(round_down_divisor({one, rats({Rational(1, 3)})}).coefficients == rats({0}));
  CHECK(round_up_divisor({one, rats({Rational(1, 3)})}).coefficients == rats({1}));
}

TEST_CASE("Euler characteristics") {
  CHECK(euler_char_global(polytope1(), 1) == 7);
  CHECK(euler_char_global(polytope3(), 0) == 1);
  CHECK(euler_char_global(half_segment(), 3) == 2);
  CHECK(euler_char_canonical_twist(polytope1(), 1) == 1);
  CHECK(euler_char_canonical_twist(unit_square(), 1) == 0);
  CHECK(euler_char_canonical_twist(half_segment(), 4) == 1);
}

TEST_CASE("dictionary invariants on random polytopes") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int dim = 1 + trial % 3;
    const Polytope p = oracle::random_hull(rng, dim, 3, dim == 3 ? 2 : 4);
    CAPTURE(trial);
    const ToricDivisor d = divisor_from_polytope(p);
    CHECK(polytope_from_divisor(d) == p);
    CHECK(divisor_from_polytope(polytope_from_divisor(d)) == d);
    for (const Rational& k : {Rational(1, 2), Rational(2), Rational(3), Rational(5, 3)})
      CHECK(polytope_from_divisor(scale(d, k)) == dilate(p, k));

    const auto down = code_of([&] { (void)round_down(p); });
    if (!down) CHECK(polytope_from_divisor(round_down_divisor(d)) == round_down(p));
    CHECK(polytope_from_divisor(round_up_divisor(d)) == round_up(p));

    // Serre duality against reciprocity.
    const QuasiPolynomial q = ehrhart_quasi_polynomial(p);
    const int sign = dim % 2 == 0 ? 1 : -1;
    for (int n = 1; n <= 5; ++n) {
      CHECK(Rational(sign * euler_char_canonical_twist(p, n)) == q(-n));
      CHECK(euler_char_global(p, n) == oracle::brute_count(p, n));
    }
  }
}
