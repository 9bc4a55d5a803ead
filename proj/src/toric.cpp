#include "reflex/toric.hpp"

#include "reflex/ehrhart.hpp"

namespace reflex {

bool operator==(const FanRays& a, const FanRays& b) {
  if (a.rays.size() != b.rays.size()) return false;
  for (std::size_t i = 0; i < a.rays.size(); ++i)
    if (!equal(a.rays[i], b.rays[i])) return false;
  return true;
}

ToricDivisor divisor_from_polytope(const Polytope& p) {
  ToricDivisor d;
  for (const auto& ray : normal_fan_rays(p)) {
    d.fan.rays.push_back(ray.normal);
    d.coefficients.push_back(ray.offset);
  }
  return d;
}

Polytope polytope_from_divisor(const ToricDivisor& d) {
  if (d.fan.rays.size() != d.coefficients.size())
    throw Error(ErrorCode::InvalidInput, "toric", "divisor needs one coefficient per ray");
  if (d.fan.rays.empty()) throw Error(ErrorCode::EmptyOrUnbounded, "toric", "divisor has no rays");
  std::vector<HalfSpace> hs;
  for (std::size_t i = 0; i < d.fan.rays.size(); ++i) {
    if (content(d.fan.rays[i]) != 1) throw Error(ErrorCode::InvalidInput, "toric", "ray generators must be primitive");
    hs.push_back({d.fan.rays[i], d.coefficients[i]});
  }
  try {
    return from_hrep(std::span<const HalfSpace>(hs), d.fan.rays.front().size());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::EmptyInput || e.code() == ErrorCode::UnboundedInput)
      throw Error(ErrorCode::EmptyOrUnbounded, "toric", e.what());
    throw;
  }
}

ToricDivisor scale(const ToricDivisor& d, const Rational& k) {
  ToricDivisor out = d;
  for (auto& a : out.coefficients) a *= k;
  return out;
}

ToricDivisor round_down_divisor(const ToricDivisor& d) {
  ToricDivisor out = d;
  for (auto& a : out.coefficients) a = Rational(floor(a));
  return out;
}

ToricDivisor round_up_divisor(const ToricDivisor& d) {
  ToricDivisor out = d;
  for (auto& a : out.coefficients) a = Rational(ceil(a));
  return out;
}

bool is_weil(const ToricDivisor& d) {
  for (const auto& a : d.coefficients)
    if (!is_integral(a)) return false;
  return true;
}

ToricDivisor anticanonical_divisor(const FanRays& fan) {
  return {fan, std::vector<Rational>(fan.rays.size(), Rational(1))};
}

Integer euler_char_global(const Polytope& p, long long n, const Budget& budget) { return count(p, n, budget); }

Integer euler_char_canonical_twist(const Polytope& p, long long n, const Budget& budget) {
  const Integer interior = count_interior(p, n, budget);

  // ⌈nD_P⌉ + K has coefficients ⌈n b_ρ⌉ - 1.
  const Polytope scaled = dilate(p, Rational(n));
  ToricDivisor twisted = round_up_divisor(divisor_from_polytope(scaled));
  for (auto& a : twisted.coefficients) a -= 1;
  Integer via_divisor;
  try {
    via_divisor = count_lattice_points(polytope_from_divisor(twisted), false, budget);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::EmptyOrUnbounded) {
      via_divisor = 0;
    } else if (e.code() == ErrorCode::LowerDimensional) {
      std::vector<HalfSpace> hs;
      for (std::size_t i = 0; i < twisted.fan.rays.size(); ++i)
        hs.push_back({twisted.fan.rays[i], twisted.coefficients[i]});
      via_divisor = count_lattice_points(std::span<const HalfSpace>(hs), bounding_box(scaled), false, budget);
    } else {
      throw;
    }
  }
  if (via_divisor != interior)
    throw Error(ErrorCode::InternalInconsistency, "toric",
                "interior count " + interior.str() + " differs from twisted-divisor count " + via_divisor.str());
  return interior;
}

}  // namespace reflex
