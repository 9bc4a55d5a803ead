#pragma once

#include <json.hpp>

#include "reflex/classify.hpp"
#include "reflex/flag.hpp"
#include "reflex/fuzz.hpp"
#include "reflex/polynomial.hpp"
#include "reflex/polytope.hpp"
#include "reflex/toric.hpp"

// Wire formats. Rationals travel as strings "p/q" ("p" when q = 1); integer
// vectors as JSON integers. Output key order is fixed.
namespace reflex::io {

using Json = nlohmann::ordered_json;

/// A JSON integer when it fits in 64 bits, otherwise a decimal string.
Json to_json(const Integer& z);
Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(const Polytope& p);
/// Accepts "hrep", "vrep" or both (they must then agree); "dim" is optional.
Polytope polytope_from_json(const Json& j);

Json to_json(const QuasiPolynomial& q);
QuasiPolynomial quasi_polynomial_from_json(const Json& j);

Json to_json(const ToricDivisor& d);
ToricDivisor divisor_from_json(const Json& j);

Json to_json(const LatticePointSet& s);
Json to_json(const ClassificationReport& r);

struct FlagQuery {
  RootType type = RootType::A;
  int rank = 1;
  ParabolicChoice parabolic;
  std::optional<WeightVector> lambda;  // absent: use the anticanonical weight
};
Json to_json(const FlagQuery& q);
FlagQuery flag_query_from_json(const Json& j);

Json to_json(const InstanceEvidence& e);
Json to_json(const FuzzReport& r);

Json error_json(const Error& e);

}  // namespace reflex::io
