#include "reflex/json_io.hpp"

#include <limits>

namespace reflex::io {

Json to_json(const Integer& z) {
  if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max())
    return Json(z.convert_to<std::int64_t>());
  return Json(z.str());
}

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, "io", what); }

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const Rational q = parse_rational(j.get<std::string>());
    if (!is_integral(q)) bad("expected an integer, got " + j.dump());
    return numerator(q);
  }
  bad("expected an integer, got " + j.dump());
}

Json to_json(const IntegerVector& v) {
  Json a = Json::array();
  for (Index i = 0; i < v.size(); ++i) a.push_back(io::to_json(v[i]));
  return a;
}

Json to_json(const RationalVector& v) {
  Json a = Json::array();
  for (Index i = 0; i < v.size(); ++i) a.push_back(io::to_json(v[i]));
  return a;
}

RationalVector rational_vector_from_json(const Json& j) {
  if (!j.is_array()) bad("expected an array of rationals, got " + j.dump());
  RationalVector v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<Index>(i)] = rational_from_json(j[i]);
  return v;
}

IntegerVector integer_vector_from_json(const Json& j) {
  if (!j.is_array()) bad("expected an array of integers, got " + j.dump());
  IntegerVector v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<Index>(i)] = integer_from_json(j[i]);
  return v;
}

Json to_json(const std::vector<Integer>& v) {
  Json a = Json::array();
  for (const auto& z : v) a.push_back(io::to_json(z));
  return a;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

Json to_json(const Rational& q) { return Json(to_string(q)); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  bad("expected a rational string \"p/q\", got " + j.dump());
}

Json to_json(const Polytope& p) {
  Json hrep = Json::array();
  for (const auto& f : p.facets()) {
    Json h;
    h["normal"] = to_json(f.normal);
    h["offset"] = to_json(f.offset);
    hrep.push_back(std::move(h));
  }
  Json vrep = Json::array();
  for (const auto& v : p.vertices()) vrep.push_back(to_json(v));
  Json j;
  j["dim"] = p.dim();
  j["hrep"] = std::move(hrep);
  j["vrep"] = std::move(vrep);
  return j;
}

Polytope polytope_from_json(const Json& j) {
  if (!j.is_object()) bad("polytope must be a JSON object");
  if (j.contains("polytope")) return polytope_from_json(j.at("polytope"));
  const bool has_h = j.contains("hrep");
  const bool has_v = j.contains("vrep");
  if (!has_h && !has_v) bad("polytope needs 'hrep' or 'vrep'");

  std::optional<Index> dim;
  if (j.contains("dim")) {
    if (!j.at("dim").is_number_integer() || j.at("dim").get<std::int64_t>() < 1) bad("'dim' must be a positive integer");
    dim = j.at("dim").get<Index>();
  }

  std::optional<Polytope> from_v;
  if (has_v) {
    std::vector<RationalVector> points;
    for (const auto& v : field(j, "vrep")) points.push_back(rational_vector_from_json(v));
    if (dim)
      for (const auto& v : points)
        if (v.size() != *dim) throw Error(ErrorCode::DimensionMismatch, "io", "vertex length differs from 'dim'");
    from_v = from_vrep(points);
  }
  if (!has_h) return *from_v;

  std::vector<Constraint> cs;
  for (const auto& h : field(j, "hrep")) cs.push_back({rational_vector_from_json(field(h, "normal")),
                                                       rational_from_json(field(h, "offset"))});
  if (!dim) {
    if (cs.empty()) bad("empty 'hrep' needs 'dim'");
    dim = cs.front().normal.size();
  }
  Polytope p = from_hrep(std::span<const Constraint>(cs), *dim);
  if (from_v && !(*from_v == p)) bad("'hrep' and 'vrep' describe different polytopes");
  return p;
}

Json to_json(const QuasiPolynomial& q) {
  Json constituents = Json::array();
  for (const auto& c : q.constituents()) {
    Json coeffs = Json::array();
    for (const auto& a : c.coefficients()) coeffs.push_back(to_json(a));
    constituents.push_back(std::move(coeffs));
  }
  Json j;
  j["period"] = q.period();
  j["constituents"] = std::move(constituents);
  return j;
}

QuasiPolynomial quasi_polynomial_from_json(const Json& j) {
  const Json& cs = field(j, "constituents");
  if (!cs.is_array() || cs.empty()) bad("'constituents' must be a nonempty array");
  std::vector<Polynomial> polys;
  for (const auto& c : cs) {
    std::vector<Rational> coeffs;
    for (const auto& a : c) coeffs.push_back(rational_from_json(a));
    polys.emplace_back(std::move(coeffs));
  }
  if (j.contains("period") && j.at("period") != Json(polys.size()))
    bad("'period' does not match the number of constituents");
  return QuasiPolynomial(std::move(polys));
}

Json to_json(const ToricDivisor& d) {
  Json rays = Json::array();
  for (const auto& r : d.fan.rays) rays.push_back(to_json(r));
  Json coeffs = Json::array();
  for (const auto& a : d.coefficients) coeffs.push_back(to_json(a));
  Json j;
  j["rays"] = std::move(rays);
  j["coefficients"] = std::move(coeffs);
  return j;
}

ToricDivisor divisor_from_json(const Json& j) {
  ToricDivisor d;
  for (const auto& r : field(j, "rays")) d.fan.rays.push_back(integer_vector_from_json(r));
  for (const auto& a : field(j, "coefficients")) d.coefficients.push_back(rational_from_json(a));
  if (d.fan.rays.size() != d.coefficients.size()) bad("divisor needs one coefficient per ray");
  return d;
}

Json to_json(const LatticePointSet& s) {
  Json points = Json::array();
  for (const auto& p : s.points) points.push_back(to_json(p));
  Json j;
  j["count"] = s.count;
  j["points"] = std::move(points);
  return j;
}

Json to_json(const ClassificationReport& r) {
  Json j;
  j["is_lattice"] = r.is_lattice;
  j["is_fano"] = r.is_fano;
  j["is_reflexive"] = r.is_reflexive;
  j["is_quasi_reflexive"] = r.is_quasi_reflexive;
  j["is_dual_fano"] = r.is_dual_fano;
  j["is_dual_integral"] = r.is_dual_integral;
  j["is_quasi_lattice"] = r.is_quasi_lattice;
  j["interior_lattice_points"] = to_json(r.interior_lattice_points);
  j["anchor"] = r.anchor ? to_json(*r.anchor) : Json(nullptr);
  j["facet_integers"] = r.facet_integers ? to_json(*r.facet_integers) : Json(nullptr);
  return j;
}

Json to_json(const FlagQuery& q) {
  Json j;
  j["type"] = std::string(to_string(q.type));
  j["rank"] = q.rank;
  j["excluded_simples"] = q.parabolic.excluded_simples;
  if (q.lambda) j["lambda"] = std::vector<int>(q.lambda->data(), q.lambda->data() + q.lambda->size());
  return j;
}

FlagQuery flag_query_from_json(const Json& j) {
  FlagQuery q;
  const Json& type = field(j, "type");
  if (!type.is_string()) bad("'type' must be a string");
  q.type = parse_root_type(type.get<std::string>());
  const Json& rank = field(j, "rank");
  if (!rank.is_number_integer()) bad("'rank' must be an integer");
  q.rank = rank.get<int>();
  for (const auto& i : field(j, "excluded_simples")) {
    if (!i.is_number_integer()) bad("'excluded_simples' must hold integers");
    q.parabolic.excluded_simples.push_back(i.get<int>());
  }
  if (j.contains("lambda") && !j.at("lambda").is_null()) {
    const Json& l = j.at("lambda");
    WeightVector w(static_cast<Index>(l.size()));
    for (std::size_t i = 0; i < l.size(); ++i) {
      if (!l[i].is_number_integer()) bad("'lambda' must hold integers");
      w[static_cast<Index>(i)] = l[i].get<int>();
    }
    q.lambda = w;
  }
  return q;
}

Json to_json(const InstanceEvidence& e) {
  Json offsets = Json::array();
  for (const auto& f : e.polytope.facets()) offsets.push_back(to_json(f.offset));
  Json j;
  j["index"] = e.index;
  j["stream"] = e.stream;
  j["polytope"] = to_json(e.polytope);
  j["offsets"] = std::move(offsets);
  j["is_lattice"] = e.is_lattice;
  j["is_weil"] = e.is_weil;
  j["is_dual_integral"] = e.is_dual_integral;
  j["is_dual_fano"] = e.is_dual_fano;
  j["facet_integers"] = e.facet_integers ? to_json(*e.facet_integers) : Json(nullptr);
  j["is_quasi_lattice"] = e.is_quasi_lattice ? Json(*e.is_quasi_lattice) : Json(nullptr);
  j["quasi_polynomial"] = e.quasi_polynomial ? to_json(*e.quasi_polynomial) : Json(nullptr);
  return j;
}

Json to_json(const FuzzReport& r) {
  Json config;
  config["dim"] = r.config.dim;
  config["samples"] = r.config.samples;
  config["seed"] = r.config.seed;
  config["max_coordinate"] = r.config.max_coordinate;
  config["max_denominator"] = r.config.max_denominator;
  config["budget"] = r.config.budget.work;

  Json skipped = Json::array();
  for (const auto& s : r.skipped) {
    Json k;
    k["index"] = s.index;
    k["error"] = s.error;
    k["message"] = s.message;
    skipped.push_back(std::move(k));
  }
  Json counterexamples = Json::array();
  for (const auto& e : r.counterexamples) counterexamples.push_back(to_json(e));

  Json j;
  j["conjecture"] = std::string(to_string(r.conjecture));
  j["statement"] = r.conjecture == Conjecture::QuasiLattice
                       ? "D_P is a Weil divisor if and only if P is quasi-lattice"
                       : "P is dual-Fano if and only if P is dual-integral and quasi-lattice";
  j["status"] = "open conjecture; results are evidence only";
  j["config"] = std::move(config);
  j["instances_tested"] = r.instances_tested;
  j["hypothesis_held"] = r.hypothesis_held;
  j["skipped"] = std::move(skipped);
  j["counterexamples"] = std::move(counterexamples);
  j["verdict"] = r.verdict();
  return j;
}

Json error_json(const Error& e) {
  Json j;
  j["error"] = std::string(e.name());
  j["module"] = e.module();
  j["message"] = e.what();
  return j;
}

}  // namespace reflex::io
