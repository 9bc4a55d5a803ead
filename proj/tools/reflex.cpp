// Command-line front end. Exit codes: 0 success, 1 domain error (error JSON on
// stderr), 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "reflex/classify.hpp"
#include "reflex/ehrhart.hpp"
#include "reflex/flag.hpp"
#include "reflex/fuzz.hpp"
#include "reflex/json_io.hpp"
#include "reflex/toric.hpp"

using namespace reflex;
using io::Json;

namespace {

struct Common {
  std::string in;
  std::string format = "json";
  std::optional<std::uint64_t> budget;

  Budget resolved_budget() const {
    if (budget) return Budget{.work = *budget};
    return Budget::from_env();
  }
  bool text() const { return format == "text"; }
};

void add_common(CLI::App* cmd, Common& c, bool input_required) {
  auto* in = cmd->add_option("--in", c.in, "input file, '-' for stdin, or inline JSON");
  if (input_required) in->required();
  cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--budget", c.budget, "enumeration budget (overrides REFLEX_BUDGET)")
      ->check(CLI::PositiveNumber);
}

Json read_input(const std::string& in) {
  std::string text;
  const auto first = in.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (in[first] == '{' || in[first] == '[')) {
    text = in;
  } else if (in == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream file(in);
    if (!file) throw Error(ErrorCode::InvalidInput, "cli", "cannot read input file '" + in + "'");
    text.assign(std::istreambuf_iterator<char>(file), {});
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::InvalidInput, "cli", std::string("malformed JSON: ") + e.what());
  }
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string vector_text(const IntegerVector& v) {
  std::string s = "(";
  for (Index i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s + ")";
}

std::string vector_text(const RationalVector& v) {
  std::string s = "(";
  for (Index i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + ")";
}

std::string polytope_text(const Polytope& p) {
  std::ostringstream out;
  out << "dimension " << p.dim() << "\n";
  out << "facets:\n";
  for (const auto& f : p.facets()) out << "  <x, " << vector_text(f.normal) << "> <= " << to_string(f.offset) << "\n";
  out << "vertices:\n";
  for (const auto& v : p.vertices()) out << "  " << vector_text(v) << "\n";
  return out.str();
}

std::string quasi_polynomial_text(const QuasiPolynomial& q) {
  std::ostringstream out;
  out << "period " << q.period() << "\n";
  if (q.period() == 1) {
    out << "L(n) = " << to_string(q.constituent(0)) << "\n";
  } else {
    for (std::size_t r = 0; r < q.period(); ++r)
      out << "n = " << r << " mod " << q.period() << ": " << to_string(q.constituent(r)) << "\n";
  }
  return out.str();
}

Json values_json(const std::vector<Integer>& values) {
  Json a = Json::array();
  for (const auto& v : values) a.push_back(io::to_json(v));
  return a;
}

std::string values_text(const std::vector<Integer>& values, long long first) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i)
    s += (i ? ", " : "") + std::string("L(") + std::to_string(first + static_cast<long long>(i)) + ")=" + values[i].str();
  return s;
}

void emit(const Common& c, const Json& j, const std::string& text) {
  if (c.text())
    std::cout << text;
  else
    std::cout << j.dump(2) << "\n";
}

// ---- subcommands ----

void run_classify(const Common& c) {
  const Polytope p = io::polytope_from_json(read_input(c.in));
  const ClassificationReport r = classify(p, c.resolved_budget());
  Json j = io::to_json(r);
  j["polytope"] = io::to_json(p);
  std::ostringstream t;
  t << "lattice: " << bool_text(r.is_lattice) << "\n"
    << "fano: " << bool_text(r.is_fano) << "\n"
    << "reflexive: " << bool_text(r.is_reflexive) << "\n"
    << "quasi-reflexive: " << bool_text(r.is_quasi_reflexive) << "\n"
    << "dual-fano: " << bool_text(r.is_dual_fano) << "\n"
    << "dual-integral: " << bool_text(r.is_dual_integral) << "\n"
    << "quasi-lattice: " << bool_text(r.is_quasi_lattice) << "\n"
    << "interior lattice points: " << r.interior_lattice_points.count << "\n";
  if (r.anchor) {
    t << "anchor: " << vector_text(*r.anchor) << "\n";
    t << "facet integers:";
    for (const auto& k : *r.facet_integers) t << " " << k.str();
    t << "\n";
  }
  emit(c, j, t.str());
}

void run_ehrhart(const Common& c, long long nmax) {
  const Json in = read_input(c.in);
  const bool is_qp = in.is_object() && in.contains("constituents") && !in.contains("polytope") &&
                     !in.contains("hrep") && !in.contains("vrep");
  std::optional<Polytope> p;
  QuasiPolynomial q;
  if (is_qp) {
    q = io::quasi_polynomial_from_json(in);
  } else {
    p = io::polytope_from_json(in);
    q = ehrhart_quasi_polynomial(*p, c.resolved_budget());
  }
  std::vector<Integer> values;
  for (long long n = 0; n <= nmax; ++n) {
    const Rational v = q(n);
    if (!is_integral(v)) throw Error(ErrorCode::InvalidInput, "cli", "quasi-polynomial is not integer-valued");
    values.push_back(numerator(v));
  }
  Json j = io::to_json(q);
  j["quasi_lattice"] = is_quasi_lattice(q);
  j["values"] = values_json(values);
  if (p) j["polytope"] = io::to_json(*p);
  emit(c, j, quasi_polynomial_text(q) + "quasi-lattice: " + bool_text(is_quasi_lattice(q)) + "\n" +
                 values_text(values, 0) + "\n");
}

void run_dual(const Common& c) {
  const Polytope d = polar_dual(io::polytope_from_json(read_input(c.in)));
  emit(c, io::to_json(d), polytope_text(d));
}

void run_count(const Common& c, long long n, bool interior, bool list) {
  const Polytope p = io::polytope_from_json(read_input(c.in));
  if (n < 0 || (interior && n < 1))
    throw Error(ErrorCode::InvalidInput, "cli", interior ? "--n must be at least 1" : "--n must be nonnegative");
  const Budget budget = c.resolved_budget();
  Json j;
  j["n"] = n;
  j["interior"] = interior;
  std::string text;
  if (list) {
    LatticePointSet s;
    if (n == 0) {
      // 0·P = {0}.
      s.points.push_back(IntegerVector::Zero(p.dim()));
      s.count = 1;
    } else {
      s = lattice_points(dilate(p, n), interior, budget);
    }
    j.update(io::to_json(s));
    text = "count " + std::to_string(s.count) + "\n";
    for (const auto& x : s.points) text += "  " + vector_text(x) + "\n";
  } else {
    const Integer k = interior ? count_interior(p, n, budget) : count(p, n, budget);
    j["count"] = io::to_json(k);
    text = "count " + k.str() + "\n";
  }
  j["polytope"] = io::to_json(p);
  emit(c, j, text);
}

void run_hibi(const Common& c, long long nmax) {
  const Polytope p = io::polytope_from_json(read_input(c.in));
  const Budget budget = c.resolved_budget();
  const QuasiPolynomial q = ehrhart_quasi_polynomial(p, budget);
  const bool symmetric = hibi_symmetry_check(p, q, nmax, budget);
  const DualIntegrality di = is_dual_integral(p, budget);
  std::vector<Integer> counts, interior;
  for (long long n = 0; n <= nmax; ++n) {
    counts.push_back(count(p, n, budget));
    interior.push_back(count_interior(p, n + 1, budget));
  }
  Json j;
  j["hibi_symmetric"] = symmetric;
  j["dual_integral"] = di.holds;
  j["counts"] = values_json(counts);
  j["interior_counts"] = values_json(interior);
  j["polytope"] = io::to_json(p);
  std::ostringstream t;
  t << "hibi symmetric: " << bool_text(symmetric) << "\n"
    << "dual-integral: " << bool_text(di.holds) << "\n"
    << "counts: " << values_text(counts, 0) << "\n"
    << "interior counts from n=1: ";
  for (std::size_t i = 0; i < interior.size(); ++i) t << (i ? ", " : "") << interior[i].str();
  t << "\n";
  emit(c, j, t.str());
}

void run_toric(const Common& c, long long nmax) {
  const Json in = read_input(c.in);
  Polytope p = [&] {
    if (in.is_object() && in.contains("divisor")) return polytope_from_divisor(io::divisor_from_json(in.at("divisor")));
    if (in.is_object() && in.contains("rays")) return polytope_from_divisor(io::divisor_from_json(in));
    return io::polytope_from_json(in);
  }();
  const Budget budget = c.resolved_budget();
  const ToricDivisor d = divisor_from_polytope(p);
  const ToricDivisor k = anticanonical_divisor(d.fan);
  std::vector<Integer> global, twist;
  for (long long n = 0; n <= nmax; ++n) global.push_back(euler_char_global(p, n, budget));
  for (long long n = 1; n <= nmax; ++n) twist.push_back(euler_char_canonical_twist(p, n, budget));
  Json j;
  j["divisor"] = io::to_json(d);
  j["weil"] = is_weil(d);
  j["anticanonical"] = io::to_json(k);
  j["euler_char_global"] = values_json(global);
  j["euler_char_canonical_twist"] = values_json(twist);
  j["polytope"] = io::to_json(p);
  std::ostringstream t;
  t << "rays and coefficients:\n";
  for (std::size_t i = 0; i < d.fan.rays.size(); ++i)
    t << "  " << vector_text(d.fan.rays[i]) << " : " << to_string(d.coefficients[i]) << "\n";
  t << "weil: " << bool_text(is_weil(d)) << "\n"
    << "chi(nD) for n=0..: ";
  for (std::size_t i = 0; i < global.size(); ++i) t << (i ? ", " : "") << global[i].str();
  t << "\nchi(nD + K) for n=1..: ";
  for (std::size_t i = 0; i < twist.size(); ++i) t << (i ? ", " : "") << twist[i].str();
  t << "\n";
  emit(c, j, t.str());
}

struct FlagArgs {
  std::string type;
  int rank = 0;
  std::vector<int> parabolic;
  std::vector<int> lambda;
};

void run_flag(const Common& c, const FlagArgs& a) {
  io::FlagQuery query;
  if (!c.in.empty()) {
    const Json in = read_input(c.in);
    query = io::flag_query_from_json(in.is_object() && in.contains("query") ? in.at("query") : in);
  } else {
    if (a.type.empty() || a.rank == 0 || a.parabolic.empty())
      throw CLI::RequiredError("flag needs --in or all of --type, --rank, --parabolic");
    query.type = parse_root_type(a.type);
    query.rank = a.rank;
    query.parabolic.excluded_simples = a.parabolic;
    if (!a.lambda.empty()) query.lambda = Eigen::Map<const WeightVector>(a.lambda.data(), static_cast<Index>(a.lambda.size()));
  }
  const RootSystem rs = build_root_system(query.type, query.rank);
  const WeightVector can = anticanonical_weight(rs, query.parabolic);
  const WeightVector lambda = query.lambda ? *query.lambda : can;
  if (lambda.size() != query.rank)
    throw Error(ErrorCode::DimensionMismatch, "flag", "lambda needs one coefficient per simple root");
  query.lambda = lambda;
  const QuasiPolynomial q = hilbert_polynomial(rs, query.parabolic, lambda);
  const int d = static_cast<int>(parabolic_positive_roots(rs, query.parabolic).size());
  const bool anticanonical = detect_anticanonical(rs, query.parabolic, lambda);

  Json can_json = Json::array();
  for (Index i = 0; i < can.size(); ++i) can_json.push_back(can[i]);
  Json j;
  j["query"] = io::to_json(query);
  j["dimension"] = d;
  j["polynomial"] = io::to_json(q);
  j["polynomial_text"] = to_string(q);
  j["value_at_minus_one"] = io::to_json(q(-1));
  j["anticanonical"] = anticanonical;
  j["symmetric"] = hilbert_symmetry_check(q, d, 5);
  j["anticanonical_weight"] = std::move(can_json);
  std::ostringstream t;
  t << "dimension: " << d << "\n"
    << "hilbert polynomial: " << to_string(q) << "\n"
    << "value at -1: " << to_string(q(-1)) << "\n"
    << "anticanonical: " << bool_text(anticanonical) << "\n"
    << "anticanonical weight:";
  for (Index i = 0; i < can.size(); ++i) t << " " << can[i];
  t << "\n";
  emit(c, j, t.str());
}

struct FuzzArgs {
  std::string conjecture;
  FuzzConfig cfg;
  std::string out;
};

void run_fuzz(const Common& c, FuzzArgs a) {
  if (!c.in.empty()) {
    // Replay a stored report: same conjecture and configuration.
    const Json in = read_input(c.in);
    if (!in.is_object() || !in.contains("conjecture") || !in.contains("config"))
      throw Error(ErrorCode::InvalidInput, "cli", "fuzz --in expects a fuzz report");
    const Json& cfg = in.at("config");
    a.conjecture = in.at("conjecture").get<std::string>();
    a.cfg.dim = cfg.at("dim").get<int>();
    a.cfg.samples = cfg.at("samples").get<std::size_t>();
    a.cfg.seed = cfg.at("seed").get<std::uint64_t>();
    a.cfg.max_coordinate = cfg.at("max_coordinate").get<int>();
    a.cfg.max_denominator = cfg.at("max_denominator").get<int>();
    a.cfg.budget.work = cfg.at("budget").get<std::uint64_t>();
  } else if (a.conjecture.empty()) {
    throw CLI::RequiredError("fuzz needs --conjecture or --in");
  } else {
    a.cfg.budget = c.resolved_budget();
  }
  if (c.budget) a.cfg.budget.work = *c.budget;
  const FuzzReport r = test_conjecture(parse_conjecture(a.conjecture), a.cfg);
  const Json j = io::to_json(r);
  if (!a.out.empty()) {
    std::ofstream file(a.out);
    if (!file) throw Error(ErrorCode::InvalidInput, "cli", "cannot write '" + a.out + "'");
    file << j.dump(2) << "\n";
  }
  std::ostringstream t;
  t << "conjecture: " << j["statement"].get<std::string>() << " (" << j["status"].get<std::string>() << ")\n"
    << "instances tested: " << r.instances_tested << "\n"
    << "hypothesis held: " << r.hypothesis_held << "\n"
    << "skipped: " << r.skipped.size() << "\n"
    << "counterexamples: " << r.counterexamples.size() << "\n"
    << "verdict: " << r.verdict() << "\n";
  emit(c, j, t.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for rational polytopes, Ehrhart quasi-polynomials and toric divisors", "reflex"};
  app.require_subcommand(1);

  Common common;
  long long nmax = 6, n = 1;
  bool interior = false, list = false;
  FlagArgs flag_args;
  FuzzArgs fuzz_args;

  auto* classify_cmd = app.add_subcommand("classify", "classify a polytope");
  add_common(classify_cmd, common, true);

  auto* ehrhart_cmd = app.add_subcommand("ehrhart", "Ehrhart quasi-polynomial of a polytope, or evaluate a given one");
  add_common(ehrhart_cmd, common, true);
  ehrhart_cmd->add_option("--nmax", nmax, "evaluate at n = 0..nmax")->check(CLI::NonNegativeNumber);

  auto* dual_cmd = app.add_subcommand("dual", "polar dual");
  add_common(dual_cmd, common, true);

  auto* count_cmd = app.add_subcommand("count", "lattice points of nP or of its interior");
  add_common(count_cmd, common, true);
  count_cmd->add_option("--n", n, "dilation factor");
  count_cmd->add_flag("--interior", interior, "count interior points only");
  count_cmd->add_flag("--points", list, "list the points");

  auto* hibi_cmd = app.add_subcommand("hibi", "Hibi symmetry L(n) = L_int(n+1)");
  add_common(hibi_cmd, common, true);
  hibi_cmd->add_option("--nmax", nmax, "check n = 0..nmax")->check(CLI::NonNegativeNumber);

  auto* toric_cmd = app.add_subcommand("toric", "divisor data of a polytope or polytope of a divisor");
  add_common(toric_cmd, common, true);
  toric_cmd->add_option("--nmax", nmax, "Euler characteristics for n up to nmax")->check(CLI::NonNegativeNumber);

  auto* flag_cmd = app.add_subcommand("flag", "Hilbert polynomial of a partial flag variety");
  add_common(flag_cmd, common, false);
  flag_cmd->add_option("--type", flag_args.type, "A, B, C, D or G2");
  flag_cmd->add_option("--rank", flag_args.rank)->check(CLI::PositiveNumber);
  flag_cmd->add_option("--parabolic", flag_args.parabolic, "excluded simple roots, 1-based")->delimiter(',');
  flag_cmd->add_option("--lambda", flag_args.lambda, "weight in fundamental coordinates")->delimiter(',');

  auto* fuzz_cmd = app.add_subcommand("fuzz", "random search for counterexamples to an open conjecture");
  add_common(fuzz_cmd, common, false);
  fuzz_cmd->add_option("--conjecture", fuzz_args.conjecture)->check(CLI::IsMember({"quasilattice", "dualfano"}));
  fuzz_cmd->add_option("--dim", fuzz_args.cfg.dim)->check(CLI::Range(1, 3));
  fuzz_cmd->add_option("--samples", fuzz_args.cfg.samples)->check(CLI::PositiveNumber);
  fuzz_cmd->add_option("--seed", fuzz_args.cfg.seed);
  fuzz_cmd->add_option("--max-coordinate", fuzz_args.cfg.max_coordinate)->check(CLI::PositiveNumber);
  fuzz_cmd->add_option("--max-denominator", fuzz_args.cfg.max_denominator)->check(CLI::PositiveNumber);
  fuzz_cmd->add_option("--threads", fuzz_args.cfg.threads, "worker threads, 0 for all cores");
  fuzz_cmd->add_option("--out", fuzz_args.out, "also write the report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*classify_cmd) run_classify(common);
    if (*ehrhart_cmd) run_ehrhart(common, nmax);
    if (*dual_cmd) run_dual(common);
    if (*count_cmd) run_count(common, n, interior, list);
    if (*hibi_cmd) run_hibi(common, nmax);
    if (*toric_cmd) run_toric(common, nmax);
    if (*flag_cmd) run_flag(common, flag_args);
    if (*fuzz_cmd) run_fuzz(common, fuzz_args);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n" << app.help();
    return 2;
  } catch (const Error& e) {
    std::cerr << io::error_json(e).dump() << "\n";
    return 1;
  }
  return 0;
}
