#include "reflex/fuzz.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <random>
#include <thread>

#include "reflex/ehrhart.hpp"
#include "reflex/toric.hpp"

namespace reflex {

std::string_view to_string(Conjecture c) {
  return c == Conjecture::QuasiLattice ? "quasilattice" : "dualfano";
}

Conjecture parse_conjecture(std::string_view name) {
  if (name == "quasilattice") return Conjecture::QuasiLattice;
  if (name == "dualfano") return Conjecture::DualFano;
  throw Error(ErrorCode::InvalidInput, "fuzz", "unknown conjecture '" + std::string(name) + "'");
}

void validate(const FuzzConfig& cfg) {
  if (cfg.dim < 1 || cfg.dim > 3) throw Error(ErrorCode::InvalidInput, "fuzz", "dimension must be 1, 2 or 3");
  if (cfg.samples == 0 || cfg.max_coordinate < 1 || cfg.max_denominator < 1 || cfg.budget.work == 0)
    throw Error(ErrorCode::InvalidInput, "fuzz", "fuzz bounds must be positive");
}

namespace {

constexpr int kMaxAttempts = 64;

// mt19937_64 and seed_seq are fully specified by the standard, and draws use
// plain rejection sampling, so streams are identical on every platform.
class Stream {
 public:
  Stream(std::uint64_t seed, std::uint64_t index, std::uint32_t tag) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32), tag};
    engine_.seed(seq);
  }

  long long uniform(long long lo, long long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t draw;
    do draw = engine_();
    while (draw >= limit);
    return lo + static_cast<long long>(draw % span);
  }

 private:
  std::mt19937_64 engine_;
};

enum StreamTag : std::uint32_t { kUniform = 1, kDualIntegral = 2, kIntegerOffset = 3 };

IntegerVector random_primitive(Stream& s, int dim, int reach) {
  while (true) {
    IntegerVector v(dim);
    for (int i = 0; i < dim; ++i) v[i] = s.uniform(-reach, reach);
    const Integer g = content(v);
    if (g == 0) continue;
    for (int i = 0; i < dim; ++i) v[i] /= g;
    return v;
  }
}

template <typename OffsetFn>
Polytope random_normal_form(const FuzzConfig& cfg, std::uint64_t index, std::uint32_t tag, OffsetFn offset) {
  validate(cfg);
  Stream s(cfg.seed, index, tag);
  const int reach = std::min(cfg.max_coordinate, 2);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const auto facets = s.uniform(cfg.dim + 1, 2 * cfg.dim + 2);
    std::vector<HalfSpace> hs;
    for (long long i = 0; i < facets; ++i) {
      IntegerVector normal = random_primitive(s, cfg.dim, reach);
      hs.push_back({normal, offset(s)});
    }
    RationalVector shift(cfg.dim);
    for (int i = 0; i < cfg.dim; ++i) shift[i] = Rational(s.uniform(-cfg.max_coordinate, cfg.max_coordinate));
    try {
      return translate(from_hrep(std::span<const HalfSpace>(hs), cfg.dim), shift);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::UnboundedInput) throw;
    }
  }
  throw Error(ErrorCode::GenerationExhausted, "fuzz", "no bounded polytope after retry cap");
}

}  // namespace

Polytope random_polytope(const FuzzConfig& cfg, std::uint64_t index) {
  validate(cfg);
  Stream s(cfg.seed, index, kUniform);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const auto n = s.uniform(cfg.dim + 1, 2 * cfg.dim + 2);
    std::vector<RationalVector> points;
    for (long long i = 0; i < n; ++i) {
      RationalVector p(cfg.dim);
      for (int k = 0; k < cfg.dim; ++k) {
        const long long den = s.uniform(1, cfg.max_denominator);
        const long long reach = static_cast<long long>(cfg.max_coordinate) * den;
        p[k] = Rational(s.uniform(-reach, reach), den);
      }
      points.push_back(std::move(p));
    }
    try {
      return from_vrep(points);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::LowerDimensional) throw;
    }
  }
  throw Error(ErrorCode::GenerationExhausted, "fuzz", "no full-dimensional hull after retry cap");
}

Polytope random_dual_integral_polytope(const FuzzConfig& cfg, std::uint64_t index) {
  return random_normal_form(cfg, index, kDualIntegral,
                            [](Stream& s) { return Rational(1, s.uniform(1, 3)); });
}

Polytope random_integer_offset_polytope(const FuzzConfig& cfg, std::uint64_t index) {
  const int top = cfg.max_coordinate;
  return random_normal_form(cfg, index, kIntegerOffset, [top](Stream& s) { return Rational(s.uniform(1, top)); });
}

InstanceEvidence evaluate_instance(Conjecture c, const Polytope& p, const Budget& budget) {
  InstanceEvidence e(p);
  e.is_lattice = is_lattice_polytope(p);
  e.is_weil = is_weil(divisor_from_polytope(p));
  const DualIntegrality di = is_dual_integral(p, budget);
  e.is_dual_integral = di.holds;
  e.facet_integers = di.facet_integers;
  e.is_dual_fano = is_dual_fano(p, budget);
  e.interior_points = lattice_points(p, true, budget).count;

  auto violated = [](const std::string& what) {
    throw Error(ErrorCode::InternalInconsistency, "fuzz", "proven implication violated: " + what);
  };
  if (e.is_dual_fano && !e.is_dual_integral) violated("dual-Fano without dual-integral");
  if (e.is_dual_integral && e.interior_points != 1) violated("dual-integral without a unique interior lattice point");
  if (e.is_lattice && !e.is_weil) violated("lattice polytope with non-Weil divisor");

  // The quasi-polynomial only matters inside the hypothesis class of 6.1-style runs.
  if (c == Conjecture::QuasiLattice || e.is_dual_integral) {
    e.quasi_polynomial = ehrhart_quasi_polynomial(p, budget);
    e.is_quasi_lattice = is_quasi_lattice(*e.quasi_polynomial);
    if (e.is_lattice && !*e.is_quasi_lattice) violated("lattice polytope with period > 1");
  }
  return e;
}

bool in_hypothesis_class(Conjecture c, const InstanceEvidence& e) {
  return c == Conjecture::QuasiLattice ? e.is_weil : e.is_dual_integral;
}

bool contradicts(Conjecture c, const InstanceEvidence& e) {
  if (c == Conjecture::QuasiLattice) return e.is_weil != e.is_quasi_lattice.value();
  if (!e.is_dual_integral) return false;
  return e.is_dual_fano != e.is_quasi_lattice.value();
}

FuzzReport test_conjecture(Conjecture c, const FuzzConfig& cfg) {
  validate(cfg);
  struct Slot {
    std::optional<InstanceEvidence> evidence;
    std::optional<SkippedInstance> skipped;
    std::exception_ptr fatal;
  };
  std::vector<Slot> slots(cfg.samples);
  std::atomic<std::size_t> next{0};

  auto work = [&] {
    for (std::size_t i = next++; i < cfg.samples; i = next++) {
      Slot& slot = slots[i];
      const bool targeted = i % 2 == 1;
      try {
        const Polytope p = !targeted                      ? random_polytope(cfg, i)
                           : c == Conjecture::DualFano ? random_dual_integral_polytope(cfg, i)
                                                          : random_integer_offset_polytope(cfg, i);
        InstanceEvidence e = evaluate_instance(c, p, cfg.budget);
        e.index = i;
        e.stream = !targeted ? "uniform" : c == Conjecture::DualFano ? "dual-integral" : "integer-offset";
        slot.evidence = std::move(e);
      } catch (const Error& err) {
        if (err.code() == ErrorCode::ScaleExceeded || err.code() == ErrorCode::GenerationExhausted)
          slot.skipped = SkippedInstance{i, std::string(err.name()), err.what()};
        else
          slot.fatal = std::current_exception();
      } catch (...) {
        slot.fatal = std::current_exception();
      }
    }
  };

  unsigned threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, cfg.samples));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  FuzzReport report;
  report.conjecture = c;
  report.config = cfg;
  for (auto& slot : slots) {
    if (slot.fatal) std::rethrow_exception(slot.fatal);
    if (slot.skipped) {
      report.skipped.push_back(*slot.skipped);
      continue;
    }
    ++report.instances_tested;
    if (in_hypothesis_class(c, *slot.evidence)) ++report.hypothesis_held;
    if (contradicts(c, *slot.evidence)) report.counterexamples.push_back(std::move(*slot.evidence));
  }
  return report;
}

}  // namespace reflex
