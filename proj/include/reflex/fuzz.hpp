#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "reflex/classify.hpp"
#include "reflex/polynomial.hpp"
#include "reflex/polytope.hpp"

namespace reflex {

enum class Conjecture {
  QuasiLattice,  // D_P is Weil  ⟺  P is quasi-lattice
  DualFano,      // dual-Fano    ⟺  dual-integral and quasi-lattice
};

std::string_view to_string(Conjecture c);
Conjecture parse_conjecture(std::string_view name);

struct FuzzConfig {
  int dim = 2;                 // 1..3
  std::size_t samples = 100;
  std::uint64_t seed = 42;
  int max_coordinate = 3;
  int max_denominator = 12;
  Budget budget;
  unsigned threads = 0;        // 0: hardware concurrency
};

void validate(const FuzzConfig& cfg);

/// Hull of d+1 … 2d+2 random rational points; deterministic in (seed, index).
Polytope random_polytope(const FuzzConfig& cfg, std::uint64_t index);

/// anchor + {⟨x,u_ρ⟩ ≤ 1/k_ρ} with random primitive normals and k_ρ ∈ {1,2,3}.
Polytope random_dual_integral_polytope(const FuzzConfig& cfg, std::uint64_t index);

/// anchor + {⟨x,u_ρ⟩ ≤ m_ρ} with random primitive normals and positive integers m_ρ.
Polytope random_integer_offset_polytope(const FuzzConfig& cfg, std::uint64_t index);

/// Everything measured about one instance.
struct InstanceEvidence {
  explicit InstanceEvidence(Polytope p) : polytope(std::move(p)) {}

  std::uint64_t index = 0;
  std::string stream;  // "uniform" or the targeted constructor's name
  Polytope polytope;
  bool is_lattice = false;
  bool is_weil = false;
  bool is_dual_integral = false;
  bool is_dual_fano = false;
  std::size_t interior_points = 0;
  std::optional<bool> is_quasi_lattice;
  std::optional<QuasiPolynomial> quasi_polynomial;
  std::optional<std::vector<Integer>> facet_integers;
};

struct SkippedInstance {
  std::uint64_t index = 0;
  std::string error;
  std::string message;
};

struct FuzzReport {
  Conjecture conjecture = Conjecture::QuasiLattice;
  FuzzConfig config;
  std::size_t instances_tested = 0;
  std::size_t hypothesis_held = 0;
  std::vector<InstanceEvidence> counterexamples;
  std::vector<SkippedInstance> skipped;

  std::string verdict() const { return counterexamples.empty() ? "no counterexample" : "counterexample found"; }
};

/// Measures one polytope against a conjecture. Violations of proven
/// implications throw InternalInconsistency.
InstanceEvidence evaluate_instance(Conjecture c, const Polytope& p, const Budget& budget);

/// Does the evidence contradict the conjecture? Requires is_quasi_lattice.
bool contradicts(Conjecture c, const InstanceEvidence& e);
bool in_hypothesis_class(Conjecture c, const InstanceEvidence& e);

FuzzReport test_conjecture(Conjecture c, const FuzzConfig& cfg);
inline FuzzReport test_conjecture_quasilattice(const FuzzConfig& cfg) {
  return test_conjecture(Conjecture::QuasiLattice, cfg);
}
inline FuzzReport test_conjecture_dualfano(const FuzzConfig& cfg) { return test_conjecture(Conjecture::DualFano, cfg); }

}  // namespace reflex
