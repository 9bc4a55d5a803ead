#include "reflex/root_system.hpp"

#include <algorithm>
#include <set>

#include "reflex/errors.hpp"

namespace reflex {

std::string_view to_string(RootType t) {
  switch (t) {
    case RootType::A: return "A";
    case RootType::B: return "B";
    case RootType::C: return "C";
    case RootType::D: return "D";
    case RootType::G2: return "G2";
  }
  return "?";
}

RootType parse_root_type(std::string_view label) {
  if (label == "A") return RootType::A;
  if (label == "B") return RootType::B;
  if (label == "C") return RootType::C;
  if (label == "D") return RootType::D;
  if (label == "G2" || label == "G") return RootType::G2;
  throw Error(ErrorCode::UnsupportedType, "flag", "unsupported root system type '" + std::string(label) + "'");
}

namespace {

void require_rank(bool ok, RootType t, int rank) {
  if (!ok)
    throw Error(ErrorCode::UnsupportedType, "flag",
                "invalid rank " + std::to_string(rank) + " for type " + std::string(to_string(t)));
}

// Bourbaki numbering. Gram entries are scaled so that all of them are integers.
Eigen::MatrixXi gram_matrix(RootType type, int n) {
  Eigen::MatrixXi g = Eigen::MatrixXi::Zero(n, n);
  switch (type) {
    case RootType::A:
      require_rank(n >= 1, type, n);
      for (int i = 0; i < n; ++i) g(i, i) = 2;
      for (int i = 0; i + 1 < n; ++i) g(i, i + 1) = g(i + 1, i) = -1;
      break;
    case RootType::B:  // α_n short
      require_rank(n >= 2, type, n);
      for (int i = 0; i < n; ++i) g(i, i) = 2;
      g(n - 1, n - 1) = 1;
      for (int i = 0; i + 1 < n; ++i) g(i, i + 1) = g(i + 1, i) = -1;
      break;
    case RootType::C:  // α_n long
      require_rank(n >= 2, type, n);
      for (int i = 0; i < n; ++i) g(i, i) = 2;
      g(n - 1, n - 1) = 4;
      for (int i = 0; i + 2 < n; ++i) g(i, i + 1) = g(i + 1, i) = -1;
      g(n - 2, n - 1) = g(n - 1, n - 2) = -2;
      break;
    case RootType::D:
      require_rank(n >= 4, type, n);
      for (int i = 0; i < n; ++i) g(i, i) = 2;
      for (int i = 0; i + 2 < n; ++i) g(i, i + 1) = g(i + 1, i) = -1;
      g(n - 3, n - 1) = g(n - 1, n - 3) = -1;
      break;
    case RootType::G2:  // α_1 short
      require_rank(n == 2, type, n);
      g << 2, -3, -3, 6;
      break;
  }
  return g;
}

struct RootLess {
  bool operator()(const Eigen::VectorXi& a, const Eigen::VectorXi& b) const {
    return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
  }
};

}  // namespace

RootSystem::RootSystem(RootType type, int rank) : type_(type), rank_(rank), gram_(gram_matrix(type, rank)) {
  generate_positive_roots();
  Eigen::VectorXi twice_rho = Eigen::VectorXi::Zero(rank_);
  for (const auto& beta : positive_) twice_rho += to_fundamental(beta);
  rho_ = RationalVector(rank_);
  for (int i = 0; i < rank_; ++i) rho_[i] = Rational(twice_rho[i], 2);
}

int RootSystem::inner(const Eigen::VectorXi& a, const Eigen::VectorXi& b) const { return a.dot(gram_ * b); }

Eigen::VectorXi RootSystem::to_fundamental(const Eigen::VectorXi& root) const {
  Eigen::VectorXi out(rank_);
  for (int j = 0; j < rank_; ++j) out[j] = 2 * inner(root, Eigen::VectorXi::Unit(rank_, j)) / gram_(j, j);
  return out;
}

Rational RootSystem::pairing(const RationalVector& weight, const Eigen::VectorXi& root) const {
  // β∨ = Σ c_i (α_i,α_i)/(β,β) α_i∨ for β = Σ c_i α_i.
  const int length = inner(root, root);
  Rational sum = 0;
  for (int i = 0; i < rank_; ++i) sum += weight[i] * Rational(root[i] * gram_(i, i), length);
  return sum;
}

std::vector<Eigen::VectorXi> RootSystem::simple_roots() const {
  std::vector<Eigen::VectorXi> out;
  for (int i = 0; i < rank_; ++i) out.push_back(Eigen::VectorXi::Unit(rank_, i));
  return out;
}

void RootSystem::generate_positive_roots() {
  // Root strings: for a positive root β ≠ α_j with β - pα_j the bottom of its
  // α_j-string, β + α_j is a root iff p - ⟨β, α_j∨⟩ > 0.
  std::set<Eigen::VectorXi, RootLess> known;
  std::vector<Eigen::VectorXi> layer = simple_roots();
  for (const auto& a : layer) known.insert(a);
  while (!layer.empty()) {
    std::vector<Eigen::VectorXi> next;
    for (const auto& beta : layer) {
      for (int j = 0; j < rank_; ++j) {
        const Eigen::VectorXi alpha = Eigen::VectorXi::Unit(rank_, j);
        if (beta == alpha) continue;
        int p = 0;
        while (known.count(Eigen::VectorXi(beta - (p + 1) * alpha))) ++p;
        const int pairing_j = 2 * inner(beta, alpha) / gram_(j, j);
        if (p - pairing_j > 0) {
          Eigen::VectorXi up = beta + alpha;
          if (known.insert(up).second) next.push_back(up);
        }
      }
    }
    layer = std::move(next);
  }
  positive_.assign(known.begin(), known.end());
  std::stable_sort(positive_.begin(), positive_.end(),
                   [](const Eigen::VectorXi& a, const Eigen::VectorXi& b) { return a.sum() < b.sum(); });
}

RootSystem build_root_system(RootType type, int rank) { return RootSystem(type, rank); }

}  // namespace reflex
