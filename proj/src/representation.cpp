#include "fibraid/representation.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

#include <Eigen/SVD>

namespace fibraid {

double BlockUnitary::unitarity_defect() const {
  const Matrix d = entries.adjoint() * entries - Matrix::Identity(dim(), dim());
  return Eigen::JacobiSVD<Matrix>(d).singularValues()(0);
}

double BlockUnitary::off_block_magnitude() const {
  double worst = 0.0;
  for (Eigen::Index r = 0; r < dim(); ++r)
    for (Eigen::Index c = 0; c < dim(); ++c) {
      bool same = false;
      for (const auto& b : blocks)
        if (b.contains(static_cast<std::size_t>(r)) && b.contains(static_cast<std::size_t>(c)))
          same = true;
      if (!same) worst = std::max(worst, std::abs(entries(r, c)));
    }
  return worst;
}

Matrix BlockUnitary::block_matrix(const ChargeBlock& b) const {
  const auto begin = static_cast<Eigen::Index>(b.begin);
  const auto size = static_cast<Eigen::Index>(b.size());
  return entries.block(begin, begin, size, size);
}

BlockUnitary generator(int n, int i) {
  if (n < 2 || i < 1 || i > n - 1)
    throw std::invalid_argument("generator: index " + std::to_string(i) +
                                " out of range for " + std::to_string(n) + " anyons");
  const auto basis = FusionBasis::enumerate(n);
  const auto dim = static_cast<Eigen::Index>(basis.dim());
  BlockUnitary g{Matrix::Zero(dim, dim), basis.blocks()};

  // charge(k) is the charge of anyons 1..k+1; charge(0) is the first anyon alone.
  auto charge = [](const FusionPath& p, int k) { return k == 0 ? QSpin::One : p.labels[k - 1]; };

  for (std::size_t col = 0; col < basis.dim(); ++col) {
    const auto& p = basis.paths()[col];
    if (i == 1) {
      g.entries(static_cast<Eigen::Index>(col), static_cast<Eigen::Index>(col)) =
          ModelConstants::r(p.labels[0]);
      continue;
    }
    // Anyons i, i+1 sit between charge(i-2) and charge(i); charge(i-1) is the only
    // label that changes. F-move to (left, (i i+1)_f), apply R_f, move back.
    const QSpin left = charge(p, i - 2);
    const QSpin right = charge(p, i);
    const QSpin mid = charge(p, i - 1);
    for (QSpin out : {QSpin::Zero, QSpin::One}) {
      Complex amp = 0.0;
      for (QSpin f : {QSpin::Zero, QSpin::One})
        amp += f_symbol(left, QSpin::One, QSpin::One, right, out, f) * ModelConstants::r(f) *
               f_symbol(left, QSpin::One, QSpin::One, right, mid, f);
      if (std::abs(amp) == 0.0) continue;
      FusionPath q = p;
      q.labels[i - 2] = out;
      const auto row = basis.index_of(q);
      if (!row) continue;
      g.entries(static_cast<Eigen::Index>(*row), static_cast<Eigen::Index>(col)) = amp;
    }
  }
  return g;
}

Representation::Representation(int n) : n_(n), basis_(FusionBasis::enumerate(n)) {
  for (int i = 1; i < n; ++i) {
    gens_.push_back(fibraid::generator(n, i));
    std::array<Matrix, 10> pw;
    pw[0] = Matrix::Identity(dim(), dim());
    for (int e = 1; e < 10; ++e) pw[e] = gens_.back().entries * pw[e - 1];
    powers_.push_back(std::move(pw));
  }
}

const BlockUnitary& Representation::generator(int i) const {
  if (i < 1 || i >= n_)
    throw std::invalid_argument("generator index " + std::to_string(i) + " out of range");
  return gens_[static_cast<std::size_t>(i - 1)];
}

const Matrix& Representation::power(int i, int e) const {
  if (i < 1 || i >= n_)
    throw std::invalid_argument("generator index " + std::to_string(i) + " out of range");
  const int r = ((e % 10) + 10) % 10;
  return powers_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(r)];
}

const Representation& representation(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<Representation>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<Representation>(n);
  return *slot;
}

}  // namespace fibraid
