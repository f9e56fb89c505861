#include "ffs/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "ffs/error.hpp"

namespace fqg {

std::vector<double> symmetric_eigenvalues(std::span<const double> matrix, std::size_t n) {
  if (matrix.size() != n * n) throw InvalidArgument("matrix size does not match n*n");
  if (n == 0) return {};
  Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> m(
      matrix.data(), static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  // Eigen 3.4's tridiagonal QR stalls on some 0/1 matrices with large
  // multiplicities; retried with Gershgorin-radius shifts.
  const double radius = m.cwiseAbs().rowwise().sum().maxCoeff();
  Eigen::MatrixXd a = m;
  for (double shift : {0.0, radius, -radius}) {
    if (shift != 0.0) a.diagonal() = m.diagonal().array() + shift;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) continue;
    std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    for (auto& v : out) v -= shift;
    return out;
  }
  throw ConsistencyError("symmetric eigensolver did not converge");
}

bool same_multiset(std::span<const double> a, std::span<const double> b, double tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > tol) return false;
  return true;
}

std::vector<std::pair<double, std::size_t>> group_values(std::span<const double> sorted, double tol) {
  std::vector<std::pair<double, std::size_t>> out;
  for (double v : sorted) {
    if (!out.empty() && std::abs(v - out.back().first) <= tol) {
      ++out.back().second;
    } else {
      out.emplace_back(v, 1);
    }
  }
  return out;
}

}  // namespace fqg
