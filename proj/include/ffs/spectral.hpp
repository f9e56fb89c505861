#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace fqg {

/// Eigenvalues (ascending) of a dense symmetric n x n matrix stored row-major.
std::vector<double> symmetric_eigenvalues(std::span<const double> matrix, std::size_t n);

/// Elementwise comparison of two sorted multisets.
bool same_multiset(std::span<const double> a, std::span<const double> b, double tol);

/// Groups a sorted list into (value, multiplicity) runs; values closer than tol merge.
std::vector<std::pair<double, std::size_t>> group_values(std::span<const double> sorted, double tol);

}  // namespace fqg
