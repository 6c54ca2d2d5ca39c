#ifndef VECLAB_DENSE_LINALG_HPP
#define VECLAB_DENSE_LINALG_HPP

#include <vector>

#include "veclab/complex_matrix.hpp"

namespace veclab {

/// Thin SVD a = left * diag(singular_values) * right_adjoint.
/// left has orthonormal columns, right_adjoint orthonormal rows,
/// singular values nonincreasing.
struct SvdResult {
    ComplexMatrix left;                  // rows x k
    std::vector<double> singular_values; // k = min(rows, cols)
    ComplexMatrix right_adjoint;         // k x cols
};

SvdResult svd(const ComplexMatrix& a);

/// Singular values only (nonincreasing). Much cheaper than svd() at large sizes.
std::vector<double> svd_values(const ComplexMatrix& a);

/// Eigenvalues of a Hermitian matrix, ascending.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a);

/// Number of singular values treated as nonzero: s[i] > rel_cut * s[0].
std::size_t singular_rank(const std::vector<double>& s, double rel_cut = 1e-12);

}  // namespace veclab

#endif
