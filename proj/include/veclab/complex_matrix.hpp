#ifndef VECLAB_COMPLEX_MATRIX_HPP
#define VECLAB_COMPLEX_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace veclab {

using cplx = std::complex<double>;

/// Dense complex matrix, row-major.
struct ComplexMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<cplx> data;

    ComplexMatrix() = default;
    ComplexMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

    cplx& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const cplx& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    static ComplexMatrix identity(std::size_t n);

    ComplexMatrix dagger() const;
    ComplexMatrix operator*(const ComplexMatrix& rhs) const;
    ComplexMatrix operator+(const ComplexMatrix& rhs) const;
    ComplexMatrix operator-(const ComplexMatrix& rhs) const;
    ComplexMatrix& operator*=(cplx s);

    double frobenius_norm() const;
    bool all_finite() const;
    bool is_hermitian(double tol) const;
    cplx trace() const;
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Tr(a^dag b)
cplx hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace veclab

#endif
