#include "veclab/complex_matrix.hpp"

#include <cmath>
#include <stdexcept>

#include "veclab/errors.hpp"

namespace veclab {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::dagger() const {
    ComplexMatrix out(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) out.at(j, i) = std::conj(at(i, j));
    return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
    if (cols != rhs.rows) throw InvalidInputError("matrix product: dimension mismatch");
    ComplexMatrix out(rows, rhs.cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t k = 0; k < cols; ++k) {
            cplx aik = at(i, k);
            if (aik == cplx{}) continue;
            const cplx* brow = &rhs.data[k * rhs.cols];
            cplx* orow = &out.data[i * rhs.cols];
            for (std::size_t j = 0; j < rhs.cols; ++j) orow[j] += aik * brow[j];
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& rhs) const {
    if (rows != rhs.rows || cols != rhs.cols) throw InvalidInputError("matrix sum: shape mismatch");
    ComplexMatrix out(rows, cols);
    for (std::size_t i = 0; i < data.size(); ++i) out.data[i] = data[i] + rhs.data[i];
    return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& rhs) const {
    if (rows != rhs.rows || cols != rhs.cols)
        throw InvalidInputError("matrix difference: shape mismatch");
    ComplexMatrix out(rows, cols);
    for (std::size_t i = 0; i < data.size(); ++i) out.data[i] = data[i] - rhs.data[i];
    return out;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
    for (auto& v : data) v *= s;
    return *this;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0;
    for (const auto& v : data) s += std::norm(v);
    return std::sqrt(s);
}

bool ComplexMatrix::all_finite() const {
    for (const auto& v : data)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

bool ComplexMatrix::is_hermitian(double tol) const {
    if (rows != cols) return false;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = i; j < cols; ++j)
            if (std::abs(at(i, j) - std::conj(at(j, i))) > tol) return false;
    return true;
}

cplx ComplexMatrix::trace() const {
    cplx t{};
    for (std::size_t i = 0; i < rows && i < cols; ++i) t += at(i, i);
    return t;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows * b.rows, a.cols * b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) {
            cplx aij = a.at(i, j);
            if (aij == cplx{}) continue;
            for (std::size_t k = 0; k < b.rows; ++k)
                for (std::size_t l = 0; l < b.cols; ++l)
                    out.at(i * b.rows + k, j * b.cols + l) = aij * b.at(k, l);
        }
    return out;
}

cplx hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw InvalidInputError("hs_inner: shape mismatch");
    cplx s{};
    for (std::size_t i = 0; i < a.data.size(); ++i) s += std::conj(a.data[i]) * b.data[i];
    return s;
}

}  // namespace veclab
