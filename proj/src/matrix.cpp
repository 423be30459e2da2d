#include "bdk/matrix.hpp"

#include "bdk/errors.hpp"

#include <ostream>
#include <sstream>
#include <utility>

namespace bdk {

IntMatrix::IntMatrix(int rows, int cols, std::vector<Int> entries) : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != static_cast<std::size_t>(rows) * cols)
        throw DimensionMismatch("IntMatrix: entry count does not match dimensions");
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::pow(long e) const {
    if (rows_ != cols_) throw DimensionMismatch("IntMatrix::pow: matrix not square");
    if (e < 0) throw PreconditionViolated("IntMatrix::pow: negative exponent");
    IntMatrix result = identity(rows_);
    IntMatrix base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

std::vector<Int> IntMatrix::column(int j) const {
    std::vector<Int> c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& x) const {
    if (static_cast<int>(x.size()) != cols_) throw DimensionMismatch("IntMatrix::apply: size mismatch");
    std::vector<Int> y(rows_);
    for (int i = 0; i < rows_; ++i) {
        Int acc = 0;
        for (int j = 0; j < cols_; ++j)
            if ((*this)(i, j) != 0) acc += (*this)(i, j) * x[j];
        y[i] = std::move(acc);
    }
    return y;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix +: shape mismatch");
    IntMatrix c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
    return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix -: shape mismatch");
    IntMatrix c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
    return c;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("matrix *: shape mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const Int& aik = a(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols(); ++j) {
                if (b(k, j) != 0) c(i, j) += aik * b(k, j);
            }
        }
    }
    return c;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) os << ' ';
            os << m(i, j);
        }
        os << '\n';
    }
    return os;
}

IntMatrix geometric_sum_power(const IntMatrix& a, long l, long m) {
    if (a.rows() != a.cols()) throw DimensionMismatch("geometric_sum_power: matrix not square");
    if (l < 1 || m < 1) throw PreconditionViolated("geometric_sum_power: l and m must be positive");
    const IntMatrix step = a.pow(l);
    IntMatrix sum = IntMatrix::identity(a.rows());
    IntMatrix term = IntMatrix::identity(a.rows());
    for (long i = 1; i < m; ++i) {
        term = term * step;
        sum = sum + term;
    }
    return sum;
}

namespace {

// Fraction-free LU sweep shared by determinant and rank. Returns the number
// of pivots; when det != nullptr the matrix must be square and *det receives
// the exact determinant.
int bareiss_sweep(IntMatrix work, Int* det) {
    const int rows = work.rows();
    const int cols = work.cols();
    Int prev = 1;
    int sign = 1;
    int pivots = 0;
    for (int t = 0; t < rows && pivots < cols; ++t) {
        int pr = -1, pc = -1;
        for (int j = pivots; j < cols && pr < 0; ++j)
            for (int i = t; i < rows; ++i)
                if (work(i, j) != 0) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr < 0) break;
        if (pr != t) {
            for (int j = 0; j < cols; ++j) std::swap(work(t, j), work(pr, j));
            sign = -sign;
        }
        if (pc != pivots) {
            for (int i = 0; i < rows; ++i) std::swap(work(i, pivots), work(i, pc));
            sign = -sign;
        }
        for (int i = t + 1; i < rows; ++i) {
            for (int j = pivots + 1; j < cols; ++j)
                work(i, j) = (work(t, pivots) * work(i, j) - work(i, pivots) * work(t, j)) / prev;
            work(i, pivots) = 0;
        }
        prev = work(t, pivots);
        ++pivots;
    }
    if (det) {
        if (pivots < rows)
            *det = 0;
        else
            *det = sign > 0 ? prev : -prev;
    }
    return pivots;
}

} // namespace

Int determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("determinant: matrix not square");
    if (m.rows() == 0) return 1;
    Int det;
    bareiss_sweep(m, &det);
    return det;
}

int rank_fraction_free(const IntMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return bareiss_sweep(m, nullptr);
}

} // namespace bdk
