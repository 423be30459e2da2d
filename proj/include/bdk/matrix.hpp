#pragma once

#include "bdk/integer.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace bdk {

/// Dense matrix over arbitrary-precision integers, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}
    IntMatrix(int rows, int cols, std::vector<Int> entries);

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Int& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool operator==(const IntMatrix& other) const = default;

    IntMatrix transpose() const;
    IntMatrix pow(long e) const;

    std::vector<Int> column(int j) const;
    std::vector<Int> apply(const std::vector<Int>& x) const; // M * x

    std::string to_string() const; // rows of space-separated integers

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> data_;
};

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// sum_{i=0}^{m-1} A^{i*l}, exact.
IntMatrix geometric_sum_power(const IntMatrix& a, long l, long m);

/// Exact determinant by fraction-free (Bareiss) elimination.
Int determinant(const IntMatrix& m);

/// Rank over the rationals, by fraction-free elimination. Independent of the
/// Smith normal form code path on purpose; the property suites compare the two.
int rank_fraction_free(const IntMatrix& m);

} // namespace bdk
