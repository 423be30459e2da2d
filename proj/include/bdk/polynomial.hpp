#pragma once

#include "bdk/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bdk {

/// Integer polynomial, coefficients ascending by degree. The zero polynomial
/// has an empty coefficient vector.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> coeffs);

    static IntPolynomial x_power_minus_one(long n); // x^n - 1

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Int>& coefficients() const { return coeffs_; }
    const Int& leading() const { return coeffs_.back(); }
    Int coefficient(int k) const { return k < static_cast<int>(coeffs_.size()) ? coeffs_[k] : Int(0); }

    Int evaluate(const Int& x) const;

    bool operator==(const IntPolynomial& other) const = default;

    std::string to_string() const;

private:
    std::vector<Int> coeffs_;
};

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

/// Quotient when b divides a exactly over the integers, nullopt otherwise.
std::optional<IntPolynomial> try_divide(const IntPolynomial& a, const IntPolynomial& b);

bool divides(const IntPolynomial& divisor, const IntPolynomial& dividend);

/// Monic characteristic polynomial det(x*1 - a), by the fraction-free
/// Faddeev-LeVerrier recursion (every division is exact).
IntPolynomial char_poly(const IntMatrix& a);

/// d-th cyclotomic polynomial, by recursive exact division of x^d - 1.
IntPolynomial cyclotomic_poly(long d);

long euler_phi(long d);

} // namespace bdk
