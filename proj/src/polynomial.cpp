#include "bdk/polynomial.hpp"

#include "bdk/errors.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace bdk {

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::x_power_minus_one(long n) {
    std::vector<Int> c(n + 1);
    c[0] = -1;
    c[n] = 1;
    return IntPolynomial(std::move(c));
}

Int IntPolynomial::evaluate(const Int& x) const {
    Int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Int& c = coeffs_[k];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Int a = abs(c);
        if (k == 0 || a != 1) os << a.str();
        if (k > 0) {
            os << "x";
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Int> c(std::max(a.coefficients().size(), b.coefficients().size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(static_cast<int>(i)) + b.coefficient(static_cast<int>(i));
    return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Int> c(std::max(a.coefficients().size(), b.coefficients().size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(static_cast<int>(i)) - b.coefficient(static_cast<int>(i));
    return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial();
    std::vector<Int> c(a.coefficients().size() + b.coefficients().size() - 1);
    for (std::size_t i = 0; i < a.coefficients().size(); ++i) {
        if (a.coefficients()[i] == 0) continue;
        for (std::size_t j = 0; j < b.coefficients().size(); ++j)
            c[i + j] += a.coefficients()[i] * b.coefficients()[j];
    }
    return IntPolynomial(std::move(c));
}

std::optional<IntPolynomial> try_divide(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw PreconditionViolated("try_divide: division by zero polynomial");
    if (a.is_zero()) return IntPolynomial();
    if (a.degree() < b.degree()) return std::nullopt;
    std::vector<Int> rem = a.coefficients();
    std::vector<Int> quot(a.degree() - b.degree() + 1);
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        Int& lead = rem[k + b.degree()];
        if (lead % b.leading() != 0) return std::nullopt;
        Int q = lead / b.leading();
        if (q != 0) {
            for (int i = 0; i <= b.degree(); ++i) rem[k + i] -= q * b.coefficients()[i];
        }
        quot[k] = std::move(q);
    }
    for (const Int& r : rem)
        if (r != 0) return std::nullopt;
    return IntPolynomial(std::move(quot));
}

bool divides(const IntPolynomial& divisor, const IntPolynomial& dividend) {
    return try_divide(dividend, divisor).has_value();
}

IntPolynomial char_poly(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw DimensionMismatch("char_poly: matrix not square");
    const int n = a.rows();
    std::vector<Int> c(n + 1);
    c[n] = 1;
    IntMatrix m = a;
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            // m <- a * (m + c_{n-k+1} * 1)
            IntMatrix shifted = m;
            for (int i = 0; i < n; ++i) shifted(i, i) += c[n - k + 1];
            m = a * shifted;
        }
        Int tr = 0;
        for (int i = 0; i < n; ++i) tr += m(i, i);
        c[n - k] = -tr / k; // exact
    }
    return IntPolynomial(std::move(c));
}

long euler_phi(long d) {
    long result = d;
    long m = d;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

IntPolynomial cyclotomic_poly(long d) {
    if (d < 1) throw PreconditionViolated("cyclotomic_poly: d must be >= 1");
    static std::map<long, IntPolynomial> cache;
    static std::mutex mutex;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(d);
        if (it != cache.end()) return it->second;
    }
    IntPolynomial result;
    if (d == 1) {
        result = IntPolynomial({-1, 1});
    } else {
        IntPolynomial quotient = IntPolynomial::x_power_minus_one(d);
        for (long e = 1; e < d; ++e) {
            if (d % e != 0) continue;
            auto q = try_divide(quotient, cyclotomic_poly(e));
            if (!q) throw InternalInconsistency("cyclotomic_poly: recursive division failed");
            quotient = std::move(*q);
        }
        result = std::move(quotient);
    }
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(d, std::move(result)).first->second;
}

} // namespace bdk
