#pragma once

#include "bdk/integer.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bdk {

/// Exponent of a prime in a supernatural number: a natural number or infinity.
struct Exponent {
    long value = 0;      // ignored when infinite
    bool infinite = false;

    static Exponent inf() { return {0, true}; }
    static Exponent fin(long v) { return {v, false}; }

    bool operator==(const Exponent& other) const {
        return infinite == other.infinite && (infinite || value == other.value);
    }
    bool operator<=(const Exponent& other) const {
        if (other.infinite) return true;
        if (infinite) return false;
        return value <= other.value;
    }
};

/// Formal product of prime powers with exponents in N union {infinity}.
/// Canonical form stores no zero exponents.
class SupernaturalNumber {
public:
    SupernaturalNumber() = default; // the empty product, i.e. 1
    explicit SupernaturalNumber(const Int& n); // finite value, factorized

    static SupernaturalNumber from_exponents(std::map<std::uint64_t, Exponent> exps);

    const std::map<std::uint64_t, Exponent>& exponents() const { return exps_; }
    Exponent exponent_of(std::uint64_t p) const;
    bool is_one() const { return exps_.empty(); }

    bool operator==(const SupernaturalNumber& other) const { return exps_ == other.exps_; }

    /// Canonical printing: primes ascending, `p^e` with `e=inf` allowed,
    /// `*`-separated, exponent 1 elided; `1` for the empty product.
    std::string to_string() const;

private:
    std::map<std::uint64_t, Exponent> exps_;
};

/// Multiplicative sequence n_1 | n_2 | ..., either eventually constant at the
/// last listed term or continuing with a geometric tail of ratio >= 2.
struct MultiplicativeSequence {
    std::vector<Int> terms;        // nonempty, divisibility chain, all >= 1
    std::optional<Int> tail_ratio; // m >= 2: terms continue n_K * m^j

    void validate() const;
};

/// [omega]: for each prime, the supremum of its valuations along the sequence.
SupernaturalNumber to_supernatural(const MultiplicativeSequence& w);

bool divides(const SupernaturalNumber& s, const SupernaturalNumber& t);
bool equals(const SupernaturalNumber& s, const SupernaturalNumber& t);

/// gcd(P, s) = prod_p p^min(v_p(P), e_p(s)); finite since P is.
Int gcd_with_integer(const Int& p, const SupernaturalNumber& s);

/// n divides s, i.e. v_p(n) <= e_p(s) for all primes p.
bool divides_integer(const Int& n, const SupernaturalNumber& s);

/// (num * s) / den, exponentwise with infinity absorbing.
/// Throws NotDivisible when den does not divide num * s.
SupernaturalNumber scale(const SupernaturalNumber& s, const Int& num, const Int& den);

/// Grammar: `p^e` products (`2^inf*3^2*5`), or `seq:3,6,12` (eventually
/// constant), or `seq:3,6,12,*2` (geometric tail).
SupernaturalNumber parse_supernatural(const std::string& spec);
MultiplicativeSequence parse_sequence(const std::string& spec);

} // namespace bdk
