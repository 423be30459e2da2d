#include "bdk/integer.hpp"

#include "bdk/errors.hpp"

namespace bdk {

Int content(const std::vector<Int>& x) {
    Int g = 0;
    for (const Int& v : x) g = gcd(g, v);
    return abs(g);
}

long valuation(Int n, const Int& p) {
    long v = 0;
    while (n != 0 && n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This base set is a known deterministic witness set for n < 2^64.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::vector<std::pair<std::uint64_t, long>> factorize(const Int& n) {
    if (n < 1) throw PreconditionViolated("factorize: argument must be >= 1");
    std::vector<std::pair<std::uint64_t, long>> out;
    Int m = n;
    for (Int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            long e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            out.emplace_back(p.convert_to<std::uint64_t>(), e);
        }
    }
    if (m > 1) {
        if (m > Int(UINT64_MAX)) throw PreconditionViolated("factorize: prime factor exceeds 64 bits");
        out.emplace_back(m.convert_to<std::uint64_t>(), 1);
    }
    return out;
}

long long gcd_ll(long long a, long long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace bdk
