#include "bdk/supernatural.hpp"

#include "bdk/errors.hpp"

#include <sstream>

namespace bdk {

SupernaturalNumber::SupernaturalNumber(const Int& n) {
    if (n < 1) throw PreconditionViolated("SupernaturalNumber: value must be >= 1");
    for (const auto& [p, e] : factorize(n)) exps_[p] = Exponent::fin(e);
}

SupernaturalNumber SupernaturalNumber::from_exponents(std::map<std::uint64_t, Exponent> exps) {
    SupernaturalNumber s;
    for (auto& [p, e] : exps) {
        if (!is_prime(p)) throw PreconditionViolated("supernatural: " + std::to_string(p) + " is not prime");
        if (e.infinite || e.value > 0) s.exps_.emplace(p, e);
        else if (e.value < 0) throw PreconditionViolated("supernatural: negative exponent");
    }
    return s;
}

Exponent SupernaturalNumber::exponent_of(std::uint64_t p) const {
    auto it = exps_.find(p);
    return it == exps_.end() ? Exponent::fin(0) : it->second;
}

std::string SupernaturalNumber::to_string() const {
    if (exps_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, e] : exps_) {
        if (!first) os << "*";
        os << p;
        if (e.infinite) os << "^inf";
        else if (e.value != 1) os << "^" << e.value;
        first = false;
    }
    return os.str();
}

void MultiplicativeSequence::validate() const {
    if (terms.empty()) throw ParseError("sequence: at least one term required");
    for (const Int& t : terms)
        if (t < 1) throw ParseError("sequence: terms must be >= 1");
    for (std::size_t i = 0; i + 1 < terms.size(); ++i)
        if (terms[i + 1] % terms[i] != 0) throw ParseError("sequence: each term must divide the next");
    if (tail_ratio && *tail_ratio < 2) throw ParseError("sequence: geometric tail ratio must be >= 2");
}

SupernaturalNumber to_supernatural(const MultiplicativeSequence& w) {
    w.validate();
    std::map<std::uint64_t, Exponent> exps;
    for (const auto& [p, e] : factorize(w.terms.back())) exps[p] = Exponent::fin(e);
    if (w.tail_ratio) {
        for (const auto& [p, e] : factorize(*w.tail_ratio)) exps[p] = Exponent::inf();
    }
    return SupernaturalNumber::from_exponents(std::move(exps));
}

bool divides(const SupernaturalNumber& s, const SupernaturalNumber& t) {
    for (const auto& [p, e] : s.exponents())
        if (!(e <= t.exponent_of(p))) return false;
    return true;
}

bool equals(const SupernaturalNumber& s, const SupernaturalNumber& t) {
    return divides(s, t) && divides(t, s);
}

Int gcd_with_integer(const Int& p, const SupernaturalNumber& s) {
    if (p < 1) throw PreconditionViolated("gcd_with_integer: argument must be >= 1");
    Int g = 1;
    for (const auto& [q, e] : factorize(p)) {
        const Exponent se = s.exponent_of(q);
        const long take = se.infinite ? e : std::min(e, se.value);
        for (long i = 0; i < take; ++i) g *= q;
    }
    return g;
}

bool divides_integer(const Int& n, const SupernaturalNumber& s) {
    if (n < 1) throw PreconditionViolated("divides_integer: argument must be >= 1");
    for (const auto& [p, e] : factorize(n))
        if (!(Exponent::fin(e) <= s.exponent_of(p))) return false;
    return true;
}

SupernaturalNumber scale(const SupernaturalNumber& s, const Int& num, const Int& den) {
    if (num < 1 || den < 1) throw PreconditionViolated("scale: num and den must be >= 1");
    std::map<std::uint64_t, Exponent> exps;
    for (const auto& [p, e] : s.exponents()) exps[p] = e;
    for (const auto& [p, e] : factorize(num)) {
        Exponent& cur = exps.try_emplace(p, Exponent::fin(0)).first->second;
        if (!cur.infinite) cur.value += e;
    }
    for (const auto& [p, e] : factorize(den)) {
        auto it = exps.find(p);
        Exponent cur = it == exps.end() ? Exponent::fin(0) : it->second;
        if (cur.infinite) continue; // infinity absorbs
        if (cur.value < e) throw NotDivisible("scale: denominator does not divide num * s");
        it->second.value -= e;
    }
    return SupernaturalNumber::from_exponents(std::move(exps));
}

namespace {

Int parse_positive_int(const std::string& tok, const char* what) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError(std::string("omega: bad ") + what + ": '" + tok + "'");
    Int v(tok);
    if (v < 1) throw ParseError(std::string("omega: ") + what + " must be >= 1");
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace

MultiplicativeSequence parse_sequence(const std::string& spec) {
    if (spec.rfind("seq:", 0) != 0) throw ParseError("omega: sequence spec must start with 'seq:'");
    MultiplicativeSequence w;
    const std::vector<std::string> parts = split(spec.substr(4), ',');
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const std::string& tok = parts[i];
        if (!tok.empty() && tok[0] == '*') {
            if (i + 1 != parts.size()) throw ParseError("omega: geometric tail '*m' must be last");
            w.tail_ratio = parse_positive_int(tok.substr(1), "tail ratio");
        } else {
            w.terms.push_back(parse_positive_int(tok, "sequence term"));
        }
    }
    w.validate();
    return w;
}

SupernaturalNumber parse_supernatural(const std::string& spec) {
    if (spec.empty()) throw ParseError("omega: empty spec");
    if (spec.rfind("seq:", 0) == 0) return to_supernatural(parse_sequence(spec));
    if (spec == "1") return SupernaturalNumber();
    std::map<std::uint64_t, Exponent> exps;
    for (const std::string& factor : split(spec, '*')) {
        const std::vector<std::string> parts = split(factor, '^');
        if (parts.size() > 2 || parts[0].empty()) throw ParseError("omega: bad factor '" + factor + "'");
        const Int base = parse_positive_int(parts[0], "base");
        if (base < 2) throw ParseError("omega: factor base must be >= 2");
        Exponent e = Exponent::fin(1);
        if (parts.size() == 2) {
            if (parts[1] == "inf") e = Exponent::inf();
            else e = Exponent::fin(parse_positive_int(parts[1], "exponent").convert_to<long>());
        }
        // composite bases factorize; repeated factors accumulate
        for (const auto& [p, k] : factorize(base)) {
            Exponent& cur = exps.try_emplace(p, Exponent::fin(0)).first->second;
            if (e.infinite) cur = Exponent::inf();
            else if (!cur.infinite) cur.value += k * e.value;
        }
    }
    return SupernaturalNumber::from_exponents(std::move(exps));
}

} // namespace bdk
