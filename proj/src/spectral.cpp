#include "bdk/spectral.hpp"

#include "bdk/errors.hpp"

#include <sstream>

namespace bdk {

std::set<long> unity_eigenvalue_orders(const IntMatrix& a) {
    const long n = a.rows();
    const IntPolynomial chi = char_poly(a);
    std::set<long> orders;
    for (long d = 1; d <= 2 * n * n; ++d) {
        if (euler_phi(d) > n) continue;
        if (divides(cyclotomic_poly(d), chi)) orders.insert(d);
    }
    return orders;
}

std::string HypothesisReport::failure_reason() const {
    if (!strongly_connected) return "graph is not strongly connected";
    if (!has_eigenvalue_one) return "1 is not an eigenvalue of the vertex matrix";
    if (!gate_passed) return "spectrum contains a root of unity whose order does not divide the period";
    return "";
}

std::string HypothesisReport::to_string() const {
    std::ostringstream os;
    os << "strongly_connected: " << (strongly_connected ? "true" : "false") << "\n";
    if (period) os << "period: " << *period << "\n";
    os << "unity_orders:";
    if (unity_orders.empty()) os << " none";
    for (long d : unity_orders) os << " " << d;
    os << "\n";
    os << "has_eigenvalue_one: " << (has_eigenvalue_one ? "true" : "false") << "\n";
    os << "gate_passed: " << (gate_passed ? "true" : "false") << "\n";
    return os.str();
}

HypothesisReport hypothesis_gate(const DirectedGraph& g) {
    HypothesisReport r;
    const IntMatrix a = vertex_matrix(g);
    r.strongly_connected = is_strongly_connected(g);
    r.unity_orders = unity_eigenvalue_orders(a);
    r.has_eigenvalue_one = determinant(IntMatrix::identity(a.rows()) - a) == 0;
    if (r.strongly_connected) {
        r.period = period(g);
        bool orders_ok = true;
        for (long d : r.unity_orders)
            if (*r.period % d != 0) orders_ok = false;
        r.gate_passed = r.has_eigenvalue_one && orders_ok;
    }
    return r;
}

bool check_cmkdet(const DirectedGraph& g, long l, long m) {
    if (l < 1 || m < 1) throw PreconditionViolated("check_cmkdet: l and m must be positive");
    if (!is_strongly_connected(g)) throw NotStronglyConnected("check_cmkdet: graph is not strongly connected");
    const long p = period(g);
    if (p % l != 0) throw PreconditionViolated("check_cmkdet: l does not divide the period");
    if (gcd_ll(p / l, m) != 1) throw PreconditionViolated("check_cmkdet: gcd(P_E/l, m) != 1");
    const IntMatrix a = vertex_matrix(g);
    for (long d : unity_eigenvalue_orders(a))
        if (p % d != 0)
            throw PreconditionViolated("check_cmkdet: spectrum has a unity order not dividing the period");
    const Int det = determinant(geometric_sum_power(a, l, m).transpose());
    if (det == 0)
        throw InternalInconsistency("check_cmkdet: determinant vanished under valid hypotheses");
    return true;
}

} // namespace bdk
