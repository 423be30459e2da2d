#pragma once

#include "bdk/graph.hpp"
#include "bdk/polynomial.hpp"

#include <optional>
#include <set>
#include <string>

namespace bdk {

/// Verdict on the standing spectral hypotheses: strong connectivity, 1 being
/// an eigenvalue, and every root of unity in the spectrum having order
/// dividing the period. A_E and A_E^t share their spectrum, so the tests run
/// on the characteristic polynomial of A_E.
struct HypothesisReport {
    bool strongly_connected = false;
    std::optional<long> period;  // defined only when strongly connected
    std::set<long> unity_orders; // {d : Phi_d divides char(A_E^t)}
    bool has_eigenvalue_one = false;
    bool gate_passed = false;

    /// Short machine-stable explanation when the gate fails; empty otherwise.
    std::string failure_reason() const;

    std::string to_string() const; // key: value lines
};

/// Orders of the roots of unity in the spectrum: all d with phi(d) <= n are
/// tested by exact cyclotomic divisibility (phi(d) <= n is forced by
/// Phi_d | char, and phi(d) >= sqrt(d/2) bounds the search).
std::set<long> unity_eigenvalue_orders(const IntMatrix& a);

HypothesisReport hypothesis_gate(const DirectedGraph& g);

/// det(sum_{i<m} (A^{il})^t) != 0. Requires l | P_E, gcd(P_E/l, m) = 1 and
/// the unity-order hypothesis; under those the determinant is provably
/// nonzero, so a zero is reported as an internal inconsistency, not a result.
bool check_cmkdet(const DirectedGraph& g, long l, long m);

} // namespace bdk
