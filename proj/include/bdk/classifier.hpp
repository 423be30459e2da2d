#pragma once

#include "bdk/ktheory.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bdk {

struct ClassificationVerdict {
    enum class Kind { Isomorphic, NotIsomorphic, Undecided };
    Kind verdict = Kind::Undecided;
    std::string reason;
    std::optional<BDInvariant> invariant1, invariant2;

    std::string to_string() const; // verdict: ... / reason: ... lines
};

/// Recover [omega] = [l * lcm(D)] / d from the invariant. The divisor set D
/// is infinite and never materialized; its lcm is the supernatural d*omega/l.
/// The recovered value must equal the stored omega or the operation reports
/// an internal inconsistency. Throws UnitClassTorsion when d = 0.
SupernaturalNumber recover_omega(const BDInvariant& inv);

/// All n <= bound dividing the unit class of the invariant.
std::vector<Int> divisibility_profile(const BDInvariant& inv, const Int& bound);

/// Same-graph isomorphism question: equal omega classes are isomorphic
/// regardless of the gate; unequal ones are not isomorphic when the gate
/// passes, and undecided otherwise.
ClassificationVerdict classify(const DirectedGraph& g, const SupernaturalNumber& omega,
                               const SupernaturalNumber& omega2);

} // namespace bdk
