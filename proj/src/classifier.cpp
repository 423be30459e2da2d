#include "bdk/classifier.hpp"

#include "bdk/errors.hpp"
#include "bdk/spectral.hpp"

#include <sstream>

namespace bdk {

std::string ClassificationVerdict::to_string() const {
    std::ostringstream os;
    os << "verdict: ";
    switch (verdict) {
        case Kind::Isomorphic: os << "isomorphic"; break;
        case Kind::NotIsomorphic: os << "not-isomorphic"; break;
        case Kind::Undecided: os << "undecided"; break;
    }
    os << "\n" << "reason: " << reason << "\n";
    return os.str();
}

SupernaturalNumber recover_omega(const BDInvariant& inv) {
    const Int d = content(inv.unit.numerator);
    if (d == 0) throw UnitClassTorsion("recover_omega: unit class is torsion (d = 0)");
    const SupernaturalNumber lcm_d = scale(inv.omega, d, Int(inv.l)); // lcm(D) = d*omega/l
    const SupernaturalNumber recovered = scale(lcm_d, Int(inv.l), d); // [l * lcm(D)] / d
    if (!equals(recovered, inv.omega))
        throw InternalInconsistency("recover_omega: recovered omega differs from the stored one");
    return recovered;
}

std::vector<Int> divisibility_profile(const BDInvariant& inv, const Int& bound) {
    if (bound < 1) throw PreconditionViolated("divisibility_profile: bound must be >= 1");
    std::vector<Int> profile;
    for (Int n = 1; n <= bound; ++n)
        if (elem_divisible(inv, n)) profile.push_back(n);
    return profile;
}

ClassificationVerdict classify(const DirectedGraph& g, const SupernaturalNumber& omega,
                               const SupernaturalNumber& omega2) {
    ClassificationVerdict v;
    if (equals(omega, omega2)) {
        v.verdict = ClassificationVerdict::Kind::Isomorphic;
        v.reason = "the omega classes are equal";
        const HypothesisReport gate = hypothesis_gate(g);
        if (gate.gate_passed) {
            v.invariant1 = bd_k0_torsion_free(g, omega);
            v.invariant2 = bd_k0_torsion_free(g, omega2);
        }
        return v;
    }
    const HypothesisReport gate = hypothesis_gate(g);
    if (gate.gate_passed) {
        v.verdict = ClassificationVerdict::Kind::NotIsomorphic;
        v.reason = "the omega classes differ and the spectral hypotheses hold";
        v.invariant1 = bd_k0_torsion_free(g, omega);
        v.invariant2 = bd_k0_torsion_free(g, omega2);
    } else {
        v.verdict = ClassificationVerdict::Kind::Undecided;
        v.reason = "hypothesis gate failed: " + gate.failure_reason();
    }
    return v;
}

} // namespace bdk
