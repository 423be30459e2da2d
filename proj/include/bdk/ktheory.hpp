#pragma once

#include "bdk/graph.hpp"
#include "bdk/smith.hpp"
#include "bdk/supernatural.hpp"

#include <string>
#include <vector>

namespace bdk {

/// K-theory of a graph algebra: K_0 = coker(1 - A^t), K_1 = ker(1 - A^t),
/// the unit class in torsion-free coordinates, and its content.
struct GraphKTheory {
    AbelianGroupInfo k0;
    int k1_rank = 0;
    std::vector<Int> unit_coords; // torsion-free coordinates of sum_v delta_v
    Int unit_content;             // 0 exactly when the unit class is torsion

    std::string to_string() const;
};

GraphKTheory graph_k_theory(const DirectedGraph& g);

/// K-theory of the n-th block algebra, computed from the small matrix
/// (1 - A^n)^t rather than from A_{E(n)}; its unit is the class of
/// sum_{|mu| < n} delta_{s(mu)}.
GraphKTheory block_k_theory(const DirectedGraph& g, long n);

/// Matrix of the connecting map coker(1-A^n)^t -> coker(1-A^mn)^t, computed
/// two ways (power sum and path count) which must agree.
IntMatrix connecting_map_matrix(const DirectedGraph& g, long n, long m);

/// Data of the decomposition coker(1-A^l)^t = sum of l copies of
/// coker(1-A^t): each vertex generator lands in the copy indexed by its
/// cyclic class.
struct CyclicDecomposition {
    CyclicClasses classes;
    std::vector<int> copy_index;            // per vertex
    std::vector<std::vector<Int>> images;   // delta_v embedded in Z^{l * |E0|}
};

CyclicDecomposition cyclic_decomposition(const DirectedGraph& g, long l);

/// Element of (free group)[1/omega] as a formal fraction numerator/denominator.
struct ScaledGroupElement {
    std::vector<Int> numerator;
    Int denominator = 1;

    ScaledGroupElement() = default;
    ScaledGroupElement(std::vector<Int> num, Int den);

    ScaledGroupElement canonical() const; // gcd(content, denominator) divided out
};

ScaledGroupElement scaled_elem_add(const ScaledGroupElement& x, const ScaledGroupElement& y);
ScaledGroupElement scaled_elem_negate(const ScaledGroupElement& x);
ScaledGroupElement scaled_elem_scalar(const Int& k, const ScaledGroupElement& x);
bool scaled_elem_equal(const ScaledGroupElement& x, const ScaledGroupElement& y);
bool scaled_elem_is_zero(const ScaledGroupElement& x);

/// The computed invariant of C*(E, omega): l copies of Z^N adjoined 1/omega,
/// the unit class (u, ..., u)/l, and the K_1 rank.
struct BDInvariant {
    long l = 1;
    long copies = 1;
    int per_copy_rank = 0; // N
    SupernaturalNumber omega;
    ScaledGroupElement unit; // numerator is l copies of the unit coordinates
    long k1_rank_total = 0;
    GraphKTheory source_graph_ktheory;

    std::string to_string() const;
};

/// K_1 rank of C*(E, omega): l * nullity(1 - A^t), cross-checked against the
/// nullity of (1 - A^l)^t.
long bd_k1(const DirectedGraph& g, const SupernaturalNumber& omega);

BDInvariant bd_k0_torsion_free(const DirectedGraph& g, const SupernaturalNumber& omega);

/// Whether n divides the unit class of the invariant, i.e. n | d*omega/l.
/// Throws UnitClassTorsion when the unit class is torsion (d = 0).
bool elem_divisible(const BDInvariant& inv, const Int& n);

} // namespace bdk
