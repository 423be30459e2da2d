#include "bdk/ktheory.hpp"

#include "bdk/errors.hpp"
#include "bdk/spectral.hpp"

#include <algorithm>
#include <sstream>

namespace bdk {

namespace {

std::vector<Int> ones(int n) {
    return std::vector<Int>(n, Int(1));
}

std::string join(const std::vector<Int>& xs) {
    if (xs.empty()) return "none";
    std::ostringstream os;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) os << " ";
        os << xs[i];
    }
    return os.str();
}

GraphKTheory k_theory_from(const IntMatrix& presenting, const std::vector<Int>& unit_vector) {
    GraphKTheory kt;
    kt.k0 = cokernel_presentation(presenting);
    kt.k1_rank = presenting.cols() - kt.k0.rank;
    kt.unit_coords = kt.k0.to_coordinates(unit_vector).free;
    kt.unit_content = content(kt.unit_coords);
    return kt;
}

} // namespace

std::string GraphKTheory::to_string() const {
    std::ostringstream os;
    os << "k0_free_rank: " << k0.free_rank << "\n";
    os << "k0_invariant_factors: " << join(k0.invariant_factors) << "\n";
    os << "k1_rank: " << k1_rank << "\n";
    os << "unit_coords: " << join(unit_coords) << "\n";
    os << "unit_content: " << unit_content << "\n";
    return os.str();
}

GraphKTheory graph_k_theory(const DirectedGraph& g) {
    if (!g.has_no_sources()) throw PreconditionViolated("graph_k_theory: graph has a source");
    const IntMatrix a = vertex_matrix(g);
    const IntMatrix m = IntMatrix::identity(a.rows()) - a.transpose();
    return k_theory_from(m, ones(a.rows()));
}

GraphKTheory block_k_theory(const DirectedGraph& g, long n) {
    if (n < 1) throw PreconditionViolated("block_k_theory: n must be positive");
    if (!g.has_no_sources()) throw PreconditionViolated("block_k_theory: graph has a source");
    const IntMatrix at = vertex_matrix(g).transpose();
    const IntMatrix m = IntMatrix::identity(at.rows()) - at.pow(n);
    // unit of the block algebra: sum over paths below n of delta_{s(mu)}
    const std::vector<Int> unit = geometric_sum_power(at, 1, n).apply(ones(at.rows()));
    return k_theory_from(m, unit);
}

IntMatrix connecting_map_matrix(const DirectedGraph& g, long n, long m) {
    if (n < 1 || m < 1) throw PreconditionViolated("connecting_map_matrix: n and m must be positive");
    const int nv = g.vertex_count();
    const IntMatrix power_sum = geometric_sum_power(vertex_matrix(g), n, m).transpose();

    // Independent route: count paths mu with r(mu) = v, |mu| < mn, |mu| in nN,
    // tallied by source, via a recurrence over the edge lists.
    IntMatrix counted(nv, nv);
    std::vector<std::vector<Int>> cur(nv, std::vector<Int>(nv));
    for (int v = 0; v < nv; ++v) cur[v][v] = 1;
    for (long k = 0; k < m * n; ++k) {
        if (k % n == 0)
            for (int v = 0; v < nv; ++v)
                for (int w = 0; w < nv; ++w) counted(w, v) += cur[v][w];
        if (k + 1 == m * n) break;
        std::vector<std::vector<Int>> next(nv, std::vector<Int>(nv));
        for (int v = 0; v < nv; ++v)
            for (int e : g.edges_with_range(v)) {
                const int s = g.edge(e).source;
                for (int w = 0; w < nv; ++w) next[v][w] += cur[s][w];
            }
        cur = std::move(next);
    }
    if (counted != power_sum)
        throw InternalInconsistency("connecting_map_matrix: path count disagrees with the power sum");
    return power_sum;
}

CyclicDecomposition cyclic_decomposition(const DirectedGraph& g, long l) {
    CyclicDecomposition dec;
    dec.classes = cyclic_classes(g, l); // validates strong connectivity and l | P_E
    const int nv = g.vertex_count();
    dec.copy_index.resize(nv);
    for (int j = 0; j < static_cast<int>(dec.classes.classes.size()); ++j)
        for (int v : dec.classes.classes[j]) dec.copy_index[v] = j;
    for (int v = 0; v < nv; ++v) {
        std::vector<Int> image(static_cast<std::size_t>(l) * nv);
        image[static_cast<std::size_t>(dec.copy_index[v]) * nv + v] = 1;
        dec.images.push_back(std::move(image));
    }

    // The decomposition is an isomorphism, so the invariant factors of
    // coker(1-A^l)^t must be the l-fold repetition of those of coker(1-A^t),
    // and the free ranks must match l-fold as well.
    const IntMatrix at = vertex_matrix(g).transpose();
    const AbelianGroupInfo small = cokernel_presentation(IntMatrix::identity(nv) - at);
    const AbelianGroupInfo big = cokernel_presentation(IntMatrix::identity(nv) - at.pow(l));
    std::vector<Int> repeated;
    for (long i = 0; i < l; ++i)
        repeated.insert(repeated.end(), small.invariant_factors.begin(), small.invariant_factors.end());
    std::sort(repeated.begin(), repeated.end());
    std::vector<Int> actual = big.invariant_factors;
    std::sort(actual.begin(), actual.end());
    if (big.free_rank != l * small.free_rank || actual != repeated)
        throw InternalInconsistency("cyclic_decomposition: coker(1-A^l)^t is not l copies of coker(1-A^t)");
    return dec;
}

ScaledGroupElement::ScaledGroupElement(std::vector<Int> num, Int den)
    : numerator(std::move(num)), denominator(std::move(den)) {
    if (denominator < 1) throw PreconditionViolated("ScaledGroupElement: denominator must be positive");
}

ScaledGroupElement ScaledGroupElement::canonical() const {
    const Int g = gcd(content(numerator), denominator);
    if (g <= 1) return *this;
    ScaledGroupElement out = *this;
    for (Int& x : out.numerator) x /= g;
    out.denominator /= g;
    return out;
}

ScaledGroupElement scaled_elem_add(const ScaledGroupElement& x, const ScaledGroupElement& y) {
    if (x.numerator.size() != y.numerator.size())
        throw DimensionMismatch("scaled_elem_add: length mismatch");
    const Int l = lcm(x.denominator, y.denominator);
    const Int fx = l / x.denominator, fy = l / y.denominator;
    std::vector<Int> num(x.numerator.size());
    for (std::size_t i = 0; i < num.size(); ++i) num[i] = fx * x.numerator[i] + fy * y.numerator[i];
    return ScaledGroupElement(std::move(num), l);
}

ScaledGroupElement scaled_elem_negate(const ScaledGroupElement& x) {
    ScaledGroupElement out = x;
    for (Int& v : out.numerator) v = -v;
    return out;
}

ScaledGroupElement scaled_elem_scalar(const Int& k, const ScaledGroupElement& x) {
    ScaledGroupElement out = x;
    for (Int& v : out.numerator) v *= k;
    return out;
}

bool scaled_elem_equal(const ScaledGroupElement& x, const ScaledGroupElement& y) {
    if (x.numerator.size() != y.numerator.size())
        throw DimensionMismatch("scaled_elem_equal: length mismatch");
    const Int l = lcm(x.denominator, y.denominator);
    const Int fx = l / x.denominator, fy = l / y.denominator;
    for (std::size_t i = 0; i < x.numerator.size(); ++i)
        if (fx * x.numerator[i] != fy * y.numerator[i]) return false;
    return true;
}

bool scaled_elem_is_zero(const ScaledGroupElement& x) {
    for (const Int& v : x.numerator)
        if (v != 0) return false;
    return true;
}

std::string BDInvariant::to_string() const {
    std::ostringstream os;
    os << "l: " << l << "\n";
    os << "copies: " << copies << "\n";
    os << "per_copy_rank: " << per_copy_rank << "\n";
    os << "unit_numerator: " << join(unit.numerator) << "\n";
    os << "unit_denominator: " << unit.denominator << "\n";
    os << "unit_content_d: " << content(unit.numerator) << "\n";
    os << "k1_rank: " << k1_rank_total << "\n";
    os << "omega: " << omega.to_string() << "\n";
    return os.str();
}

namespace {

long stabilized_l(const SupernaturalNumber& omega, const HypothesisReport& gate) {
    if (!gate.gate_passed) throw HypothesisNotSatisfied("hypothesis gate failed: " + gate.failure_reason());
    return gcd_with_integer(Int(*gate.period), omega).convert_to<long>();
}

} // namespace

long bd_k1(const DirectedGraph& g, const SupernaturalNumber& omega) {
    const HypothesisReport gate = hypothesis_gate(g);
    const long l = stabilized_l(omega, gate);
    const IntMatrix at = vertex_matrix(g).transpose();
    const int nv = at.rows();
    const int null_one = nv - cokernel_presentation(IntMatrix::identity(nv) - at).rank;
    const int null_l = nv - cokernel_presentation(IntMatrix::identity(nv) - at.pow(l)).rank;
    if (null_l != l * null_one)
        throw InternalInconsistency("bd_k1: nullity of (1-A^l)^t is not l times the nullity of (1-A)^t");
    return l * null_one;
}

BDInvariant bd_k0_torsion_free(const DirectedGraph& g, const SupernaturalNumber& omega) {
    const HypothesisReport gate = hypothesis_gate(g);
    const long l = stabilized_l(omega, gate);
    BDInvariant inv;
    inv.l = l;
    inv.copies = l;
    inv.omega = omega;
    inv.source_graph_ktheory = graph_k_theory(g);
    inv.per_copy_rank = inv.source_graph_ktheory.k0.free_rank;
    std::vector<Int> numerator;
    for (long i = 0; i < l; ++i)
        numerator.insert(numerator.end(), inv.source_graph_ktheory.unit_coords.begin(),
                         inv.source_graph_ktheory.unit_coords.end());
    inv.unit = ScaledGroupElement(std::move(numerator), Int(l));
    inv.k1_rank_total = bd_k1(g, omega);
    return inv;
}

bool elem_divisible(const BDInvariant& inv, const Int& n) {
    if (n < 1) throw PreconditionViolated("elem_divisible: n must be >= 1");
    const Int d = content(inv.unit.numerator);
    if (d == 0)
        throw UnitClassTorsion("elem_divisible: unit class is torsion; divisibility is degenerate");
    return divides_integer(n, scale(inv.omega, d, Int(inv.l)));
}

} // namespace bdk
