#pragma once

#include "bdk/matrix.hpp"

#include <vector>

namespace bdk {

/// Unimodular factorization u * m * v = s with s diagonal, nonnegative,
/// and each diagonal entry dividing the next. The exact inverses of the
/// transforms come out of the same elimination for free and are kept;
/// saturation and subgroup membership need them.
struct SmithDecomposition {
    IntMatrix u, s, v;
    IntMatrix u_inv, v_inv;
    int rank = 0; // number of nonzero diagonal entries (they lead)

    std::vector<Int> diagonal() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Diagonal of the Smith form only, without transform tracking. Much cheaper;
/// the oracle suites grind through thousands of these.
std::vector<Int> smith_diagonal(const IntMatrix& m);

/// Coordinates of a cokernel element split into torsion residues and free part.
struct GroupCoordinates {
    std::vector<Int> torsion; // residue mod d_i for each invariant factor > 1
    std::vector<Int> free;    // coordinates in the free quotient
};

/// A finitely generated abelian group presented as coker(m), with the SNF
/// change of basis retained so elements can be mapped to coordinates.
struct AbelianGroupInfo {
    int free_rank = 0;
    std::vector<Int> invariant_factors; // entries > 1, divisibility chain

    GroupCoordinates to_coordinates(const std::vector<Int>& x) const;

    // presentation data (SNF basis)
    IntMatrix u;
    std::vector<Int> diagonal;
    int rank = 0;
    int ambient = 0; // rows of the presenting matrix
};

AbelianGroupInfo cokernel_presentation(const IntMatrix& m);

/// Basis of the integer kernel {x : m x = 0}, read off the last columns of v.
std::vector<std::vector<Int>> kernel_basis(const IntMatrix& m);

/// Coordinates of x + im(m) + torsion in the free quotient Z^{free_rank}.
/// Zero exactly when x lies in the saturation of im(m).
std::vector<Int> torsion_free_coords(const IntMatrix& m, const std::vector<Int>& x);

/// Basis of {x : k x in im(m) for some k >= 1}. Contains im(m); the quotient
/// by it is free.
std::vector<std::vector<Int>> saturation(const IntMatrix& m);

bool is_in_image(const SmithDecomposition& snf, const std::vector<Int>& b);
bool is_in_image(const IntMatrix& m, const std::vector<Int>& b);

/// Membership of x in the subgroup generated by the given vectors.
bool is_in_span(const std::vector<std::vector<Int>>& generators, const std::vector<Int>& x);

/// Equality of the subgroups generated by two families of vectors.
bool subgroups_equal(const std::vector<std::vector<Int>>& a, const std::vector<std::vector<Int>>& b);

/// Columns of a matrix assembled from a list of vectors.
IntMatrix matrix_from_columns(int ambient, const std::vector<std::vector<Int>>& cols);

} // namespace bdk
