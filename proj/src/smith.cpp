#include "bdk/smith.hpp"

#include "bdk/errors.hpp"

#include <climits>
#include <cstdlib>
#include <utility>

namespace bdk {

namespace {

// Elimination entries can outgrow any fixed width, so the reference scalar is
// cpp_int. Almost all matrices seen here reduce without ever leaving 64 bits,
// which is worth a fast path: a checked scalar that aborts the attempt on the
// first overflow, after which the caller redoes the work with cpp_int.
struct OverflowSignal {};

struct I64 {
    long long v = 0;
    I64() = default;
    I64(long long x) : v(x) {}

    friend I64 operator+(I64 a, I64 b) {
        long long r;
        if (__builtin_add_overflow(a.v, b.v, &r)) throw OverflowSignal{};
        return r;
    }
    friend I64 operator-(I64 a, I64 b) {
        long long r;
        if (__builtin_sub_overflow(a.v, b.v, &r)) throw OverflowSignal{};
        return r;
    }
    friend I64 operator*(I64 a, I64 b) {
        long long r;
        if (__builtin_mul_overflow(a.v, b.v, &r)) throw OverflowSignal{};
        return r;
    }
    friend I64 operator/(I64 a, I64 b) {
        if (b.v == -1 && a.v == LLONG_MIN) throw OverflowSignal{};
        return a.v / b.v;
    }
    I64 operator-() const {
        if (v == LLONG_MIN) throw OverflowSignal{};
        return -v;
    }
    I64& operator+=(I64 o) { return *this = *this + o; }
    I64& operator-=(I64 o) { return *this = *this - o; }
    friend bool operator==(I64 a, I64 b) { return a.v == b.v; }
    friend bool operator!=(I64 a, I64 b) { return a.v != b.v; }
    friend bool operator<(I64 a, I64 b) { return a.v < b.v; }
};

template <class T>
T abs_val(const T& x) {
    return x < T(0) ? -x : x;
}

template <class T>
struct Grid {
    int rows = 0, cols = 0;
    std::vector<T> a;
    Grid() = default;
    Grid(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
    T& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const T& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
    static Grid identity(int n) {
        Grid g(n, n);
        for (int i = 0; i < n; ++i) g.at(i, i) = T(1);
        return g;
    }
};

// Smallest-nonzero-absolute-value pivot with row/column moves, divisibility
// enforced before each pivot is frozen. When transforms are requested the
// exact inverses are maintained alongside by applying the inverse elementary
// operation on the opposite side.
template <class T>
struct SnfWorker {
    Grid<T> s;
    bool track;
    Grid<T> u, v, uinv, vinv;
    int rank = 0;

    explicit SnfWorker(Grid<T> m, bool with_transforms) : s(std::move(m)), track(with_transforms) {
        if (track) {
            u = Grid<T>::identity(s.rows);
            uinv = Grid<T>::identity(s.rows);
            v = Grid<T>::identity(s.cols);
            vinv = Grid<T>::identity(s.cols);
        }
    }

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int k = 0; k < s.cols; ++k) std::swap(s.at(i, k), s.at(j, k));
        if (track) {
            for (int k = 0; k < s.rows; ++k) std::swap(u.at(i, k), u.at(j, k));
            for (int k = 0; k < s.rows; ++k) std::swap(uinv.at(k, i), uinv.at(k, j));
        }
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int k = 0; k < s.rows; ++k) std::swap(s.at(k, i), s.at(k, j));
        if (track) {
            for (int k = 0; k < s.cols; ++k) std::swap(v.at(k, i), v.at(k, j));
            for (int k = 0; k < s.cols; ++k) std::swap(vinv.at(i, k), vinv.at(j, k));
        }
    }
    // row_i -= q * row_j
    void row_sub(int i, int j, const T& q) {
        for (int k = 0; k < s.cols; ++k)
            if (s.at(j, k) != T(0)) s.at(i, k) -= q * s.at(j, k);
        if (track) {
            for (int k = 0; k < s.rows; ++k)
                if (u.at(j, k) != T(0)) u.at(i, k) -= q * u.at(j, k);
            for (int k = 0; k < s.rows; ++k)
                if (uinv.at(k, i) != T(0)) uinv.at(k, j) += q * uinv.at(k, i);
        }
    }
    // col_i -= q * col_j
    void col_sub(int i, int j, const T& q) {
        for (int k = 0; k < s.rows; ++k)
            if (s.at(k, j) != T(0)) s.at(k, i) -= q * s.at(k, j);
        if (track) {
            for (int k = 0; k < s.cols; ++k)
                if (v.at(k, j) != T(0)) v.at(k, i) -= q * v.at(k, j);
            for (int k = 0; k < s.cols; ++k)
                if (vinv.at(i, k) != T(0)) vinv.at(j, k) += q * vinv.at(i, k);
        }
    }
    void negate_row(int i) {
        for (int k = 0; k < s.cols; ++k) s.at(i, k) = -s.at(i, k);
        if (track) {
            for (int k = 0; k < s.rows; ++k) u.at(i, k) = -u.at(i, k);
            for (int k = 0; k < s.rows; ++k) uinv.at(k, i) = -uinv.at(k, i);
        }
    }

    // Smallest nonzero |entry| in the trailing submatrix; early exit on 1.
    bool find_pivot(int t, int& pi, int& pj) {
        bool found = false;
        T best{};
        for (int i = t; i < s.rows; ++i) {
            for (int j = t; j < s.cols; ++j) {
                const T& x = s.at(i, j);
                if (x == T(0)) continue;
                T a = abs_val(x);
                if (!found || a < best) {
                    found = true;
                    best = a;
                    pi = i;
                    pj = j;
                    if (best == T(1)) return true;
                }
            }
        }
        return found;
    }

    void run() {
        const int nmin = s.rows < s.cols ? s.rows : s.cols;
        for (int t = 0; t < nmin; ++t) {
            int pi, pj;
            if (!find_pivot(t, pi, pj)) break; // trailing submatrix is zero
            swap_rows(t, pi);
            swap_cols(t, pj);
            for (;;) {
                bool clean = true;
                for (int i = t + 1; i < s.rows; ++i) {
                    if (s.at(i, t) == T(0)) continue;
                    T q = s.at(i, t) / s.at(t, t);
                    if (q != T(0)) row_sub(i, t, q);
                    if (s.at(i, t) != T(0)) clean = false;
                }
                for (int j = t + 1; j < s.cols; ++j) {
                    if (s.at(t, j) == T(0)) continue;
                    T q = s.at(t, j) / s.at(t, t);
                    if (q != T(0)) col_sub(j, t, q);
                    if (s.at(t, j) != T(0)) clean = false;
                }
                if (!clean) {
                    if (!find_pivot(t, pi, pj)) break;
                    swap_rows(t, pi);
                    swap_cols(t, pj);
                    continue;
                }
                // pivot must divide the rest of the submatrix
                int bi = -1, bj = -1;
                for (int i = t + 1; i < s.rows && bi < 0; ++i)
                    for (int j = t + 1; j < s.cols; ++j)
                        if (s.at(i, j) - (s.at(i, j) / s.at(t, t)) * s.at(t, t) != T(0)) {
                            bi = i;
                            bj = j;
                            break;
                        }
                if (bi < 0) break;
                // fold the offending row into row t and keep reducing
                T minus_one = -T(1);
                row_sub(t, bi, minus_one);
            }
            if (s.at(t, t) < T(0)) negate_row(t);
            ++rank;
        }
    }
};

Grid<Int> to_grid(const IntMatrix& m) {
    Grid<Int> g(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) g.at(i, j) = m(i, j);
    return g;
}

bool to_grid_i64(const IntMatrix& m, Grid<I64>& g) {
    g = Grid<I64>(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            const Int& x = m(i, j);
            if (x > Int(LLONG_MAX) || x < Int(LLONG_MIN)) return false;
            g.at(i, j) = I64(x.convert_to<long long>());
        }
    return true;
}

IntMatrix from_grid(const Grid<Int>& g) {
    IntMatrix m(g.rows, g.cols);
    for (int i = 0; i < g.rows; ++i)
        for (int j = 0; j < g.cols; ++j) m(i, j) = g.at(i, j);
    return m;
}

IntMatrix from_grid(const Grid<I64>& g) {
    IntMatrix m(g.rows, g.cols);
    for (int i = 0; i < g.rows; ++i)
        for (int j = 0; j < g.cols; ++j) m(i, j) = g.at(i, j).v;
    return m;
}

} // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) throw DimensionMismatch("smith_normal_form: empty matrix");
    Grid<I64> fast;
    if (to_grid_i64(m, fast)) {
        try {
            SnfWorker<I64> w(std::move(fast), true);
            w.run();
            return SmithDecomposition{from_grid(w.u), from_grid(w.s), from_grid(w.v),
                                      from_grid(w.uinv), from_grid(w.vinv), w.rank};
        } catch (const OverflowSignal&) {
            // fall through to the exact path
        }
    }
    SnfWorker<Int> w(to_grid(m), true);
    w.run();
    return SmithDecomposition{from_grid(w.u), from_grid(w.s), from_grid(w.v),
                              from_grid(w.uinv), from_grid(w.vinv), w.rank};
}

std::vector<Int> SmithDecomposition::diagonal() const {
    const int n = s.rows() < s.cols() ? s.rows() : s.cols();
    std::vector<Int> d(n);
    for (int i = 0; i < n; ++i) d[i] = s(i, i);
    return d;
}

std::vector<Int> smith_diagonal(const IntMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) throw DimensionMismatch("smith_diagonal: empty matrix");
    const int n = m.rows() < m.cols() ? m.rows() : m.cols();
    Grid<I64> fast;
    if (to_grid_i64(m, fast)) {
        try {
            SnfWorker<I64> w(std::move(fast), false);
            w.run();
            std::vector<Int> d(n);
            for (int i = 0; i < n; ++i) d[i] = w.s.at(i, i).v;
            return d;
        } catch (const OverflowSignal&) {
        }
    }
    SnfWorker<Int> w(to_grid(m), false);
    w.run();
    std::vector<Int> d(n);
    for (int i = 0; i < n; ++i) d[i] = w.s.at(i, i);
    return d;
}

GroupCoordinates AbelianGroupInfo::to_coordinates(const std::vector<Int>& x) const {
    if (static_cast<int>(x.size()) != ambient)
        throw DimensionMismatch("AbelianGroupInfo::to_coordinates: vector has wrong length");
    const std::vector<Int> c = u.apply(x);
    GroupCoordinates out;
    for (int i = 0; i < rank; ++i) {
        if (diagonal[i] > 1) {
            Int r = c[i] % diagonal[i];
            if (r < 0) r += diagonal[i];
            out.torsion.push_back(std::move(r));
        }
    }
    for (int i = rank; i < ambient; ++i) out.free.push_back(c[i]);
    return out;
}

AbelianGroupInfo cokernel_presentation(const IntMatrix& m) {
    SmithDecomposition snf = smith_normal_form(m);
    AbelianGroupInfo info;
    info.ambient = m.rows();
    info.rank = snf.rank;
    info.diagonal = snf.diagonal();
    info.free_rank = m.rows() - snf.rank;
    for (const Int& d : info.diagonal)
        if (d > 1) info.invariant_factors.push_back(d);
    info.u = std::move(snf.u);
    return info;
}

std::vector<std::vector<Int>> kernel_basis(const IntMatrix& m) {
    SmithDecomposition snf = smith_normal_form(m);
    std::vector<std::vector<Int>> basis;
    for (int j = snf.rank; j < m.cols(); ++j) basis.push_back(snf.v.column(j));
    return basis;
}

std::vector<Int> torsion_free_coords(const IntMatrix& m, const std::vector<Int>& x) {
    return cokernel_presentation(m).to_coordinates(x).free;
}

std::vector<std::vector<Int>> saturation(const IntMatrix& m) {
    SmithDecomposition snf = smith_normal_form(m);
    std::vector<std::vector<Int>> basis;
    for (int j = 0; j < snf.rank; ++j) basis.push_back(snf.u_inv.column(j));
    return basis;
}

bool is_in_image(const SmithDecomposition& snf, const std::vector<Int>& b) {
    const std::vector<Int> c = snf.u.apply(b);
    for (int i = 0; i < snf.rank; ++i)
        if (c[i] % snf.s(i, i) != 0) return false;
    for (std::size_t i = snf.rank; i < c.size(); ++i)
        if (c[i] != 0) return false;
    return true;
}

bool is_in_image(const IntMatrix& m, const std::vector<Int>& b) {
    return is_in_image(smith_normal_form(m), b);
}

IntMatrix matrix_from_columns(int ambient, const std::vector<std::vector<Int>>& cols) {
    IntMatrix m(ambient, static_cast<int>(cols.size()));
    for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
        if (static_cast<int>(cols[j].size()) != ambient)
            throw DimensionMismatch("matrix_from_columns: column length mismatch");
        for (int i = 0; i < ambient; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

bool is_in_span(const std::vector<std::vector<Int>>& generators, const std::vector<Int>& x) {
    if (generators.empty()) {
        for (const Int& v : x)
            if (v != 0) return false;
        return true;
    }
    const int ambient = static_cast<int>(generators.front().size());
    return is_in_image(matrix_from_columns(ambient, generators), x);
}

bool subgroups_equal(const std::vector<std::vector<Int>>& a, const std::vector<std::vector<Int>>& b) {
    for (const auto& x : b)
        if (!is_in_span(a, x)) return false;
    for (const auto& x : a)
        if (!is_in_span(b, x)) return false;
    return true;
}

} // namespace bdk
