#pragma once

#include <cstddef>
#include <cstdlib>
#include <vector>

#include "tricalc/int_matrix.hpp"

namespace tricalc::core {

// A = U * D * V with U, V unimodular and D diagonal, nonnegative,
// d_1 | d_2 | ... (zeros last).
struct SmithForm {
    IntMatrix U, D, V;
};

namespace detail {

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// Row operations act on D as D <- E*D; U absorbs E^{-1} on the right.
// Column operations act as D <- D*F; V absorbs F^{-1} on the left.
struct SmithState {
    IntMatrix U, D, V;

    void swap_rows(std::size_t i, std::size_t j) {
        D.swap_rows(i, j);
        U.swap_cols(i, j);
    }
    void swap_cols(std::size_t i, std::size_t j) {
        D.swap_cols(i, j);
        V.swap_rows(i, j);
    }
    // D: row_i += q*row_j, so U absorbs (I + q e_i e_j^T)^{-1} = I - q e_i e_j^T
    void add_row(std::size_t i, std::size_t j, const Int& q) {
        D.add_row(i, j, q);
        U.add_col(j, i, -q);
    }
    // D: col_i += q*col_j; V absorbs the inverse on the left
    void add_col(std::size_t i, std::size_t j, const Int& q) {
        D.add_col(i, j, q);
        V.add_row(j, i, -q);
    }
    void negate_row(std::size_t i) {
        D.negate_row(i);
        U.negate_col(i);
    }
};

}  // namespace detail

inline SmithForm smith_normal_form(const IntMatrix& a) {
    const std::size_t rows = a.rows(), cols = a.cols();
    detail::SmithState st{IntMatrix::identity(rows), a, IntMatrix::identity(cols)};

    const std::size_t rank_bound = rows < cols ? rows : cols;
    for (std::size_t t = 0; t < rank_bound; ++t) {
        // Smallest nonzero entry of the trailing submatrix becomes the pivot.
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                const Int& e = st.D(i, j);
                if (e == 0) continue;
                if (!found || detail::abs_int(e) < detail::abs_int(st.D(pi, pj))) {
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) break;  // trailing submatrix is zero
        if (pi != t) st.swap_rows(t, pi);
        if (pj != t) st.swap_cols(t, pj);

        for (;;) {
            // Clear column t, keeping remainders in place for the next sweep.
            bool dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (st.D(i, t) == 0) continue;
                Int q = st.D(i, t) / st.D(t, t);
                if (q != 0) st.add_row(i, t, -q);
                if (st.D(i, t) != 0) {  // remainder strictly smaller: promote it
                    st.swap_rows(t, i);
                    dirty = true;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (st.D(t, j) == 0) continue;
                Int q = st.D(t, j) / st.D(t, t);
                if (q != 0) st.add_col(j, t, -q);
                if (st.D(t, j) != 0) {
                    st.swap_cols(t, j);
                    dirty = true;
                }
            }
            if (dirty) continue;
            // Pivot must divide the whole trailing block or the chain breaks.
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols && divides; ++j)
                    if (st.D(i, j) % st.D(t, t) != 0) {
                        st.add_row(t, i, 1);
                        divides = false;
                    }
            if (divides) break;
        }
        if (st.D(t, t) < 0) st.negate_row(t);
    }
    return SmithForm{st.U, st.D, st.V};
}

// Invariant factors > 1 plus the free rank of coker(A), where A maps into
// Z^rows (columns are relations).
struct AbelianGroup {
    std::vector<Int> torsion;
    std::size_t free_rank = 0;

    bool trivial() const { return torsion.empty() && free_rank == 0; }
    bool operator==(const AbelianGroup&) const = default;
};

inline AbelianGroup cokernel(const IntMatrix& a) {
    SmithForm s = smith_normal_form(a);
    AbelianGroup g;
    std::size_t nonzero = 0;
    const std::size_t rank_bound = a.rows() < a.cols() ? a.rows() : a.cols();
    for (std::size_t i = 0; i < rank_bound; ++i) {
        const Int& d = s.D(i, i);
        if (d != 0) ++nonzero;
        if (d > 1) g.torsion.push_back(d);
    }
    g.free_rank = a.rows() - nonzero;
    return g;
}

}  // namespace tricalc::core
