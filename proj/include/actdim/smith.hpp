#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "actdim/scalar.hpp"

namespace actdim {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Invariant factors d_1 | d_2 | ... | d_r of an integer matrix, optionally
/// with unimodular U, V such that U·A·V is diagonal with the factors first.
template <typename Scalar>
struct SmithDecomposition {
    std::vector<Scalar> factors;
    std::size_t rank = 0;
    std::optional<DenseMatrix<Scalar>> left;   // U
    std::optional<DenseMatrix<Scalar>> right;  // V
};

namespace detail {

template <typename Scalar>
void swap_rows(DenseMatrix<Scalar>& a, Eigen::Index i, Eigen::Index j) {
    if (i != j) a.row(i).swap(a.row(j));
}

template <typename Scalar>
void swap_cols(DenseMatrix<Scalar>& a, Eigen::Index i, Eigen::Index j) {
    if (i != j) a.col(i).swap(a.col(j));
}

// row_i -= f·row_t
template <typename Scalar>
void row_axpy(DenseMatrix<Scalar>& a, Eigen::Index i, Eigen::Index t, const Scalar& f, Eigen::Index from = 0) {
    for (Eigen::Index c = from; c < a.cols(); ++c) {
        if (a(t, c) != 0) a(i, c) = checked_sub(a(i, c), checked_mul(f, a(t, c)));
    }
}

// col_j -= f·col_t
template <typename Scalar>
void col_axpy(DenseMatrix<Scalar>& a, Eigen::Index j, Eigen::Index t, const Scalar& f, Eigen::Index from = 0) {
    for (Eigen::Index r = from; r < a.rows(); ++r) {
        if (a(r, t) != 0) a(r, j) = checked_sub(a(r, j), checked_mul(f, a(r, t)));
    }
}

}  // namespace detail

/// Smith normal form by elimination on the smallest nonzero pivot.
///
/// With int64 entries every operation is overflow checked and throws
/// Error(Overflow); callers retry with BigInt.
template <typename Scalar>
SmithDecomposition<Scalar> smith_normal_form(DenseMatrix<Scalar> a, bool with_transforms = false) {
    using detail::col_axpy;
    using detail::row_axpy;
    const Eigen::Index m = a.rows();
    const Eigen::Index n = a.cols();
    DenseMatrix<Scalar> u, v;
    if (with_transforms) {
        u = DenseMatrix<Scalar>::Identity(m, m);
        v = DenseMatrix<Scalar>::Identity(n, n);
    }
    SmithDecomposition<Scalar> out;

    auto move_to = [&](Eigen::Index t, Eigen::Index p, Eigen::Index q) {
        detail::swap_rows(a, t, p);
        detail::swap_cols(a, t, q);
        if (with_transforms) {
            detail::swap_rows(u, t, p);
            detail::swap_cols(v, t, q);
        }
    };

    for (Eigen::Index t = 0; t < std::min(m, n); ++t) {
        // Smallest nonzero entry of the trailing block.
        Eigen::Index bp = -1, bq = -1;
        Scalar best = 0;
        for (Eigen::Index q = t; q < n && best != 1; ++q) {
            for (Eigen::Index p = t; p < m; ++p) {
                if (a(p, q) == 0) continue;
                const Scalar x = abs_value(a(p, q));
                if (bp < 0 || x < best) {
                    best = x;
                    bp = p;
                    bq = q;
                    if (best == 1) break;
                }
            }
        }
        if (bp < 0) break;
        move_to(t, bp, bq);

        while (true) {
            bool clean = true;
            for (Eigen::Index i = t + 1; i < m; ++i) {
                if (a(i, t) == 0) continue;
                const Scalar f = floor_div(a(i, t), a(t, t));
                row_axpy(a, i, t, f, t);
                if (with_transforms) row_axpy(u, i, t, f);
                if (a(i, t) != 0) clean = false;
            }
            for (Eigen::Index j = t + 1; j < n; ++j) {
                if (a(t, j) == 0) continue;
                const Scalar f = floor_div(a(t, j), a(t, t));
                col_axpy(a, j, t, f, t);
                if (with_transforms) col_axpy(v, j, t, f);
                if (a(t, j) != 0) clean = false;
            }
            if (!clean) {
                // A remainder is smaller than the pivot; bring the smallest forward.
                Eigen::Index p = t, q = t;
                Scalar small = abs_value(a(t, t));
                for (Eigen::Index i = t + 1; i < m; ++i)
                    if (a(i, t) != 0 && abs_value(a(i, t)) < small) { small = abs_value(a(i, t)); p = i; q = t; }
                for (Eigen::Index j = t + 1; j < n; ++j)
                    if (a(t, j) != 0 && abs_value(a(t, j)) < small) { small = abs_value(a(t, j)); p = t; q = j; }
                move_to(t, p, q);
                continue;
            }
            if (abs_value(a(t, t)) == 1) break;
            Eigen::Index bad = -1;
            for (Eigen::Index i = t + 1; i < m && bad < 0; ++i)
                for (Eigen::Index j = t + 1; j < n; ++j)
                    if (a(i, j) % a(t, t) != 0) { bad = i; break; }
            if (bad < 0) break;
            row_axpy(a, t, bad, Scalar(-1), t);
            if (with_transforms) row_axpy(u, t, bad, Scalar(-1));
        }
        if (a(t, t) < 0) {
            a.row(t) = -a.row(t);
            if (with_transforms) u.row(t) = -u.row(t);
        }
        out.factors.push_back(a(t, t));
    }
    out.rank = out.factors.size();
    if (with_transforms) {
        out.left = std::move(u);
        out.right = std::move(v);
    }
    return out;
}

/// Finitely generated abelian group ℤ^betti ⊕ ⨁ ℤ/t.
struct AbelianGroup {
    std::size_t betti = 0;
    std::vector<BigInt> torsion;  // invariant factors > 1, divisibility chain

    bool trivial() const { return betti == 0 && torsion.empty(); }
    /// "0", "Z", "Z^2 + Z/2", ...
    std::string to_string() const;
    bool operator==(const AbelianGroup&) const = default;
};

/// Cokernel of an integer relation matrix (rows are relations on the columns).
AbelianGroup cokernel(const DenseMatrix<std::int64_t>& relations);

}  // namespace actdim
