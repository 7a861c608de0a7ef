#pragma once

#include "torinv/types.hpp"

namespace torinv {

enum class LpStatus { Optimal, Infeasible, Unbounded };

template <typename Scalar>
struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Vector<Scalar> x;
    Scalar objective{0};
};

namespace detail {

// Dense tableau: rows 0..m-1 are constraints, the last row holds reduced
// costs d_j = c_B B^{-1} a_j - c_j, the last column holds the right-hand side
// (and the objective value in the corner).
template <typename Scalar>
class Tableau {
public:
    Matrix<Scalar> T;
    std::vector<Eigen::Index> basis;

    Eigen::Index rows() const { return T.rows() - 1; }
    Eigen::Index vars() const { return T.cols() - 1; }

    void pivot(Eigen::Index r, Eigen::Index c)
    {
        const Scalar p = T(r, c);
        T.row(r) /= p;
        for (Eigen::Index k = 0; k < T.rows(); ++k) {
            if (k == r || T(k, c) == 0)
                continue;
            const Scalar f = T(k, c);
            T.row(k) -= f * T.row(r);
        }
        basis[static_cast<std::size_t>(r)] = c;
    }

    // Bland's rule: lowest-index entering column with negative reduced cost,
    // ratio ties broken by lowest basic variable index.
    LpStatus run(Eigen::Index admissible_cols)
    {
        for (;;) {
            Eigen::Index enter = -1;
            for (Eigen::Index j = 0; j < admissible_cols; ++j) {
                if (T(rows(), j) < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0)
                return LpStatus::Optimal;
            Eigen::Index leave = -1;
            Scalar best_ratio;
            for (Eigen::Index i = 0; i < rows(); ++i) {
                if (T(i, enter) <= 0)
                    continue;
                const Scalar ratio = T(i, vars()) / T(i, enter);
                if (leave < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis[static_cast<std::size_t>(i)] <
                                                basis[static_cast<std::size_t>(leave)])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave < 0)
                return LpStatus::Unbounded;
            pivot(leave, enter);
        }
    }
};

} // namespace detail

/// Maximize c^T x subject to A x = b, x >= 0, in exact arithmetic.
///
/// Two-phase primal simplex with Bland's anti-cycling rule. `Scalar` must be
/// an exact ordered field (e.g. Rational); floating types will misbehave on
/// the zero tests.
template <typename Scalar>
LpResult<Scalar> simplex_maximize(Matrix<Scalar> A, Vector<Scalar> b, const Vector<Scalar>& c)
{
    const Eigen::Index m = A.rows();
    const Eigen::Index n = A.cols();
    if (b.size() != m || c.size() != n)
        throw InvalidInput("LP dimensions do not agree");

    for (Eigen::Index i = 0; i < m; ++i) {
        if (b(i) < 0) {
            A.row(i) = -A.row(i);
            b(i) = -b(i);
        }
    }

    // Phase 1: artificial columns n..n+m-1, maximize -sum(artificials).
    detail::Tableau<Scalar> tab;
    tab.T = Matrix<Scalar>::Zero(m + 1, n + m + 1);
    tab.T.topLeftCorner(m, n) = A;
    tab.T.block(0, n, m, m) = Matrix<Scalar>::Identity(m, m);
    tab.T.topRightCorner(m, 1) = b;
    tab.basis.resize(static_cast<std::size_t>(m));
    for (Eigen::Index i = 0; i < m; ++i) {
        tab.basis[static_cast<std::size_t>(i)] = n + i;
        tab.T.row(m) -= tab.T.row(i);
    }
    for (Eigen::Index i = 0; i < m; ++i)
        tab.T(m, n + i) = 0;
    tab.run(n + m);

    LpResult<Scalar> out;
    if (tab.T(m, n + m) != 0) {
        out.status = LpStatus::Infeasible;
        return out;
    }

    // Drive remaining artificials out of the basis; drop redundant rows.
    std::vector<Eigen::Index> keep;
    for (Eigen::Index i = 0; i < m; ++i) {
        if (tab.basis[static_cast<std::size_t>(i)] < n) {
            keep.push_back(i);
            continue;
        }
        Eigen::Index col = -1;
        for (Eigen::Index j = 0; j < n; ++j) {
            if (tab.T(i, j) != 0) {
                col = j;
                break;
            }
        }
        if (col >= 0) {
            tab.pivot(i, col);
            keep.push_back(i);
        }
    }

    // Phase 2 tableau over the original columns.
    const auto m2 = static_cast<Eigen::Index>(keep.size());
    detail::Tableau<Scalar> ph2;
    ph2.T = Matrix<Scalar>::Zero(m2 + 1, n + 1);
    ph2.basis.resize(keep.size());
    for (Eigen::Index k = 0; k < m2; ++k) {
        const Eigen::Index i = keep[static_cast<std::size_t>(k)];
        ph2.T.row(k).head(n) = tab.T.row(i).head(n);
        ph2.T(k, n) = tab.T(i, n + m);
        ph2.basis[static_cast<std::size_t>(k)] = tab.basis[static_cast<std::size_t>(i)];
    }
    ph2.T.row(m2).head(n) = -c.transpose();
    for (Eigen::Index k = 0; k < m2; ++k) {
        const Scalar cb = c(ph2.basis[static_cast<std::size_t>(k)]);
        if (cb != 0)
            ph2.T.row(m2) += cb * ph2.T.row(k);
    }

    out.status = ph2.run(n);
    if (out.status == LpStatus::Unbounded)
        return out;
    out.x = Vector<Scalar>::Zero(n);
    for (Eigen::Index k = 0; k < m2; ++k)
        out.x(ph2.basis[static_cast<std::size_t>(k)]) = ph2.T(k, n);
    out.objective = ph2.T(m2, n);
    return out;
}

/// Feasibility of A x = b, x >= 0; returns a basic feasible point if any.
template <typename Scalar>
LpResult<Scalar> simplex_feasible(const Matrix<Scalar>& A, const Vector<Scalar>& b)
{
    return simplex_maximize<Scalar>(A, b, Vector<Scalar>::Zero(A.cols()));
}

} // namespace torinv
