#pragma once

#include "torinv/types.hpp"

#include <optional>
#include <utility>

namespace torinv {

/// Row Hermite normal form `H = U * M` together with its pivot columns.
///
/// Pivots are strictly positive, entries above a pivot lie in [0, pivot),
/// entries below a pivot are zero and zero rows come last. `U` is unimodular.
template <typename Scalar>
struct HermiteForm {
    Matrix<Scalar> H;
    Matrix<Scalar> U;
    std::vector<Eigen::Index> pivots;

    Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};

template <typename Scalar>
HermiteForm<Scalar> hermite_form(const Matrix<Scalar>& M)
{
    using std::abs;
    HermiteForm<Scalar> out;
    out.H = M;
    out.U = Matrix<Scalar>::Identity(M.rows(), M.rows());
    Matrix<Scalar>& H = out.H;
    Matrix<Scalar>& U = out.U;

    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < H.cols() && row < H.rows(); ++col) {
        // Euclid on the column below `row`: keep the smallest nonzero entry
        // at `row` and reduce the others against it until they vanish.
        for (;;) {
            Eigen::Index best = -1;
            for (Eigen::Index k = row; k < H.rows(); ++k) {
                if (H(k, col) == 0)
                    continue;
                if (best < 0 || abs(H(k, col)) < abs(H(best, col)))
                    best = k;
            }
            if (best < 0)
                break;
            if (best != row) {
                H.row(best).swap(H.row(row));
                U.row(best).swap(U.row(row));
            }
            bool clean = true;
            for (Eigen::Index k = row + 1; k < H.rows(); ++k) {
                if (H(k, col) == 0)
                    continue;
                const Scalar q = H(k, col) / H(row, col);
                H.row(k) -= q * H.row(row);
                U.row(k) -= q * U.row(row);
                if (H(k, col) != 0)
                    clean = false;
            }
            if (clean)
                break;
        }
        if (H(row, col) == 0)
            continue;
        if (H(row, col) < 0) {
            H.row(row) = -H.row(row);
            U.row(row) = -U.row(row);
        }
        for (Eigen::Index k = 0; k < row; ++k) {
            const Scalar q = floor_div(H(k, col), H(row, col));
            if (q != 0) {
                H.row(k) -= q * H.row(row);
                U.row(k) -= q * U.row(row);
            }
        }
        out.pivots.push_back(col);
        ++row;
    }
    return out;
}

/// Rank over the rationals of an integer matrix.
template <typename Scalar>
Eigen::Index integer_rank(const Matrix<Scalar>& M)
{
    if (M.size() == 0)
        return 0;
    return hermite_form(M).rank();
}

/// A sublattice of Z^n, stored as the nonzero rows of its row HNF.
///
/// Two bases generate the same lattice iff their stored matrices are equal.
class LatticeBasis {
public:
    /// The zero lattice in Z^ambient_dim.
    explicit LatticeBasis(Eigen::Index ambient_dim = 0);

    /// Lattice spanned by the rows of `generators` (dependent rows allowed).
    static LatticeBasis from_rows(const IntMatrix& generators);
    static LatticeBasis from_vectors(const std::vector<IntVector>& generators, Eigen::Index ambient_dim);

    Eigen::Index ambient_dim() const { return dim_; }
    Eigen::Index rank() const { return rows_.rows(); }
    bool is_zero() const { return rows_.rows() == 0; }

    /// Basis vectors as rows, in canonical (HNF) form.
    const IntMatrix& vectors() const { return rows_; }
    IntVector vector(Eigen::Index k) const { return rows_.row(k).transpose(); }

    bool contains(const IntVector& v) const;

    friend bool operator==(const LatticeBasis& a, const LatticeBasis& b)
    {
        return a.dim_ == b.dim_ && a.rows_.rows() == b.rows_.rows() && a.rows_ == b.rows_;
    }

private:
    IntMatrix rows_;
    std::vector<Eigen::Index> pivots_;
    Eigen::Index dim_;
};

std::pair<IntMatrix, IntMatrix> hnf(const IntMatrix& M);

/// Basis of {v in Z^cols : A v = 0}.
LatticeBasis kernel_basis(const IntMatrix& A);

bool lattice_member(const LatticeBasis& B, const IntVector& v);
bool lattice_equal(const LatticeBasis& B1, const LatticeBasis& B2);

/// Kernel vectors of `A` supported inside `I`, embedded in Z^cols.
LatticeBasis restrict_kernel(const IntMatrix& A, const IndexSet& I);

/// Integer solutions of `G c = t`: one particular solution plus a basis of
/// the homogeneous solutions (as rows). Empty when no integer solution exists.
struct IntegerSolution {
    IntVector particular;
    IntMatrix homogeneous;
};
std::optional<IntegerSolution> solve_integer(const IntMatrix& G, const IntVector& t);

} // namespace torinv
