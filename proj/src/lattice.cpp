#include "torinv/lattice.hpp"

namespace torinv {

LatticeBasis::LatticeBasis(Eigen::Index ambient_dim) : rows_(0, ambient_dim), dim_(ambient_dim) {}

LatticeBasis LatticeBasis::from_rows(const IntMatrix& generators)
{
    LatticeBasis out(generators.cols());
    if (generators.rows() == 0)
        return out;
    HermiteForm<Integer> form = hermite_form(generators);
    out.rows_ = form.H.topRows(form.rank());
    out.pivots_ = std::move(form.pivots);
    return out;
}

LatticeBasis LatticeBasis::from_vectors(const std::vector<IntVector>& generators, Eigen::Index ambient_dim)
{
    IntMatrix stacked(static_cast<Eigen::Index>(generators.size()), ambient_dim);
    for (std::size_t k = 0; k < generators.size(); ++k) {
        if (generators[k].size() != ambient_dim)
            throw InvalidInput("generator length does not match ambient dimension");
        stacked.row(static_cast<Eigen::Index>(k)) = generators[k].transpose();
    }
    return from_rows(stacked);
}

bool LatticeBasis::contains(const IntVector& v) const
{
    if (v.size() != dim_)
        throw InvalidInput("vector length does not match lattice dimension");
    IntVector residual = v;
    for (Eigen::Index k = 0; k < rows_.rows(); ++k) {
        const Eigen::Index p = pivots_[static_cast<std::size_t>(k)];
        if (residual(p) == 0)
            continue;
        if (residual(p) % rows_(k, p) != 0)
            return false;
        const Integer q = residual(p) / rows_(k, p);
        residual -= q * rows_.row(k).transpose();
    }
    return residual.isZero();
}

std::pair<IntMatrix, IntMatrix> hnf(const IntMatrix& M)
{
    HermiteForm<Integer> form = hermite_form(M);
    return {std::move(form.H), std::move(form.U)};
}

LatticeBasis kernel_basis(const IntMatrix& A)
{
    const IntMatrix At = A.transpose();
    HermiteForm<Integer> form = hermite_form(At);
    const Eigen::Index nullity = At.rows() - form.rank();
    return LatticeBasis::from_rows(form.U.bottomRows(nullity));
}

bool lattice_member(const LatticeBasis& B, const IntVector& v) { return B.contains(v); }

bool lattice_equal(const LatticeBasis& B1, const LatticeBasis& B2)
{
    if (B1.ambient_dim() != B2.ambient_dim())
        throw InvalidInput("lattices live in different ambient dimensions");
    return B1 == B2;
}

LatticeBasis restrict_kernel(const IntMatrix& A, const IndexSet& I)
{
    for (int i : I)
        if (i < 0 || i >= A.cols())
            throw InvalidInput("index " + std::to_string(i) + " out of range");
    if (I.empty())
        return LatticeBasis(A.cols());
    const LatticeBasis local = kernel_basis(select_columns(A, I));
    IntMatrix embedded = IntMatrix::Zero(local.rank(), A.cols());
    for (std::size_t k = 0; k < I.size(); ++k)
        embedded.col(I[k]) = local.vectors().col(static_cast<Eigen::Index>(k));
    return LatticeBasis::from_rows(embedded);
}

std::optional<IntegerSolution> solve_integer(const IntMatrix& G, const IntVector& t)
{
    if (G.rows() != t.size())
        throw InvalidInput("right-hand side length does not match system");
    const Eigen::Index k = G.cols();
    if (k == 0) {
        if (!t.isZero())
            return std::nullopt;
        return IntegerSolution{IntVector(0), IntMatrix(0, 0)};
    }
    // c^T G^T = t^T; substitute c^T = y^T U so that y^T H = t^T.
    HermiteForm<Integer> form = hermite_form(IntMatrix(G.transpose()));
    IntVector residual = t;
    IntVector y = IntVector::Zero(k);
    for (Eigen::Index i = 0; i < form.rank(); ++i) {
        const Eigen::Index p = form.pivots[static_cast<std::size_t>(i)];
        if (residual(p) % form.H(i, p) != 0)
            return std::nullopt;
        y(i) = residual(p) / form.H(i, p);
        residual -= y(i) * form.H.row(i).transpose();
    }
    if (!residual.isZero())
        return std::nullopt;
    IntegerSolution out;
    out.particular = (y.transpose() * form.U).transpose();
    out.homogeneous = form.U.bottomRows(k - form.rank());
    return out;
}

} // namespace torinv
