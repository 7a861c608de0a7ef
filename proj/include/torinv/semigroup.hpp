#pragma once

#include "torinv/lattice.hpp"

#include <optional>

namespace torinv {

/// Default enumeration cap on the number of variables for Hilbert bases.
inline constexpr int kHilbertBasisMaxDim = 12;

/// Degree first, then lexicographic.
bool graded_less(const IntVector& a, const IntVector& b);

bool is_exponent_vector(const IntVector& v);

/// The semigroup generated by an explicit, finite list of exponent vectors.
///
/// No saturation is ever applied: membership and restriction always refer to
/// this list. Generators must be nonnegative, nonzero and pairwise distinct.
class MonomialSemigroup {
public:
    explicit MonomialSemigroup(Eigen::Index ambient_dim = 0);
    MonomialSemigroup(Eigen::Index ambient_dim, std::vector<IntVector> generators);

    Eigen::Index ambient_dim() const { return dim_; }
    const std::vector<IntVector>& generators() const { return gens_; }
    std::size_t size() const { return gens_.size(); }
    bool empty() const { return gens_.empty(); }

    /// Generators as the columns of an n x k matrix.
    IntMatrix matrix() const;

    friend bool operator==(const MonomialSemigroup& a, const MonomialSemigroup& b)
    {
        return a.dim_ == b.dim_ && a.gens_ == b.gens_;
    }

private:
    Eigen::Index dim_;
    std::vector<IntVector> gens_;
};

/// Minimal generating set of ker_Z(A) ∩ N^n, in graded-lex order.
struct HilbertBasis {
    Eigen::Index ambient_dim = 0;
    std::vector<IntVector> elements;

    MonomialSemigroup as_semigroup() const { return MonomialSemigroup(ambient_dim, elements); }
};

/// Completion search over the nonnegative kernel (Contejean-Devie frontier,
/// processed degree by degree). Throws DimensionTooLarge when cols > max_dim.
HilbertBasis hilbert_basis(const IntMatrix& A, int max_dim = kHilbertBasisMaxDim);

/// Elements of `hb` supported inside I. L_I is a coordinate face of L, so
/// these are exactly the Hilbert basis of L_I.
HilbertBasis restrict_basis(const HilbertBasis& hb, const IndexSet& I);

HilbertBasis hilbert_basis_restricted(const IntMatrix& A, const IndexSet& I,
                                      int max_dim = kHilbertBasisMaxDim);

/// Coefficients c >= 0 with sum c_j * generator_j == t, if any.
///
/// Exact: the lattice part is solved through the HNF, the remaining
/// nonnegativity problem by LP-based branch and bound over the kernel.
std::optional<IntVector> represent(const MonomialSemigroup& S, const IntVector& t);

bool member(const MonomialSemigroup& S, const IntVector& t);

LatticeBasis generated_lattice(const MonomialSemigroup& S);

/// Generators with support inside I.
MonomialSemigroup restrict_semigroup(const MonomialSemigroup& S, const IndexSet& I);

} // namespace torinv
