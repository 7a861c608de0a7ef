#pragma once

#include "torinv/semigroup.hpp"
#include "torinv/torus_rep.hpp"

#include <cstdint>
#include <optional>
#include <variant>

namespace torinv {

inline constexpr int kCharPCap = 8;
inline constexpr std::uint64_t kSearchBudget = 200000;
inline constexpr long kOracleModulus = 210;
inline constexpr std::uint64_t kOracleBudget = 1000000;

/// α ∈ L supported in I whose lattice membership in Z·S_I fails.
struct LatticeFailure {
    IndexSet I;
    IntVector alpha;
};

/// α ∈ L and i ∈ supp(α) with no generator γ satisfying i ∈ supp(γ) ⊆ supp(α).
struct SupportFailure {
    IntVector alpha;
    int coordinate;
};

using Char0Certificate = std::variant<std::monostate, LatticeFailure, SupportFailure>;

struct Char0Verdict {
    bool separating = false;
    Char0Certificate certificate;
};

/// p^m·h written as an N-combination of the generators.
struct PowerWitness {
    IntVector h;
    int m = 0;
    IntVector coefficients;
};

/// Yes(m) when p^m·L ⊆ S was certified, otherwise NoUpTo(cap).
struct CharPVerdict {
    bool yes = false;
    int m = 0;
    int p = 0;
    std::vector<PowerWitness> witnesses; // one per Hilbert basis element when yes
    std::optional<IntVector> obstruction; // Hilbert basis element with no p^m·h ∈ S, m <= cap
};

/// Throws GeneratorNotInvariant unless every generator lies in ker A ∩ N^n.
void check_generators(const TorusRep& rep, const MonomialSemigroup& S);

Char0Verdict check_separating_char0(const TorusRep& rep, const MonomialSemigroup& S,
                                    int max_dim = kHilbertBasisMaxDim);
Char0Verdict check_separating_char0(const TorusRep& rep, const HilbertBasis& hb, const MonomialSemigroup& S);

CharPVerdict check_separating_charp(const TorusRep& rep, const MonomialSemigroup& S, int p,
                                    int cap = kCharPCap, int max_dim = kHilbertBasisMaxDim);
CharPVerdict check_separating_charp(const TorusRep& rep, const HilbertBasis& hb, const MonomialSemigroup& S,
                                    int p, int cap = kCharPCap);

/// Re-checks a failure certificate against the raw definitions.
bool verify_certificate(const TorusRep& rep, const MonomialSemigroup& S, const Char0Certificate& cert);
bool verify_certificate(const TorusRep& rep, const MonomialSemigroup& S, const CharPVerdict& verdict);

/// Hilbert basis elements of L with at most `bound` nonzero entries.
MonomialSemigroup small_support_generators(const TorusRep& rep, int bound, int max_dim = kHilbertBasisMaxDim);

/// Invariants in at most 2r+1 variables; the separating property is asserted.
MonomialSemigroup construct_2rplus1(const TorusRep& rep, int max_dim = kHilbertBasisMaxDim);

struct KernelSpan {
    bool spans = false;
    std::vector<IntVector> generators;
};

/// Kernel vectors supported on r+1 coordinates, and whether they span ker_Z A.
KernelSpan kernel_small_support_spans(const TorusRep& rep, int max_dim = kSubsetMaxDim);

struct MinimalSearch {
    bool found = false;
    std::size_t size = 0;
    std::vector<std::size_t> indices; // into the pool
    MonomialSemigroup witness;
    bool pool_relative = true;
    std::size_t largest_size_searched = 0;
};

struct MinimalSearchOptions {
    std::size_t cap = 0; // 0: the pool size
    std::uint64_t budget = kSearchBudget;
    std::optional<int> prime;
    int charp_cap = kCharPCap;
    int max_dim = kHilbertBasisMaxDim;
};

/// Smallest separating subset of `pool`, scanning sizes upward in lex order.
MinimalSearch minimal_monomial_size(const TorusRep& rep, const MonomialSemigroup& pool,
                                    const MinimalSearchOptions& options = {});

/// Point of the torus closure: each coordinate is zero or ζ^c for ζ a
/// primitive M-th root of unity.
struct TorusPoint {
    long modulus = 1;
    std::vector<std::optional<long>> coords;

    /// Zero, or the class of x^γ at this point.
    std::optional<long> evaluate(const IntVector& gamma) const;
};

struct OracleWitness {
    TorusPoint u;
    TorusPoint v;
    IntVector alpha;
};

/// Structured search for a point pair split by L but not by S. A miss proves
/// nothing.
std::optional<OracleWitness> oracle_refute(const TorusRep& rep, const MonomialSemigroup& S,
                                           long modulus = kOracleModulus, std::uint64_t budget = kOracleBudget,
                                           int max_dim = kHilbertBasisMaxDim);

/// α separates the pair, α ∈ L, and no generator of S does.
bool verify_oracle_witness(const TorusRep& rep, const MonomialSemigroup& S, const OracleWitness& w);

bool is_prime(long p);

} // namespace torinv
