#pragma once

#include "torinv/convex.hpp"
#include "torinv/lattice.hpp"

#include <optional>

namespace torinv {

/// Default cap on n for the 2^n subset scans in this module.
inline constexpr int kSubsetMaxDim = 16;

/// Diagonal torus action on k^n given by an r x n weight matrix.
///
/// Column i is the weight of coordinate i. The matrix must have full row rank
/// r <= n and no zero column.
class TorusRep {
public:
    explicit TorusRep(IntMatrix weights);

    Eigen::Index rank() const { return weights_.rows(); }
    Eigen::Index dim() const { return weights_.cols(); }
    const IntMatrix& weights() const { return weights_; }

    /// Weights of the coordinates in I as the columns of a rational matrix.
    RatMatrix weight_points(const IndexSet& I) const;
    RatMatrix weight_points(std::uint32_t mask) const { return weight_points(mask_to_set(mask)); }

    void check_index_set(const IndexSet& I) const;

private:
    IntMatrix weights_;
};

struct NullconeDecomposition {
    std::vector<IndexSet> components;
};

enum class Containment { Contained, NotContained, Unknown };

const char* to_string(Containment c);

struct NullconePair {
    IndexSet I;
    IndexSet J;
    Containment classification;
};

struct SepVarTriple {
    IndexSet K;
    IndexSet I;
    IndexSet J;
};

struct SepVarDecomposition {
    bool includes_graph = true;
    bool simple = false;
    std::vector<NullconePair> nullcone_pairs;
    std::vector<SepVarTriple> triples;
};

/// Maximal I with 0 outside conv(wt(I)), in lexicographic order.
NullconeDecomposition nullcone(const TorusRep& rep, int max_dim = kSubsetMaxDim);

/// Closedness of the orbit of any point with the given support.
bool is_orbit_closed(const TorusRep& rep, const IndexSet& support);

/// Every I with 0 in relint conv(wt(I)) has weights spanning Q^r.
bool sepvar_is_simple(const TorusRep& rep, int max_dim = kSubsetMaxDim);

/// Throws NotNullconeComponent when I or J is not a component.
Containment graph_closure_classify(const TorusRep& rep, const IndexSet& I, const IndexSet& J,
                                   int max_dim = kSubsetMaxDim);
Containment graph_closure_classify(const TorusRep& rep, const NullconeDecomposition& nc,
                                   const IndexSet& I, const IndexSet& J);

SepVarDecomposition sepvar_decompose(const TorusRep& rep, int max_dim = kSubsetMaxDim);

} // namespace torinv
