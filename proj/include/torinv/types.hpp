#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace torinv {

namespace mp = boost::multiprecision;

// Expression templates are off: Eigen builds its own expression trees and the
// two layers do not compose.
using Integer = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using IntVector = Vector<Integer>;
using RatMatrix = Matrix<Rational>;
using RatVector = Vector<Rational>;

/// Sorted list of 0-based coordinate indices.
using IndexSet = std::vector<int>;

// ---------------------------------------------------------------------------
// Errors

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// Resource caps. The CLI maps both to exit code 3.
class ResourceCap : public Error {
public:
    using Error::Error;
};

class DimensionTooLarge : public ResourceCap {
public:
    DimensionTooLarge(int n, int cap)
        : ResourceCap("dimension " + std::to_string(n) + " exceeds enumeration cap " +
                      std::to_string(cap)),
          dim(n), limit(cap) {}
    int dim;
    int limit;
};

class SearchSpaceTooLarge : public ResourceCap {
public:
    using ResourceCap::ResourceCap;
};

class NotInHull : public Error {
public:
    NotInHull() : Error("target is not in the convex hull of the points") {}
};

class NotNullconeComponent : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class GeneratorNotInvariant : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

/// A guaranteed postcondition failed. Always an implementation bug.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

// ---------------------------------------------------------------------------
// Small helpers shared across modules

/// Floor division for integers (rounds toward negative infinity).
template <typename T>
T floor_div(const T& a, const T& b)
{
    T q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

/// Mask <-> index set conversions for subset enumeration (n <= 31).
inline IndexSet mask_to_set(std::uint32_t mask)
{
    IndexSet out;
    for (int i = 0; mask != 0; ++i, mask >>= 1)
        if (mask & 1u)
            out.push_back(i);
    return out;
}

inline std::uint32_t set_to_mask(const IndexSet& set)
{
    std::uint32_t mask = 0;
    for (int i : set)
        mask |= (1u << i);
    return mask;
}

template <typename Derived>
IndexSet support(const Eigen::MatrixBase<Derived>& v)
{
    IndexSet out;
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (v(i) != 0)
            out.push_back(static_cast<int>(i));
    return out;
}

template <typename Derived>
std::uint32_t support_mask(const Eigen::MatrixBase<Derived>& v)
{
    std::uint32_t mask = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (v(i) != 0)
            mask |= (1u << i);
    return mask;
}

/// Columns of `m` selected by `cols`, in order.
template <typename Scalar>
Matrix<Scalar> select_columns(const Matrix<Scalar>& m, const IndexSet& cols)
{
    Matrix<Scalar> out(m.rows(), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t k = 0; k < cols.size(); ++k)
        out.col(static_cast<Eigen::Index>(k)) = m.col(cols[k]);
    return out;
}

inline IntVector make_int_vector(std::initializer_list<long> values)
{
    IntVector v(static_cast<Eigen::Index>(values.size()));
    Eigen::Index i = 0;
    for (long x : values)
        v(i++) = x;
    return v;
}

inline IntMatrix make_int_matrix(std::initializer_list<std::initializer_list<long>> rows)
{
    const auto r = static_cast<Eigen::Index>(rows.size());
    const auto c = r ? static_cast<Eigen::Index>(rows.begin()->size()) : 0;
    IntMatrix m(r, c);
    Eigen::Index i = 0;
    for (const auto& row : rows) {
        if (static_cast<Eigen::Index>(row.size()) != c)
            throw InvalidInput("ragged matrix literal");
        Eigen::Index j = 0;
        for (long x : row)
            m(i, j++) = x;
        ++i;
    }
    return m;
}

} // namespace torinv
