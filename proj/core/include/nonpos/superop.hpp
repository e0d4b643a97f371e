#pragma once

#include "nonpos/bipoly.hpp"
#include "nonpos/poly.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace nonpos {

/// Square matrix of Gaussian-rational polynomial entries. Indices are
/// 1-based, matching the usual linear-algebra conventions for these maps.
class ParamMatrix {
public:
    explicit ParamMatrix(std::size_t n);

    std::size_t dim() const { return n_; }

    GaussRatPoly& entry(std::size_t i, std::size_t j);
    const GaussRatPoly& entry(std::size_t i, std::size_t j) const;

    ParamMatrix conjugate_transpose() const;
    bool is_selfadjoint() const;

    friend ParamMatrix operator*(const ParamMatrix& lhs, const ParamMatrix& rhs);
    friend ParamMatrix operator+(const ParamMatrix& lhs, const ParamMatrix& rhs);
    /// Entrywise scale by a real polynomial.
    friend ParamMatrix operator*(const RatPoly& scale, const ParamMatrix& m);
    friend bool operator==(const ParamMatrix& lhs, const ParamMatrix& rhs);
    friend bool operator!=(const ParamMatrix& lhs, const ParamMatrix& rhs) { return !(lhs == rhs); }

private:
    std::size_t n_;
    std::vector<GaussRatPoly> entries_; // row-major
};

/// Square matrix of Gaussian-rational scalars (a parameter matrix with the
/// parameter substituted).
class GaussMatrix {
public:
    explicit GaussMatrix(std::size_t n);

    std::size_t dim() const { return n_; }
    GaussRational& entry(std::size_t i, std::size_t j);
    const GaussRational& entry(std::size_t i, std::size_t j) const;

    bool is_selfadjoint() const;

    friend bool operator==(const GaussMatrix& lhs, const GaussMatrix& rhs);

private:
    std::size_t n_;
    std::vector<GaussRational> entries_;
};

struct FamilyTerm {
    RatPoly alpha;      // real polynomial with no real roots
    ParamMatrix matrix; // n x n
};

/// One-parameter family of hermiticity-preserving superoperators
/// X -> sum_r alpha_r(t) A_r(t) X A_r(t)*. Instances are produced by
/// validate_family and are immutable afterwards.
class Family {
public:
    std::size_t dim() const { return n_; }
    const std::vector<FamilyTerm>& terms() const { return terms_; }

    /// Negative-eigenvalue count that forces nonpositivity: (n-1)^2 + 1.
    unsigned nonpositivity_threshold() const {
        return static_cast<unsigned>(n_ * n_ - 2 * n_ + 2);
    }

private:
    friend Family validate_family(std::size_t n, std::vector<FamilyTerm> terms);
    Family(std::size_t n, std::vector<FamilyTerm> terms) : n_(n), terms_(std::move(terms)) {}

    std::size_t n_;
    std::vector<FamilyTerm> terms_;
};

/// Checks every family constraint (n >= 1, at least one term, square
/// matrices of matching dimension, alphas non-zero and without real roots)
/// and reports all violations at once in a single InputError.
Family validate_family(std::size_t n, std::vector<FamilyTerm> terms);

/// The n^2 x n^2 matrix of the channel's Choi image in the standard product
/// basis. Row (i,j) / column (k,l) map to flat index n*(i-1)+j / n*(k-1)+l.
struct CJMatrix {
    ParamMatrix matrix;
};

/// Builds the CJ matrix twice -- via the closed entry formula and via the
/// block layout of the images of the matrix units -- and insists the two
/// agree and the result is selfadjoint. A disagreement is an internal bug,
/// never a data problem.
CJMatrix cj_matrix(const Family& family);

/// Exact characteristic polynomial det(M - xI) as an element of R[t][x],
/// computed by the Faddeev-LeVerrier recurrence. The input must be
/// selfadjoint; imaginary parts of the resulting coefficients are checked to
/// vanish identically and then discarded.
BiPoly char_poly(const ParamMatrix& m);
inline BiPoly char_poly(const CJMatrix& m) { return char_poly(m.matrix); }

/// Scalar counterpart: det(M - xI) for a selfadjoint Gaussian-rational
/// matrix, as a univariate real polynomial.
RatPoly char_poly(const GaussMatrix& m);

/// The CJ matrix with t = t0 substituted entrywise.
GaussMatrix evaluate_family_cj(const Family& family, const Rational& t0);

} // namespace nonpos
