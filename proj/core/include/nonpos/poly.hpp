#pragma once

#include "nonpos/rational.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nonpos {

/// Univariate polynomial with exact rational coefficients.
///
/// Coefficients are stored ascending by exponent and kept trimmed: the last
/// stored coefficient of a non-zero polynomial is non-zero, and the zero
/// polynomial is the empty sequence. The degree of the zero polynomial is
/// deliberately not representable; callers branch on is_zero() first.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> ascending_coefficients);

    static RatPoly constant(Rational value);
    static RatPoly monomial(Rational coefficient, std::size_t exponent);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    /// Requires a non-zero polynomial.
    std::size_t degree() const;
    /// Requires a non-zero polynomial.
    const Rational& leading_coefficient() const;

    /// Coefficient of t^exponent; zero when the exponent exceeds the degree.
    Rational coefficient(std::size_t exponent) const;
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    /// Non-zero coefficients in descending exponent order.
    std::vector<std::pair<std::size_t, Rational>> coefficient_sequence() const;

    Rational operator()(const Rational& t) const;
    RatPoly derivative() const;

    RatPoly operator-() const;
    RatPoly& operator+=(const RatPoly& rhs);
    RatPoly& operator-=(const RatPoly& rhs);

    friend RatPoly operator+(RatPoly lhs, const RatPoly& rhs) { return lhs += rhs; }
    friend RatPoly operator-(RatPoly lhs, const RatPoly& rhs) { return lhs -= rhs; }
    friend RatPoly operator*(const RatPoly& lhs, const RatPoly& rhs);
    friend RatPoly operator*(const RatPoly& lhs, const Rational& scalar);
    friend RatPoly operator*(const Rational& scalar, const RatPoly& rhs) { return rhs * scalar; }

    friend bool operator==(const RatPoly& lhs, const RatPoly& rhs) { return lhs.coeffs_ == rhs.coeffs_; }
    friend bool operator!=(const RatPoly& lhs, const RatPoly& rhs) { return !(lhs == rhs); }

    /// Exact division with remainder: p = q * quotient + remainder and either
    /// remainder = 0 or deg(remainder) < deg(q). Throws on q = 0.
    static std::pair<RatPoly, RatPoly> divmod(const RatPoly& p, const RatPoly& q);

    /// Descending-power rendering, e.g. "-37/16*t^2 + 29/16*t - 97/16".
    std::string to_string(std::string_view variable = "t") const;

private:
    void trim();

    std::vector<Rational> coeffs_; // ascending by exponent
};

/// Parses an ascending coefficient list where each element came from text
/// ("p/q" or integer strings). Convenience for tests and document parsing.
RatPoly poly_from_strings(std::span<const std::string_view> ascending);

/// Complex rational scalar (element of Q(i)).
struct GaussRational {
    Rational re;
    Rational im;

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    GaussRational conjugate() const { return {re, -im}; }

    GaussRational operator-() const { return {-re, -im}; }
    GaussRational& operator+=(const GaussRational& rhs);
    GaussRational& operator-=(const GaussRational& rhs);

    friend GaussRational operator+(GaussRational lhs, const GaussRational& rhs) { return lhs += rhs; }
    friend GaussRational operator-(GaussRational lhs, const GaussRational& rhs) { return lhs -= rhs; }
    friend GaussRational operator*(const GaussRational& lhs, const GaussRational& rhs);
    friend GaussRational operator/(const GaussRational& lhs, const GaussRational& rhs);
    friend bool operator==(const GaussRational& lhs, const GaussRational& rhs) {
        return lhs.re == rhs.re && lhs.im == rhs.im;
    }
};

std::string to_string(const GaussRational& z);

/// Polynomial function R -> C with exact Gaussian-rational coefficients,
/// stored as a real/imaginary pair of RatPoly.
class GaussRatPoly {
public:
    GaussRatPoly() = default;
    GaussRatPoly(RatPoly re, RatPoly im) : re_(std::move(re)), im_(std::move(im)) {}
    /* implicit */ GaussRatPoly(RatPoly re) : re_(std::move(re)) {}

    static GaussRatPoly constant(GaussRational value);

    const RatPoly& real() const { return re_; }
    const RatPoly& imag() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussRatPoly conjugate() const { return {re_, -im_}; }
    GaussRational operator()(const Rational& t) const { return {re_(t), im_(t)}; }

    GaussRatPoly operator-() const { return {-re_, -im_}; }
    GaussRatPoly& operator+=(const GaussRatPoly& rhs);
    GaussRatPoly& operator-=(const GaussRatPoly& rhs);

    friend GaussRatPoly operator+(GaussRatPoly lhs, const GaussRatPoly& rhs) { return lhs += rhs; }
    friend GaussRatPoly operator-(GaussRatPoly lhs, const GaussRatPoly& rhs) { return lhs -= rhs; }
    friend GaussRatPoly operator*(const GaussRatPoly& lhs, const GaussRatPoly& rhs);
    friend GaussRatPoly operator*(const RatPoly& lhs, const GaussRatPoly& rhs);
    friend bool operator==(const GaussRatPoly& lhs, const GaussRatPoly& rhs) {
        return lhs.re_ == rhs.re_ && lhs.im_ == rhs.im_;
    }

    std::string to_string(std::string_view variable = "t") const;

private:
    RatPoly re_;
    RatPoly im_;
};

} // namespace nonpos
