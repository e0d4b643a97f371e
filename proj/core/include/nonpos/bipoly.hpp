#pragma once

#include "nonpos/poly.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace nonpos {

/// One term of a bivariate polynomial viewed as an element of R[t][x]:
/// coefficient(t) * x^exponent.
struct BiTerm {
    std::size_t exponent; // power of x
    RatPoly coefficient;  // non-zero polynomial in t
};

/// Polynomial in x whose coefficients are exact rational polynomials in t.
///
/// Terms are stored in strictly decreasing x-exponent order and identically
/// zero coefficients are never stored, so terms() is already the coefficient
/// sequence consumed by the sign-variation machinery.
class BiPoly {
public:
    BiPoly() = default;

    /// Builds from x-ascending coefficients (index = exponent); zero
    /// coefficients are dropped.
    static BiPoly from_x_coefficients(std::vector<RatPoly> ascending);

    /// Builds from explicit terms; exponents must be distinct. Zero
    /// coefficients are dropped and terms are sorted descending.
    static BiPoly from_terms(std::vector<BiTerm> terms);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    /// Requires a non-zero polynomial.
    std::size_t degree_x() const;

    /// Coefficient sequence: descending x-exponents, all coefficients non-zero.
    const std::vector<BiTerm>& terms() const { return terms_; }

    /// Coefficient of x^exponent; the zero polynomial when absent.
    RatPoly coefficient(std::size_t exponent) const;

    /// The polynomial f(t, -x): coefficients of odd x-powers are negated.
    /// An involution.
    BiPoly negate_x() const;

    /// Substitutes t = t0, producing a univariate polynomial in x.
    /// Coefficients that vanish at t0 disappear from the result.
    RatPoly evaluate_t(const Rational& t0) const;

    Rational evaluate(const Rational& t0, const Rational& x0) const;

    friend bool operator==(const BiPoly& lhs, const BiPoly& rhs);
    friend bool operator!=(const BiPoly& lhs, const BiPoly& rhs) { return !(lhs == rhs); }

    std::string to_string(std::string_view tvar = "t", std::string_view xvar = "x") const;

private:
    std::vector<BiTerm> terms_; // strictly decreasing exponents
};

} // namespace nonpos
