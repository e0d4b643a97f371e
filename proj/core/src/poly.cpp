#include "nonpos/poly.hpp"

#include "nonpos/errors.hpp"

#include <algorithm>
#include <sstream>

namespace nonpos {

RatPoly::RatPoly(std::vector<Rational> ascending_coefficients)
    : coeffs_(std::move(ascending_coefficients)) {
    trim();
}

RatPoly RatPoly::constant(Rational value) {
    if (value == 0) {
        return RatPoly();
    }
    std::vector<Rational> c;
    c.push_back(std::move(value));
    return RatPoly(std::move(c));
}

RatPoly RatPoly::monomial(Rational coefficient, std::size_t exponent) {
    if (coefficient == 0) {
        return RatPoly();
    }
    std::vector<Rational> c(exponent + 1, Rational(0));
    c[exponent] = std::move(coefficient);
    return RatPoly(std::move(c));
}

void RatPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

std::size_t RatPoly::degree() const {
    internal_check(!is_zero(), "degree() called on the zero polynomial");
    return coeffs_.size() - 1;
}

const Rational& RatPoly::leading_coefficient() const {
    internal_check(!is_zero(), "leading_coefficient() called on the zero polynomial");
    return coeffs_.back();
}

Rational RatPoly::coefficient(std::size_t exponent) const {
    if (exponent >= coeffs_.size()) {
        return Rational(0);
    }
    return coeffs_[exponent];
}

std::vector<std::pair<std::size_t, Rational>> RatPoly::coefficient_sequence() const {
    std::vector<std::pair<std::size_t, Rational>> seq;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i] != 0) {
            seq.emplace_back(i, coeffs_[i]);
        }
    }
    return seq;
}

Rational RatPoly::operator()(const Rational& t) const {
    Rational acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * t + coeffs_[i];
    }
    return acc;
}

RatPoly RatPoly::derivative() const {
    if (coeffs_.size() <= 1) {
        return RatPoly();
    }
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        d[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    }
    return RatPoly(std::move(d));
}

RatPoly RatPoly::operator-() const {
    RatPoly out(*this);
    for (auto& c : out.coeffs_) {
        c = -c;
    }
    return out;
}

RatPoly& RatPoly::operator+=(const RatPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    trim();
    return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] -= rhs.coeffs_[i];
    }
    trim();
    return *this;
}

RatPoly operator*(const RatPoly& lhs, const RatPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) {
        return RatPoly();
    }
    std::vector<Rational> prod(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            if (rhs.coeffs_[j] != 0) {
                prod[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
            }
        }
    }
    return RatPoly(std::move(prod));
}

RatPoly operator*(const RatPoly& lhs, const Rational& scalar) {
    if (scalar == 0) {
        return RatPoly();
    }
    RatPoly out(lhs);
    for (auto& c : out.coeffs_) {
        c *= scalar;
    }
    return out;
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& p, const RatPoly& q) {
    if (q.is_zero()) {
        throw InputError("polynomial division by the zero polynomial");
    }
    RatPoly remainder(p);
    if (p.is_zero() || p.degree() < q.degree()) {
        return {RatPoly(), remainder};
    }
    std::vector<Rational> quot(p.degree() - q.degree() + 1, Rational(0));
    const Rational& lead_q = q.leading_coefficient();
    while (!remainder.is_zero() && remainder.degree() >= q.degree()) {
        const std::size_t shift = remainder.degree() - q.degree();
        const Rational factor = remainder.leading_coefficient() / lead_q;
        quot[shift] = factor;
        remainder -= RatPoly::monomial(factor, shift) * q;
    }
    return {RatPoly(std::move(quot)), std::move(remainder)};
}

std::string RatPoly::to_string(std::string_view variable) const {
    if (is_zero()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (const auto& [exp, coeff] : coefficient_sequence()) {
        const bool negative = coeff < 0;
        const Rational magnitude = negative ? Rational(-coeff) : coeff;
        if (first) {
            if (negative) {
                out << '-';
            }
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        const bool unit = magnitude == 1;
        if (exp == 0) {
            out << nonpos::to_string(magnitude);
        } else {
            if (!unit) {
                out << nonpos::to_string(magnitude) << '*';
            }
            out << variable;
            if (exp > 1) {
                out << '^' << exp;
            }
        }
    }
    return out.str();
}

RatPoly poly_from_strings(std::span<const std::string_view> ascending) {
    std::vector<Rational> coeffs;
    coeffs.reserve(ascending.size());
    for (const auto& s : ascending) {
        coeffs.push_back(parse_rational(s));
    }
    return RatPoly(std::move(coeffs));
}

GaussRational& GaussRational::operator+=(const GaussRational& rhs) {
    re += rhs.re;
    im += rhs.im;
    return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& rhs) {
    re -= rhs.re;
    im -= rhs.im;
    return *this;
}

GaussRational operator*(const GaussRational& lhs, const GaussRational& rhs) {
    return {lhs.re * rhs.re - lhs.im * rhs.im, lhs.re * rhs.im + lhs.im * rhs.re};
}

GaussRational operator/(const GaussRational& lhs, const GaussRational& rhs) {
    if (rhs.is_zero()) {
        throw InputError("division by zero Gaussian rational");
    }
    const Rational norm = rhs.re * rhs.re + rhs.im * rhs.im;
    const GaussRational scaled = lhs * rhs.conjugate();
    return {scaled.re / norm, scaled.im / norm};
}

std::string to_string(const GaussRational& z) {
    if (z.im == 0) {
        return to_string(z.re);
    }
    std::string out = to_string(z.re);
    out += (z.im < 0 ? " - " : " + ");
    const Rational mag = z.im < 0 ? Rational(-z.im) : z.im;
    if (mag != 1) {
        out += to_string(mag);
        out += '*';
    }
    out += 'i';
    return out;
}

GaussRatPoly GaussRatPoly::constant(GaussRational value) {
    return {RatPoly::constant(std::move(value.re)), RatPoly::constant(std::move(value.im))};
}

GaussRatPoly& GaussRatPoly::operator+=(const GaussRatPoly& rhs) {
    re_ += rhs.re_;
    im_ += rhs.im_;
    return *this;
}

GaussRatPoly& GaussRatPoly::operator-=(const GaussRatPoly& rhs) {
    re_ -= rhs.re_;
    im_ -= rhs.im_;
    return *this;
}

GaussRatPoly operator*(const GaussRatPoly& lhs, const GaussRatPoly& rhs) {
    return {lhs.re_ * rhs.re_ - lhs.im_ * rhs.im_, lhs.re_ * rhs.im_ + lhs.im_ * rhs.re_};
}

GaussRatPoly operator*(const RatPoly& lhs, const GaussRatPoly& rhs) {
    return {lhs * rhs.re_, lhs * rhs.im_};
}

std::string GaussRatPoly::to_string(std::string_view variable) const {
    if (im_.is_zero()) {
        return re_.to_string(variable);
    }
    std::string out = "(";
    out += re_.to_string(variable);
    out += ") + i*(";
    out += im_.to_string(variable);
    out += ")";
    return out;
}

} // namespace nonpos
