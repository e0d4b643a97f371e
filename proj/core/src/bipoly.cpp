#include "nonpos/bipoly.hpp"

#include "nonpos/errors.hpp"

#include <algorithm>
#include <sstream>

namespace nonpos {

BiPoly BiPoly::from_x_coefficients(std::vector<RatPoly> ascending) {
    BiPoly out;
    for (std::size_t exp = ascending.size(); exp-- > 0;) {
        if (!ascending[exp].is_zero()) {
            out.terms_.push_back(BiTerm{exp, std::move(ascending[exp])});
        }
    }
    return out;
}

BiPoly BiPoly::from_terms(std::vector<BiTerm> terms) {
    std::erase_if(terms, [](const BiTerm& term) { return term.coefficient.is_zero(); });
    std::sort(terms.begin(), terms.end(),
              [](const BiTerm& a, const BiTerm& b) { return a.exponent > b.exponent; });
    for (std::size_t i = 1; i < terms.size(); ++i) {
        internal_check(terms[i - 1].exponent > terms[i].exponent,
                       "duplicate x-exponent in BiPoly term list");
    }
    BiPoly out;
    out.terms_ = std::move(terms);
    return out;
}

std::size_t BiPoly::degree_x() const {
    internal_check(!is_zero(), "degree_x() called on the zero polynomial");
    return terms_.front().exponent;
}

RatPoly BiPoly::coefficient(std::size_t exponent) const {
    for (const auto& term : terms_) {
        if (term.exponent == exponent) {
            return term.coefficient;
        }
        if (term.exponent < exponent) {
            break;
        }
    }
    return RatPoly();
}

BiPoly BiPoly::negate_x() const {
    BiPoly out(*this);
    for (auto& term : out.terms_) {
        if (term.exponent % 2 == 1) {
            term.coefficient = -term.coefficient;
        }
    }
    return out;
}

RatPoly BiPoly::evaluate_t(const Rational& t0) const {
    if (is_zero()) {
        return RatPoly();
    }
    std::vector<Rational> coeffs(degree_x() + 1, Rational(0));
    for (const auto& term : terms_) {
        coeffs[term.exponent] = term.coefficient(t0);
    }
    return RatPoly(std::move(coeffs));
}

Rational BiPoly::evaluate(const Rational& t0, const Rational& x0) const {
    return evaluate_t(t0)(x0);
}

bool operator==(const BiPoly& lhs, const BiPoly& rhs) {
    if (lhs.terms_.size() != rhs.terms_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < lhs.terms_.size(); ++i) {
        if (lhs.terms_[i].exponent != rhs.terms_[i].exponent ||
            lhs.terms_[i].coefficient != rhs.terms_[i].coefficient) {
            return false;
        }
    }
    return true;
}

std::string BiPoly::to_string(std::string_view tvar, std::string_view xvar) const {
    if (is_zero()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (const auto& term : terms_) {
        if (!first) {
            out << " + ";
        }
        first = false;
        const RatPoly& c = term.coefficient;
        if (term.exponent == 0) {
            out << c.to_string(tvar);
            continue;
        }
        const bool is_constant_coeff = c.is_constant();
        if (is_constant_coeff) {
            const Rational value = c.coefficient(0);
            if (value == 1) {
                // bare power
            } else if (value == -1) {
                out << '-';
            } else {
                out << nonpos::to_string(value) << '*';
            }
        } else {
            out << '(' << c.to_string(tvar) << ")*";
        }
        out << xvar;
        if (term.exponent > 1) {
            out << '^' << term.exponent;
        }
    }
    return out.str();
}

} // namespace nonpos
