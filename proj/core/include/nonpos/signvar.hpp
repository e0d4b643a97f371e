#pragma once

#include "nonpos/bipoly.hpp"
#include "nonpos/poly.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nonpos {

enum class Sign : char {
    plus = '+',
    minus = '-',
};

inline char sign_char(Sign s) { return static_cast<char>(s); }
inline Sign flipped(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }

/// Non-empty word over the alphabet {+, -}. The leftmost letter corresponds
/// to the highest exponent throughout (chain heads, leading coefficients).
class SignWord {
public:
    explicit SignWord(std::string letters);
    static SignWord from_signs(const std::vector<Sign>& signs);

    const std::string& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    Sign at(std::size_t index) const; // 0-based from the left

    /// 1-based position counted from the right, the indexing convention used
    /// for formula components.
    Sign at_from_right(std::size_t i) const;

    SignWord flipped_word() const;

    friend bool operator==(const SignWord& lhs, const SignWord& rhs) {
        return lhs.letters_ == rhs.letters_;
    }
    friend bool operator!=(const SignWord& lhs, const SignWord& rhs) { return !(lhs == rhs); }
    friend bool operator<(const SignWord& lhs, const SignWord& rhs) {
        return lhs.letters_ < rhs.letters_;
    }

private:
    std::string letters_;
};

/// Parses a user-supplied sign word; throws InputError with a diagnostic on
/// empty input or characters outside {+, -}.
SignWord parse_sign_word(std::string_view text);

/// Number of adjacent {+-, -+} pairs in the word.
unsigned count_sign_variations(const SignWord& word);

/// Sign word of the non-zero coefficients of f, descending exponent order.
/// Throws InputError on the zero polynomial.
SignWord sign_sequence(const RatPoly& f);

/// A conjunction of strict sign constraints on the coefficient sequence of a
/// bivariate polynomial: coefficient i is constrained "> 0" where sigma has
/// '+' and "< 0" where it has '-'. The word and the coefficient sequence are
/// aligned leftmost-to-highest-exponent.
struct SignVariationFormula {
    SignWord sigma;
    BiPoly domain;

    unsigned variation_count() const { return count_sign_variations(sigma); }
};

/// Pairs f's coefficient sequence with sigma; the word length must equal the
/// number of stored terms.
SignVariationFormula build_formula(const BiPoly& f, const SignWord& sigma);

/// Rewrites every "< 0" constraint as "(-a) > 0". The result lists the
/// positive-constraint polynomials in domain (descending exponent) order.
std::vector<RatPoly> normal_form(const SignVariationFormula& phi);

/// True iff every component constraint holds strictly at t0.
bool holds_at(const SignVariationFormula& phi, const Rational& t0);

/// Cheap constant-sign certificate: if the sign sequences of a(t) and a(-t)
/// both have zero variations and a(0) != 0, then a has no real roots and its
/// sign everywhere equals the sign of a(0). Returns nullopt when the
/// certificate does not apply (which says nothing about a's actual sign).
std::optional<Sign> constant_sign(const RatPoly& a);

struct EnumerationOptions {
    bool prune = true;
};

/// All sign variation formulas for f whose word has at least `threshold`
/// variations, in lexicographic word order with '-' ordered before '+'.
/// With pruning enabled, words contradicting a certified constant-sign
/// coefficient are dropped (such formulas are unsatisfiable).
/// Throws CapacityError when f has more than 24 terms.
std::vector<SignVariationFormula> enumerate_formulas(const BiPoly& f, unsigned threshold,
                                                     const EnumerationOptions& options = {});

} // namespace nonpos
