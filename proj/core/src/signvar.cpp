#include "nonpos/signvar.hpp"

#include "nonpos/errors.hpp"

#include <algorithm>

namespace nonpos {

SignWord::SignWord(std::string letters) : letters_(std::move(letters)) {
    if (letters_.empty()) {
        throw InputError("sign word must be non-empty");
    }
    for (const char c : letters_) {
        if (c != '+' && c != '-') {
            throw InputError(std::string("invalid sign word letter '") + c + "', expected '+' or '-'");
        }
    }
}

SignWord SignWord::from_signs(const std::vector<Sign>& signs) {
    std::string letters;
    letters.reserve(signs.size());
    for (const Sign s : signs) {
        letters.push_back(sign_char(s));
    }
    return SignWord(std::move(letters));
}

Sign SignWord::at(std::size_t index) const {
    internal_check(index < letters_.size(), "sign word index out of range");
    return letters_[index] == '+' ? Sign::plus : Sign::minus;
}

Sign SignWord::at_from_right(std::size_t i) const {
    internal_check(i >= 1 && i <= letters_.size(), "right-based sign word index out of range");
    return at(letters_.size() - i);
}

SignWord SignWord::flipped_word() const {
    std::string flipped_letters = letters_;
    for (char& c : flipped_letters) {
        c = (c == '+') ? '-' : '+';
    }
    return SignWord(std::move(flipped_letters));
}

SignWord parse_sign_word(std::string_view text) {
    try {
        return SignWord(std::string(text));
    } catch (const InputError& e) {
        throw InputError("cannot parse sign word \"" + std::string(text) + "\": " + e.what());
    }
}

unsigned count_sign_variations(const SignWord& word) {
    unsigned count = 0;
    const std::string& s = word.letters();
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (s[i] != s[i - 1]) {
            ++count;
        }
    }
    return count;
}

SignWord sign_sequence(const RatPoly& f) {
    if (f.is_zero()) {
        throw InputError("sign sequence of the zero polynomial is undefined");
    }
    std::string letters;
    for (const auto& [exp, coeff] : f.coefficient_sequence()) {
        letters.push_back(coeff > 0 ? '+' : '-');
    }
    return SignWord(std::move(letters));
}

SignVariationFormula build_formula(const BiPoly& f, const SignWord& sigma) {
    if (sigma.length() != f.term_count()) {
        throw InputError("sign word length " + std::to_string(sigma.length()) +
                         " does not match the coefficient sequence length " +
                         std::to_string(f.term_count()));
    }
    return SignVariationFormula{sigma, f};
}

std::vector<RatPoly> normal_form(const SignVariationFormula& phi) {
    std::vector<RatPoly> components;
    components.reserve(phi.domain.term_count());
    const auto& terms = phi.domain.terms();
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (phi.sigma.at(i) == Sign::plus) {
            components.push_back(terms[i].coefficient);
        } else {
            components.push_back(-terms[i].coefficient);
        }
    }
    return components;
}

bool holds_at(const SignVariationFormula& phi, const Rational& t0) {
    const auto& terms = phi.domain.terms();
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const Rational value = terms[i].coefficient(t0);
        if (phi.sigma.at(i) == Sign::plus ? !(value > 0) : !(value < 0)) {
            return false;
        }
    }
    return true;
}

std::optional<Sign> constant_sign(const RatPoly& a) {
    if (a.is_zero()) {
        return std::nullopt;
    }
    const Rational at_zero = a(Rational(0));
    if (at_zero == 0) {
        return std::nullopt;
    }
    // a(-t): negate odd-exponent coefficients.
    std::vector<Rational> mirrored = a.coefficients();
    for (std::size_t i = 1; i < mirrored.size(); i += 2) {
        mirrored[i] = -mirrored[i];
    }
    const RatPoly a_mirror{std::move(mirrored)};
    // Zero variations certify the absence of positive roots (and of negative
    // roots via the mirror), so the sign of a(0) is the sign everywhere.
    if (count_sign_variations(sign_sequence(a)) != 0 ||
        count_sign_variations(sign_sequence(a_mirror)) != 0) {
        return std::nullopt;
    }
    return at_zero > 0 ? Sign::plus : Sign::minus;
}

std::vector<SignVariationFormula> enumerate_formulas(const BiPoly& f, unsigned threshold,
                                                     const EnumerationOptions& options) {
    if (f.is_zero()) {
        throw InputError("cannot enumerate formulas for the zero polynomial");
    }
    const std::size_t width = f.term_count();
    if (width > 24) {
        throw CapacityError("coefficient sequence of length " + std::to_string(width) +
                            " exceeds the enumeration guard of 24");
    }

    std::vector<std::optional<Sign>> forced(width);
    if (options.prune) {
        const auto& terms = f.terms();
        for (std::size_t i = 0; i < width; ++i) {
            forced[i] = constant_sign(terms[i].coefficient);
        }
    }

    std::vector<SignVariationFormula> out;
    const std::uint64_t total = std::uint64_t(1) << width;
    std::string letters(width, '-');
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        bool pruned = false;
        for (std::size_t pos = 0; pos < width; ++pos) {
            const bool bit = (mask >> (width - 1 - pos)) & 1u;
            letters[pos] = bit ? '+' : '-';
            if (forced[pos] && sign_char(*forced[pos]) != letters[pos]) {
                pruned = true;
            }
        }
        if (pruned) {
            continue;
        }
        SignWord sigma(letters);
        if (count_sign_variations(sigma) < threshold) {
            continue;
        }
        out.push_back(SignVariationFormula{std::move(sigma), f});
    }
    return out;
}

} // namespace nonpos
