#include "nonpos/sturm.hpp"

#include "nonpos/errors.hpp"

#include <sstream>

namespace nonpos {

Sign sign_at_infinity(const RatPoly& h, Infinity direction) {
    internal_check(!h.is_zero(), "sign at infinity of the zero polynomial");
    const bool leading_positive = h.leading_coefficient() > 0;
    if (direction == Infinity::positive || h.degree() % 2 == 0) {
        return leading_positive ? Sign::plus : Sign::minus;
    }
    return leading_positive ? Sign::minus : Sign::plus;
}

SturmChain canonical_sturm(const RatPoly& p, const RatPoly& q) {
    if (p.is_zero() || q.is_zero()) {
        throw InputError("canonical Sturm chain requires non-zero polynomials");
    }
    SturmChain chain;
    chain.polys.push_back(p);
    chain.polys.push_back(q);
    while (true) {
        const RatPoly& divisor = chain.polys[chain.polys.size() - 1];
        const RatPoly& dividend = chain.polys[chain.polys.size() - 2];
        RatPoly remainder = RatPoly::divmod(dividend, divisor).second;
        if (remainder.is_zero()) {
            break;
        }
        chain.polys.push_back(-remainder);
    }
    return chain;
}

SignWord infinity_word(const SturmChain& chain, Infinity direction) {
    internal_check(!chain.polys.empty(), "infinity word of an empty chain");
    std::vector<Sign> signs;
    signs.reserve(chain.polys.size());
    for (const RatPoly& h : chain.polys) {
        signs.push_back(sign_at_infinity(h, direction));
    }
    return SignWord::from_signs(signs);
}

unsigned variations_at_infinity(const SturmChain& chain, Infinity direction) {
    return count_sign_variations(infinity_word(chain, direction));
}

namespace {

long long chain_difference(const RatPoly& p, const RatPoly& q, ChainLog* log,
                           std::string_view label) {
    const SturmChain chain = canonical_sturm(p, q);
    const SignWord neg = infinity_word(chain, Infinity::negative);
    const SignWord pos = infinity_word(chain, Infinity::positive);
    const unsigned var_neg = count_sign_variations(neg);
    const unsigned var_pos = count_sign_variations(pos);
    const long long diff = static_cast<long long>(var_neg) - static_cast<long long>(var_pos);
    if (log != nullptr) {
        log->push_back(ChainRecord{std::string(label), chain, neg.letters(), pos.letters(),
                                   var_neg, var_pos, diff});
    }
    return diff;
}

} // namespace

long long variation_difference(const RatPoly& p, const RatPoly& q) {
    return chain_difference(p, q, nullptr, {});
}

long long tarski_query(const RatPoly& p, const RatPoly& q, ChainLog* log, std::string_view label) {
    if (p.is_zero()) {
        throw InputError("Tarski query against the zero polynomial has an undefined root set");
    }
    if (q.is_zero()) {
        throw InputError("Tarski query requires a non-zero sign polynomial");
    }
    if (p.is_constant()) {
        // No roots; the chain construction would need a zero second element,
        // which the chain definition forbids.
        return 0;
    }
    return chain_difference(p, p.derivative() * q, log, label);
}

long long count_distinct_real_roots(const RatPoly& p, ChainLog* log, std::string_view label) {
    const long long count = tarski_query(p, RatPoly::constant(Rational(1)), log, label);
    internal_check(count >= 0, "negative distinct-real-root count");
    return count;
}

long long count_sign_set(const RatPoly& f, std::span<const RatPoly> constraints, ChainLog* log,
                         std::string_view label) {
    if (f.is_zero()) {
        throw InputError("sign-set count requires a non-zero root polynomial");
    }
    for (const RatPoly& a : constraints) {
        if (a.is_zero()) {
            throw InputError("sign-set count requires non-zero constraint polynomials");
        }
    }
    const std::size_t k_plus_1 = constraints.size();
    if (k_plus_1 > 32) {
        throw CapacityError("sign-set count over " + std::to_string(k_plus_1) +
                            " constraints exceeds the guard of 32");
    }
    if (k_plus_1 == 0) {
        return count_distinct_real_roots(f, log, label);
    }

    // Exponent tuples (p_0, ..., p_k) over {1, 2} in lexicographic order;
    // constraints are supplied descending (a_k first), so tuple slot i maps
    // to constraints[k - i].
    const std::uint64_t total = std::uint64_t(1) << k_plus_1;
    const std::size_t k = k_plus_1 - 1;
    long long sum = 0;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        RatPoly product = RatPoly::constant(Rational(1));
        std::ostringstream tuple;
        tuple << '(';
        for (std::size_t i = 0; i < k_plus_1; ++i) {
            const unsigned power = 1u + ((mask >> (k - i)) & 1u);
            const RatPoly& a = constraints[k - i];
            product = product * (power == 1 ? a : a * a);
            tuple << power << (i + 1 < k_plus_1 ? "," : ")");
        }
        std::string term_label = std::string(label);
        if (!term_label.empty()) {
            term_label += ' ';
        }
        term_label += "powers=" + tuple.str();
        sum += tarski_query(f, product, log, term_label);
    }

    internal_check(sum % static_cast<long long>(total) == 0,
                   "sign-set query sum is not divisible by 2^(k+1)");
    const long long count = sum / static_cast<long long>(total);
    internal_check(count >= 0, "negative sign-set count");
    return count;
}

} // namespace nonpos
