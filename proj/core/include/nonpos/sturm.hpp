#pragma once

#include "nonpos/poly.hpp"
#include "nonpos/signvar.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nonpos {

enum class Infinity {
    negative,
    positive,
};

/// Sign of the limit of h at the given infinity: at +inf the sign of the
/// leading coefficient, at -inf that sign flipped when the degree is odd.
/// Requires a non-zero polynomial.
Sign sign_at_infinity(const RatPoly& h, Infinity direction);

/// Canonical Sturm chain h0, h1, ..., hn: h0 = p, h1 = q and each next
/// element is the negated division remainder of the two before it, stopping
/// as soon as the last element divides its predecessor. No rescaling of any
/// kind is applied, so coefficients are exactly the textbook values.
struct SturmChain {
    std::vector<RatPoly> polys;

    std::size_t size() const { return polys.size(); }
};

/// Throws InputError when p or q is the zero polynomial.
SturmChain canonical_sturm(const RatPoly& p, const RatPoly& q);

/// The word of signs-at-infinity of the chain elements, head first.
SignWord infinity_word(const SturmChain& chain, Infinity direction);

/// Sign variation count of infinity_word(chain, direction).
unsigned variations_at_infinity(const SturmChain& chain, Infinity direction);

/// variations at -inf minus variations at +inf for the canonical chain of
/// (p, q). May be negative.
long long variation_difference(const RatPoly& p, const RatPoly& q);

/// Everything observable about one chain construction, kept for traces.
struct ChainRecord {
    std::string label;
    SturmChain chain;
    std::string word_neg_inf;
    std::string word_pos_inf;
    unsigned variations_neg_inf = 0;
    unsigned variations_pos_inf = 0;
    long long difference = 0;
};

using ChainLog = std::vector<ChainRecord>;

/// Tarski query N(p, q): the number of distinct real roots of p where q is
/// positive minus the number where q is negative. Computed as the variation
/// difference of the chain for (p, p'q); a non-zero constant p has no roots
/// and short-circuits to 0. Throws InputError when p or q is zero.
long long tarski_query(const RatPoly& p, const RatPoly& q, ChainLog* log = nullptr,
                       std::string_view label = {});

/// Number of distinct real roots of p, i.e. the Tarski query against the
/// constant 1. Always non-negative (internally checked).
long long count_distinct_real_roots(const RatPoly& p, ChainLog* log = nullptr,
                                    std::string_view label = {});

/// Number of distinct real roots of f at which every constraint polynomial
/// is strictly positive, computed by averaging Tarski queries against all
/// products of first and second powers of the constraints. The accumulated
/// sum must be divisible by 2^(k+1); a failure of that divisibility is
/// reported as an InternalError. Throws CapacityError when more than 32
/// constraints are supplied.
long long count_sign_set(const RatPoly& f, std::span<const RatPoly> constraints,
                         ChainLog* log = nullptr, std::string_view label = {});

} // namespace nonpos
