#include "nonpos/superop.hpp"

#include "nonpos/errors.hpp"
#include "nonpos/sturm.hpp"

#include <sstream>

namespace nonpos {

ParamMatrix::ParamMatrix(std::size_t n) : n_(n), entries_(n * n) {
    internal_check(n >= 1, "matrix dimension must be at least 1");
}

GaussRatPoly& ParamMatrix::entry(std::size_t i, std::size_t j) {
    internal_check(i >= 1 && i <= n_ && j >= 1 && j <= n_, "matrix index out of range");
    return entries_[(i - 1) * n_ + (j - 1)];
}

const GaussRatPoly& ParamMatrix::entry(std::size_t i, std::size_t j) const {
    internal_check(i >= 1 && i <= n_ && j >= 1 && j <= n_, "matrix index out of range");
    return entries_[(i - 1) * n_ + (j - 1)];
}

ParamMatrix ParamMatrix::conjugate_transpose() const {
    ParamMatrix out(n_);
    for (std::size_t i = 1; i <= n_; ++i) {
        for (std::size_t j = 1; j <= n_; ++j) {
            out.entry(i, j) = entry(j, i).conjugate();
        }
    }
    return out;
}

bool ParamMatrix::is_selfadjoint() const {
    return *this == conjugate_transpose();
}

ParamMatrix operator*(const ParamMatrix& lhs, const ParamMatrix& rhs) {
    internal_check(lhs.n_ == rhs.n_, "matrix product dimension mismatch");
    ParamMatrix out(lhs.n_);
    for (std::size_t i = 1; i <= lhs.n_; ++i) {
        for (std::size_t j = 1; j <= lhs.n_; ++j) {
            GaussRatPoly acc;
            for (std::size_t k = 1; k <= lhs.n_; ++k) {
                acc += lhs.entry(i, k) * rhs.entry(k, j);
            }
            out.entry(i, j) = std::move(acc);
        }
    }
    return out;
}

ParamMatrix operator+(const ParamMatrix& lhs, const ParamMatrix& rhs) {
    internal_check(lhs.n_ == rhs.n_, "matrix sum dimension mismatch");
    ParamMatrix out(lhs.n_);
    for (std::size_t idx = 0; idx < lhs.entries_.size(); ++idx) {
        out.entries_[idx] = lhs.entries_[idx] + rhs.entries_[idx];
    }
    return out;
}

ParamMatrix operator*(const RatPoly& scale, const ParamMatrix& m) {
    ParamMatrix out(m.n_);
    for (std::size_t idx = 0; idx < m.entries_.size(); ++idx) {
        out.entries_[idx] = scale * m.entries_[idx];
    }
    return out;
}

bool operator==(const ParamMatrix& lhs, const ParamMatrix& rhs) {
    return lhs.n_ == rhs.n_ && lhs.entries_ == rhs.entries_;
}

GaussMatrix::GaussMatrix(std::size_t n) : n_(n), entries_(n * n) {
    internal_check(n >= 1, "matrix dimension must be at least 1");
}

GaussRational& GaussMatrix::entry(std::size_t i, std::size_t j) {
    internal_check(i >= 1 && i <= n_ && j >= 1 && j <= n_, "matrix index out of range");
    return entries_[(i - 1) * n_ + (j - 1)];
}

const GaussRational& GaussMatrix::entry(std::size_t i, std::size_t j) const {
    internal_check(i >= 1 && i <= n_ && j >= 1 && j <= n_, "matrix index out of range");
    return entries_[(i - 1) * n_ + (j - 1)];
}

bool GaussMatrix::is_selfadjoint() const {
    for (std::size_t i = 1; i <= n_; ++i) {
        for (std::size_t j = 1; j <= n_; ++j) {
            if (!(entry(i, j) == entry(j, i).conjugate())) {
                return false;
            }
        }
    }
    return true;
}

bool operator==(const GaussMatrix& lhs, const GaussMatrix& rhs) {
    return lhs.n_ == rhs.n_ && lhs.entries_ == rhs.entries_;
}

Family validate_family(std::size_t n, std::vector<FamilyTerm> terms) {
    std::vector<std::string> problems;
    if (n < 1) {
        problems.push_back("system dimension n must be at least 1");
    }
    if (terms.empty()) {
        problems.push_back("a family needs at least one term");
    }
    for (std::size_t r = 0; r < terms.size(); ++r) {
        const std::string where = "term " + std::to_string(r + 1);
        if (terms[r].matrix.dim() != n) {
            problems.push_back(where + ": matrix is " + std::to_string(terms[r].matrix.dim()) +
                               "x" + std::to_string(terms[r].matrix.dim()) + ", expected " +
                               std::to_string(n) + "x" + std::to_string(n));
        }
        const RatPoly& alpha = terms[r].alpha;
        if (alpha.is_zero()) {
            problems.push_back(where + ": alpha is the zero polynomial");
            continue;
        }
        const long long roots = count_distinct_real_roots(alpha);
        if (roots != 0) {
            problems.push_back(where + ": alpha has " + std::to_string(roots) +
                               " distinct real root(s); it must have none");
        }
    }
    if (!problems.empty()) {
        std::ostringstream msg;
        msg << "invalid family:";
        for (const auto& p : problems) {
            msg << "\n  - " << p;
        }
        throw InputError(msg.str());
    }
    return Family(n, std::move(terms));
}

namespace {

ParamMatrix matrix_unit(std::size_t n, std::size_t k, std::size_t l) {
    ParamMatrix e(n);
    e.entry(k, l) = GaussRatPoly(RatPoly::constant(Rational(1)));
    return e;
}

/// Image of the matrix unit E_kl under the superoperator, as an n x n
/// parameter matrix.
ParamMatrix apply_to_unit(const Family& family, std::size_t k, std::size_t l) {
    const std::size_t n = family.dim();
    ParamMatrix acc(n);
    const ParamMatrix unit = matrix_unit(n, k, l);
    for (const FamilyTerm& term : family.terms()) {
        acc = acc + term.alpha * (term.matrix * unit * term.matrix.conjugate_transpose());
    }
    return acc;
}

ParamMatrix cj_by_entry_formula(const Family& family) {
    const std::size_t n = family.dim();
    ParamMatrix m(n * n);
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
            for (std::size_t k = 1; k <= n; ++k) {
                for (std::size_t l = 1; l <= n; ++l) {
                    GaussRatPoly acc;
                    for (const FamilyTerm& term : family.terms()) {
                        acc += term.alpha *
                               (term.matrix.entry(j, i) * term.matrix.entry(l, k).conjugate());
                    }
                    m.entry(n * (i - 1) + j, n * (k - 1) + l) = std::move(acc);
                }
            }
        }
    }
    return m;
}

ParamMatrix cj_by_block_layout(const Family& family) {
    const std::size_t n = family.dim();
    ParamMatrix m(n * n);
    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t l = 1; l <= n; ++l) {
            const ParamMatrix block = apply_to_unit(family, k, l);
            for (std::size_t u = 1; u <= n; ++u) {
                for (std::size_t v = 1; v <= n; ++v) {
                    m.entry(n * (k - 1) + u, n * (l - 1) + v) = block.entry(u, v);
                }
            }
        }
    }
    return m;
}

} // namespace

CJMatrix cj_matrix(const Family& family) {
    ParamMatrix by_formula = cj_by_entry_formula(family);
    const ParamMatrix by_blocks = cj_by_block_layout(family);
    internal_check(by_formula == by_blocks,
                   "CJ matrix entry formula and block layout disagree (index flattening bug)");
    internal_check(by_formula.is_selfadjoint(), "CJ matrix is not selfadjoint");
    return CJMatrix{std::move(by_formula)};
}

namespace {

GaussRatPoly scaled_by(const GaussRatPoly& v, const Rational& c) {
    return RatPoly::constant(c) * v;
}

GaussRational scaled_by(const GaussRational& v, const Rational& c) {
    return {v.re * c, v.im * c};
}

GaussRatPoly one_element(const GaussRatPoly*) {
    return GaussRatPoly(RatPoly::constant(Rational(1)));
}

GaussRational one_element(const GaussRational*) {
    return GaussRational{Rational(1), Rational(0)};
}

/// Faddeev-LeVerrier over an exact commutative ring containing the
/// rationals: returns the ascending coefficients of det(xI - A). The final
/// recurrence matrix must vanish (Cayley-Hamilton), which doubles as an
/// internal correctness check of the whole computation.
template <typename Elem, typename Matrix>
std::vector<Elem> monic_char_coefficients(const Matrix& a) {
    const std::size_t n = a.dim();
    const Elem zero{};
    const Elem one = one_element(static_cast<const Elem*>(nullptr));

    std::vector<Elem> coeffs(n + 1, zero);
    coeffs[n] = one;

    // mk starts as the identity.
    std::vector<Elem> mk(n * n, zero);
    for (std::size_t i = 0; i < n; ++i) {
        mk[i * n + i] = one;
    }

    std::vector<Elem> product(n * n, zero);
    for (std::size_t step = 1; step <= n; ++step) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                Elem acc = zero;
                for (std::size_t k = 0; k < n; ++k) {
                    acc += a.entry(i + 1, k + 1) * mk[k * n + j];
                }
                product[i * n + j] = std::move(acc);
            }
        }
        Elem trace = zero;
        for (std::size_t i = 0; i < n; ++i) {
            trace += product[i * n + i];
        }
        const Elem c = scaled_by(-trace, Rational(-1) / Rational(static_cast<long>(step)) * -1);
        coeffs[n - step] = scaled_by(trace, Rational(-1) / Rational(static_cast<long>(step)));
        mk = product;
        for (std::size_t i = 0; i < n; ++i) {
            mk[i * n + i] += coeffs[n - step];
        }
        (void)c;
    }

    // Cayley-Hamilton: the recurrence closes with the zero matrix.
    for (const Elem& e : mk) {
        internal_check(e == zero, "Faddeev-LeVerrier recurrence did not terminate at zero");
    }
    return coeffs;
}

} // namespace

BiPoly char_poly(const ParamMatrix& m) {
    internal_check(m.is_selfadjoint(), "characteristic polynomial requires a selfadjoint matrix");
    const std::size_t n = m.dim();
    std::vector<GaussRatPoly> monic = monic_char_coefficients<GaussRatPoly>(m);

    // det(M - xI) = (-1)^n det(xI - M).
    const bool flip = n % 2 == 1;
    std::vector<RatPoly> coeffs;
    coeffs.reserve(monic.size());
    for (auto& c : monic) {
        internal_check(c.is_real(),
                       "non-real characteristic polynomial coefficient "
                       "(non-selfadjoint input slipped through)");
        coeffs.push_back(flip ? -c.real() : c.real());
    }
    return BiPoly::from_x_coefficients(std::move(coeffs));
}

RatPoly char_poly(const GaussMatrix& m) {
    internal_check(m.is_selfadjoint(), "characteristic polynomial requires a selfadjoint matrix");
    const std::size_t n = m.dim();
    std::vector<GaussRational> monic = monic_char_coefficients<GaussRational>(m);

    const bool flip = n % 2 == 1;
    std::vector<Rational> coeffs;
    coeffs.reserve(monic.size());
    for (auto& c : monic) {
        internal_check(c.is_real(),
                       "non-real characteristic polynomial coefficient "
                       "(non-selfadjoint input slipped through)");
        coeffs.push_back(flip ? -c.re : c.re);
    }
    return RatPoly(std::move(coeffs));
}

GaussMatrix evaluate_family_cj(const Family& family, const Rational& t0) {
    const CJMatrix cj = cj_matrix(family);
    const std::size_t dim = cj.matrix.dim();
    GaussMatrix out(dim);
    for (std::size_t i = 1; i <= dim; ++i) {
        for (std::size_t j = 1; j <= dim; ++j) {
            out.entry(i, j) = cj.matrix.entry(i, j)(t0);
        }
    }
    return out;
}

} // namespace nonpos
