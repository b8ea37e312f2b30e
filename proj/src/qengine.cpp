#include "qplab/qengine.hpp"

#include <algorithm>
#include <sstream>

namespace qplab {

Parameter operator*(Parameter a, Parameter b) {
    if (a.is_zero() || b.is_zero()) return Parameter::zero();
    return {a.sign() * b.sign(), a.exponent() + b.exponent()};
}

Parameter operator/(Parameter a, Parameter b) {
    if (b.is_zero()) throw SeriesError("parameter division by zero");
    if (a.is_zero()) return Parameter::zero();
    if (a.exponent() < b.exponent()) {
        throw SeriesError("parameter quotient " + to_string(a) + " / " + to_string(b) + " has a negative exponent");
    }
    return {a.sign() * b.sign(), a.exponent() - b.exponent()};
}

std::string to_string(Parameter a) {
    if (a.is_zero()) return "0";
    std::string s = a.sign() < 0 ? "-" : "";
    if (a.exponent() == 0) return s + "1";
    if (a.exponent() == 1) return s + "q";
    return s + "q^" + std::to_string(a.exponent());
}

namespace {

void require_base(std::size_t k) {
    if (k == 0) throw SeriesError("Pochhammer base exponent must be positive");
}

// s * (a; q^k)_m, skipping factors that are 1 modulo q^{order+1}.
Series apply_poch(Series s, Parameter a, std::size_t k, std::optional<std::size_t> m) {
    if (a.is_zero()) return s;
    const std::size_t order = s.order();
    for (std::size_t j = 0; !m || j < *m; ++j) {
        const std::size_t e = a.exponent() + k * j;
        if (e > order) break;
        s = mul_binomial(s, a.sign(), e);
    }
    return s;
}

// s / (a; q^k)_m.
Series unapply_poch(Series s, Parameter a, std::size_t k, std::optional<std::size_t> m) {
    if (a.is_zero()) return s;
    const std::size_t order = s.order();
    for (std::size_t j = 0; !m || j < *m; ++j) {
        const std::size_t e = a.exponent() + k * j;
        if (e == 0) throw SeriesError("Pochhammer denominator " + to_string(a) + " has a non-unit constant term");
        if (e > order) break;
        s = div_binomial(s, a.sign(), e);
    }
    return s;
}

}  // namespace

Series poch_finite(Parameter a, std::size_t k, std::size_t m, std::size_t order) {
    require_base(k);
    return apply_poch(Series::one(order), a, k, m);
}

Series poch_infinite(Parameter a, std::size_t k, std::size_t order) {
    require_base(k);
    if (!a.is_zero() && a.exponent() == 0 && a.sign() > 0) {
        throw SeriesError("(1; q^k)_inf vanishes identically");
    }
    return apply_poch(Series::one(order), a, k, std::nullopt);
}

Series rational_series(const std::vector<long long>& numerator, const std::vector<BinomialFactor>& denominator,
                       std::size_t order) {
    std::vector<BigInt> c(order + 1);
    for (std::size_t i = 0; i < numerator.size() && i <= order; ++i) c[i] = numerator[i];
    Series s(std::move(c));
    for (const auto& f : denominator) {
        if (f.exponent == 0) throw SeriesError("rational_series: denominator factor with exponent 0");
        for (std::size_t r = 0; r < f.multiplicity; ++r) s = div_binomial(s, f.sign, f.exponent);
    }
    return s;
}

void validate(const TermTemplate& t) {
    const bool single_term = t.last_index && *t.last_index == 0;
    if (t.prefix.alpha == 0 && !single_term) {
        throw SeriesError("term template prefix exponent must be strictly increasing in n");
    }
    for (const auto& f : t.factors) {
        if (f.base == 0) throw SeriesError("term template factor with base exponent 0");
        if (f.position == FactorPosition::denominator && f.exponent.beta == 0) {
            throw SeriesError("term template denominator factor " + describe(f) + " is not a unit at n = 0");
        }
    }
}

Series template_term(const TermTemplate& t, std::size_t n, std::size_t order) {
    const std::size_t prefix = t.prefix.at(n);
    if (prefix > order) return Series(order);

    Series work = Series::one(order - prefix);
    for (const auto& f : t.factors) {
        const Parameter a{f.sign, f.exponent.at(n)};
        std::optional<std::size_t> length;
        switch (f.length.kind) {
            case PochLength::Kind::index: length = n; break;
            case PochLength::Kind::index_plus_one: length = n + 1; break;
            case PochLength::Kind::fixed: length = f.length.fixed; break;
            case PochLength::Kind::infinite: break;
        }
        for (std::size_t p = 0; p < f.power; ++p) {
            work = f.position == FactorPosition::numerator ? apply_poch(std::move(work), a, f.base, length)
                                                           : unapply_poch(std::move(work), a, f.base, length);
        }
    }
    if (t.sign_rule == SignRule::alternating && n % 2 == 1) work = -work;

    std::vector<BigInt> out(order + 1);
    for (std::size_t i = 0; i <= work.order(); ++i) out[prefix + i] = work[i];
    return Series(std::move(out));
}

Series sum_over_smallest(const TermTemplate& t, std::size_t order) {
    validate(t);
    std::vector<BigInt> acc(order + 1);
    for (std::size_t n = 0; t.prefix.at(n) <= order; ++n) {
        if (t.last_index && n > *t.last_index) break;
        const Series term = template_term(t, n, order);
        for (std::size_t i = t.prefix.at(n); i <= order; ++i) acc[i] += term[i];
        if (t.prefix.alpha == 0) break;
    }
    return Series(std::move(acc));
}

Series phi21(Parameter a, Parameter b, Parameter c, std::size_t k, Parameter z, std::size_t order) {
    require_base(k);
    if (z.is_zero() || z.exponent() == 0) {
        throw SeriesError("phi21: argument z must be a monomial of positive degree");
    }
    if (!c.is_zero() && c.exponent() == 0) {
        throw SeriesError("phi21: denominator parameter c = " + to_string(c) + " is not admissible");
    }

    // term_n = z^n * reduced_n, with reduced_n tracked to order - n*deg(z).
    std::vector<BigInt> acc(order + 1);
    Series reduced = Series::one(order);
    for (std::size_t n = 0;; ++n) {
        const std::size_t shift = n * z.exponent();
        const bool negative = z.sign() < 0 && n % 2 == 1;
        for (std::size_t i = 0; i <= reduced.order(); ++i) {
            if (negative) {
                acc[shift + i] -= reduced[i];
            } else {
                acc[shift + i] += reduced[i];
            }
        }
        const std::size_t next_shift = shift + z.exponent();
        if (next_shift > order) break;

        Series next = reduced.truncated(order - next_shift);
        const std::size_t step = k * n;
        if (!a.is_zero()) next = mul_binomial(next, a.sign(), a.exponent() + step);
        if (!b.is_zero()) next = mul_binomial(next, b.sign(), b.exponent() + step);
        next = div_binomial(next, 1, k * (n + 1));
        if (!c.is_zero()) next = div_binomial(next, c.sign(), c.exponent() + step);
        reduced = std::move(next);
    }
    return Series(std::move(acc));
}

namespace {

std::string affine_string(Affine e) {
    std::ostringstream os;
    if (e.alpha == 0) {
        os << e.beta;
    } else {
        if (e.alpha != 1) os << e.alpha;
        os << 'n';
        if (e.beta) os << '+' << e.beta;
    }
    return os.str();
}

}  // namespace

std::string describe(const PochFactor& f) {
    std::ostringstream os;
    os << '(' << (f.sign < 0 ? "-" : "") << "q^{" << affine_string(f.exponent) << "};q";
    if (f.base != 1) os << '^' << f.base;
    os << ")_";
    switch (f.length.kind) {
        case PochLength::Kind::index: os << 'n'; break;
        case PochLength::Kind::index_plus_one: os << "{n+1}"; break;
        case PochLength::Kind::fixed: os << f.length.fixed; break;
        case PochLength::Kind::infinite: os << "inf"; break;
    }
    if (f.power != 1) os << '^' << f.power;
    return os.str();
}

std::string describe(const TermTemplate& t) {
    std::ostringstream os;
    os << "sum_{n=0}^{" << (t.last_index ? std::to_string(*t.last_index) : std::string("inf")) << "} ";
    if (t.sign_rule == SignRule::alternating) os << "(-1)^n ";
    os << "q^{" << affine_string(t.prefix) << "}";
    std::string num, den;
    for (const auto& f : t.factors) {
        (f.position == FactorPosition::numerator ? num : den) += describe(f);
    }
    if (!num.empty()) os << ' ' << num;
    if (!den.empty()) os << " / " << den;
    return os.str();
}

}  // namespace qplab
