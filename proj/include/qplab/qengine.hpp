#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qplab/series.hpp"

namespace qplab {

/// A Pochhammer argument: zero, or a signed monomial sign*q^exponent.
class Parameter {
public:
    /// The zero parameter.
    constexpr Parameter() = default;
    constexpr Parameter(int sign, std::size_t exponent) : nonzero_(true), sign_(sign < 0 ? -1 : 1), exponent_(exponent) {}

    static constexpr Parameter zero() { return {}; }
    /// +q^e
    static constexpr Parameter q(std::size_t e) { return {1, e}; }
    /// -q^e
    static constexpr Parameter minus_q(std::size_t e) { return {-1, e}; }

    constexpr bool is_zero() const { return !nonzero_; }
    constexpr int sign() const { return sign_; }
    constexpr std::size_t exponent() const { return exponent_; }

    friend constexpr bool operator==(const Parameter&, const Parameter&) = default;

private:
    bool nonzero_ = false;
    int sign_ = 1;
    std::size_t exponent_ = 0;
};

Parameter operator*(Parameter a, Parameter b);
/// a / b; throws SeriesError when b is zero or the quotient has a negative exponent.
Parameter operator/(Parameter a, Parameter b);
std::string to_string(Parameter a);

/// (a; q^k)_m truncated to `order`.
Series poch_finite(Parameter a, std::size_t k, std::size_t m, std::size_t order);
/// (a; q^k)_infinity truncated to `order`. Rejects a = +q^0 (the product vanishes identically).
Series poch_infinite(Parameter a, std::size_t k, std::size_t order);

/// One denominator factor (1 - sign*q^exponent)^multiplicity of a rational generating function.
struct BinomialFactor {
    int sign = 1;
    std::size_t exponent = 1;
    std::size_t multiplicity = 1;
};

/// numerator / prod(denominator factors), expanded to `order`.
Series rational_series(const std::vector<long long>& numerator, const std::vector<BinomialFactor>& denominator,
                       std::size_t order);

/// Affine function alpha*n + beta of the outer summation index.
struct Affine {
    std::size_t alpha = 0;
    std::size_t beta = 0;

    constexpr std::size_t at(std::size_t n) const { return alpha * n + beta; }
    friend constexpr bool operator==(const Affine&, const Affine&) = default;
};

/// Length of a Pochhammer factor inside a summand: n, n+1, a fixed m, or infinite.
struct PochLength {
    enum class Kind { index, index_plus_one, fixed, infinite };
    Kind kind = Kind::infinite;
    std::size_t fixed = 0;

    static constexpr PochLength index() { return {Kind::index, 0}; }
    static constexpr PochLength index_plus_one() { return {Kind::index_plus_one, 0}; }
    static constexpr PochLength of(std::size_t m) { return {Kind::fixed, m}; }
    static constexpr PochLength infinite() { return {Kind::infinite, 0}; }

    friend constexpr bool operator==(const PochLength&, const PochLength&) = default;
};

enum class FactorPosition { numerator, denominator };

/// (sign*q^{alpha n + beta}; q^base)_length raised to `power`, in the numerator or denominator.
struct PochFactor {
    Affine exponent;
    int sign = 1;
    std::size_t base = 1;
    PochLength length = PochLength::infinite();
    FactorPosition position = FactorPosition::numerator;
    std::size_t power = 1;
};

enum class SignRule { none, alternating };

/// One summand of a sum over the smallest part: sign * q^prefix(n) * prod(factors).
struct TermTemplate {
    Affine prefix;
    SignRule sign_rule = SignRule::none;
    std::vector<PochFactor> factors;
    /// Inclusive bound on the summation index; unset means the sum runs until prefix(n) > order.
    std::optional<std::size_t> last_index;
};

/// Checks the template's structural invariants; throws SeriesError on violation.
void validate(const TermTemplate& t);

/// Value of a single summand term(n) to `order`.
Series template_term(const TermTemplate& t, std::size_t n, std::size_t order);

/// sum_n term(n), truncated to `order`.
Series sum_over_smallest(const TermTemplate& t, std::size_t order);

/// 2phi1(a, b; c; q^k, z) = sum_n (a;q^k)_n (b;q^k)_n / ((q^k;q^k)_n (c;q^k)_n) z^n.
Series phi21(Parameter a, Parameter b, Parameter c, std::size_t k, Parameter z, std::size_t order);

std::string describe(const PochFactor& f);
std::string describe(const TermTemplate& t);

}  // namespace qplab
