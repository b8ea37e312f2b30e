#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qplab {

using BigInt = boost::multiprecision::cpp_int;

/// Raised when an operation would read or produce coefficients beyond what is known.
class SeriesError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Truncated formal power series in q with exact integer coefficients.
///
/// Coefficients 0..order() are known; nothing is claimed past order().
/// Every binary operation yields the minimum order of its operands.
class Series {
public:
    /// The zero series known through `order`.
    explicit Series(std::size_t order);
    /// Takes coefficients c_0..c_order; `coeffs` must be nonempty.
    explicit Series(std::vector<BigInt> coeffs);

    static Series one(std::size_t order);
    static Series monomial(std::size_t exponent, std::size_t order, BigInt coefficient = 1);
    /// Builds from small integer coefficients, zero-padded (or truncated) to `order`.
    static Series from_ints(std::initializer_list<long long> coeffs, std::size_t order);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    std::span<const BigInt> coeffs() const noexcept { return coeffs_; }
    const BigInt& operator[](std::size_t n) const { return coeffs_[n]; }

    bool is_zero() const;

    /// Same coefficients, knowledge cut back to `order` (must not exceed the current order).
    Series truncated(std::size_t order) const;

    friend bool operator==(const Series&, const Series&) = default;

private:
    std::vector<BigInt> coeffs_;
};

/// Outcome of comparing two series through a given index.
struct Comparison {
    struct Mismatch {
        std::size_t index;
        BigInt lhs;
        BigInt rhs;
    };
    std::size_t checked_through = 0;
    std::optional<Mismatch> mismatch;

    bool equal() const noexcept { return !mismatch.has_value(); }
    explicit operator bool() const noexcept { return equal(); }
};

Series linear_combine(std::span<const std::pair<BigInt, Series>> terms);
Series operator+(const Series& a, const Series& b);
Series operator-(const Series& a, const Series& b);
Series operator-(const Series& a);
Series operator*(const BigInt& k, const Series& a);
/// Cauchy product.
Series mul(const Series& a, const Series& b);
Series operator*(const Series& a, const Series& b);
/// Multiplicative inverse; the constant term must be +1 or -1.
Series invert(const Series& a);

/// q -> q^k. Coefficients landing past the order are dropped.
Series substitute_power(const Series& a, std::size_t k);
/// q -> -q.
Series negate_variable(const Series& a);
/// Multiplication by q^k; the result keeps a's order.
Series shift_up(const Series& a, std::size_t k);
/// Division by q^k when the low k coefficients vanish; the order drops by k.
Series shift_down(const Series& a, std::size_t k);

/// Multiplies by (1 - sign*q^exponent) in O(order).
Series mul_binomial(const Series& a, int sign, std::size_t exponent);
/// Divides by (1 - sign*q^exponent); exponent >= 1 so the factor is a unit.
Series div_binomial(const Series& a, int sign, std::size_t exponent);

const BigInt& coeff_at(const Series& a, std::size_t n);
Comparison equal_up_to(const Series& a, const Series& b, std::size_t n);

std::string to_string(const Series& a);

}  // namespace qplab
