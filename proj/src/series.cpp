#include "qplab/series.hpp"

#include <algorithm>
#include <sstream>

namespace qplab {

Series::Series(std::size_t order) : coeffs_(order + 1) {}

Series::Series(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw SeriesError("series needs at least the constant coefficient");
    }
}

Series Series::one(std::size_t order) {
    return monomial(0, order);
}

Series Series::monomial(std::size_t exponent, std::size_t order, BigInt coefficient) {
    Series s(order);
    if (exponent <= order) {
        s.coeffs_[exponent] = std::move(coefficient);
    }
    return s;
}

Series Series::from_ints(std::initializer_list<long long> coeffs, std::size_t order) {
    Series s(order);
    std::size_t i = 0;
    for (long long c : coeffs) {
        if (i > order) break;
        s.coeffs_[i++] = c;
    }
    return s;
}

bool Series::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c.is_zero(); });
}

Series Series::truncated(std::size_t order) const {
    if (order > this->order()) {
        throw SeriesError("cannot extend a series past its known order");
    }
    return Series(std::vector<BigInt>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order) + 1));
}

Series linear_combine(std::span<const std::pair<BigInt, Series>> terms) {
    if (terms.empty()) {
        throw SeriesError("linear_combine needs at least one term");
    }
    std::size_t order = terms.front().second.order();
    for (const auto& [k, s] : terms) order = std::min(order, s.order());

    std::vector<BigInt> out(order + 1);
    for (const auto& [k, s] : terms) {
        if (k.is_zero()) continue;
        for (std::size_t n = 0; n <= order; ++n) {
            if (!s[n].is_zero()) out[n] += k * s[n];
        }
    }
    return Series(std::move(out));
}

Series operator+(const Series& a, const Series& b) {
    const std::pair<BigInt, Series> terms[] = {{1, a}, {1, b}};
    return linear_combine(terms);
}

Series operator-(const Series& a, const Series& b) {
    const std::pair<BigInt, Series> terms[] = {{1, a}, {-1, b}};
    return linear_combine(terms);
}

Series operator-(const Series& a) {
    std::vector<BigInt> out(a.coeffs().begin(), a.coeffs().end());
    for (auto& c : out) c = -c;
    return Series(std::move(out));
}

Series operator*(const BigInt& k, const Series& a) {
    std::vector<BigInt> out(a.coeffs().begin(), a.coeffs().end());
    for (auto& c : out) c *= k;
    return Series(std::move(out));
}

Series mul(const Series& a, const Series& b) {
    const std::size_t order = std::min(a.order(), b.order());
    std::vector<BigInt> out(order + 1);
    for (std::size_t i = 0; i <= order; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; i + j <= order; ++j) {
            if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
        }
    }
    return Series(std::move(out));
}

Series operator*(const Series& a, const Series& b) {
    return mul(a, b);
}

Series invert(const Series& a) {
    const BigInt& c0 = a[0];
    if (c0 != 1 && c0 != -1) {
        throw SeriesError("invert: constant term must be +1 or -1, got " + c0.str());
    }
    // b_n = -c0 * sum_{i=1..n} a_i b_{n-i}, using 1/c0 == c0 for units.
    const std::size_t order = a.order();
    std::vector<BigInt> out(order + 1);
    out[0] = c0;
    for (std::size_t n = 1; n <= order; ++n) {
        BigInt acc = 0;
        for (std::size_t i = 1; i <= n; ++i) {
            if (!a[i].is_zero()) acc += a[i] * out[n - i];
        }
        out[n] = -c0 * acc;
    }
    return Series(std::move(out));
}

Series substitute_power(const Series& a, std::size_t k) {
    if (k == 0) {
        throw SeriesError("substitute_power: k must be positive");
    }
    std::vector<BigInt> c(a.order() + 1);
    for (std::size_t n = 0; n * k <= a.order(); ++n) c[n * k] = a[n];
    return Series(std::move(c));
}

Series negate_variable(const Series& a) {
    std::vector<BigInt> out(a.coeffs().begin(), a.coeffs().end());
    for (std::size_t n = 1; n < out.size(); n += 2) out[n] = -out[n];
    return Series(std::move(out));
}

Series shift_up(const Series& a, std::size_t k) {
    std::vector<BigInt> out(a.order() + 1);
    for (std::size_t n = 0; n + k <= a.order(); ++n) out[n + k] = a[n];
    return Series(std::move(out));
}

Series shift_down(const Series& a, std::size_t k) {
    if (k > a.order()) {
        throw SeriesError("shift_down: shift exceeds the known order");
    }
    for (std::size_t n = 0; n < k; ++n) {
        if (!a[n].is_zero()) {
            throw SeriesError("shift_down: coefficient of q^" + std::to_string(n) + " is nonzero");
        }
    }
    return Series(std::vector<BigInt>(a.coeffs().begin() + static_cast<std::ptrdiff_t>(k), a.coeffs().end()));
}

Series mul_binomial(const Series& a, int sign, std::size_t exponent) {
    std::vector<BigInt> out(a.coeffs().begin(), a.coeffs().end());
    if (exponent == 0) {
        // (1 - sign) is a constant: 0 or 2.
        for (auto& c : out) c *= (1 - sign);
        return Series(std::move(out));
    }
    // Descending so a[n - exponent] is still the original value.
    for (std::size_t n = out.size(); n-- > exponent;) {
        if (sign > 0) {
            out[n] -= out[n - exponent];
        } else {
            out[n] += out[n - exponent];
        }
    }
    return Series(std::move(out));
}

Series div_binomial(const Series& a, int sign, std::size_t exponent) {
    if (exponent == 0) {
        throw SeriesError("div_binomial: factor (1 - sign) is not a unit");
    }
    std::vector<BigInt> out(a.coeffs().begin(), a.coeffs().end());
    for (std::size_t n = exponent; n < out.size(); ++n) {
        if (sign > 0) {
            out[n] += out[n - exponent];
        } else {
            out[n] -= out[n - exponent];
        }
    }
    return Series(std::move(out));
}

const BigInt& coeff_at(const Series& a, std::size_t n) {
    if (n > a.order()) {
        throw SeriesError("coeff_at: index " + std::to_string(n) + " beyond order " + std::to_string(a.order()));
    }
    return a[n];
}

Comparison equal_up_to(const Series& a, const Series& b, std::size_t n) {
    if (n > a.order() || n > b.order()) {
        throw SeriesError("equal_up_to: index " + std::to_string(n) + " beyond known order");
    }
    Comparison result;
    result.checked_through = n;
    for (std::size_t i = 0; i <= n; ++i) {
        if (a[i] != b[i]) {
            result.mismatch = Comparison::Mismatch{i, a[i], b[i]};
            break;
        }
    }
    return result;
}

std::string to_string(const Series& a) {
    std::ostringstream os;
    for (std::size_t n = 0; n <= a.order(); ++n) {
        if (n) os << ',';
        os << a[n];
    }
    return os.str();
}

}  // namespace qplab
