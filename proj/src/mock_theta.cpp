#include "qplab/mock_theta.hpp"

namespace qplab {

namespace {

Series omega_defining(std::size_t order) {
    Series acc(order);
    for (std::size_t n = 0; 2 * n * n + 2 * n <= order; ++n) {
        const std::size_t shift = 2 * n * n + 2 * n;
        const Series den = poch_finite(Parameter::q(1), 2, n + 1, order);
        acc = acc + shift_up(invert(den * den), shift);
    }
    return acc;
}

Series omega_fine(std::size_t order) {
    Series acc(order);
    for (std::size_t n = 0; n <= order; ++n) {
        acc = acc + shift_up(invert(poch_finite(Parameter::q(1), 2, n + 1, order)), n);
    }
    return acc;
}

Series psi_defining(std::size_t order) {
    Series acc(order);
    for (std::size_t n = 1; n * n <= order; ++n) {
        acc = acc + shift_up(invert(poch_finite(Parameter::q(1), 2, n, order)), n * n);
    }
    return acc;
}

Series psi_fine(std::size_t order) {
    Series acc(order);
    for (std::size_t n = 0; n + 1 <= order; ++n) {
        acc = acc + shift_up(poch_finite(Parameter::minus_q(2), 2, n, order), n + 1);
    }
    return acc;
}

Series nu_defining(std::size_t order) {
    Series acc(order);
    for (std::size_t n = 0; n * n + n <= order; ++n) {
        acc = acc + shift_up(invert(poch_finite(Parameter::minus_q(1), 2, n + 1, order)), n * n + n);
    }
    return acc;
}

Series nu_fine(std::size_t order) {
    Series acc(order);
    for (std::size_t n = 0; n <= order; ++n) {
        Series term = shift_up(poch_finite(Parameter::q(1), 2, n, order), n);
        acc = n % 2 ? acc - term : acc + term;
    }
    return acc;
}

}  // namespace

TermTemplate ady_omega_template() {
    TermTemplate t;
    t.prefix = {1, 1};
    t.factors = {
        {.exponent = {1, 1}, .sign = 1, .base = 1, .length = PochLength::of(1), .position = FactorPosition::denominator},
        {.exponent = {1, 2}, .sign = 1, .base = 1, .length = PochLength::index_plus_one(),
         .position = FactorPosition::denominator},
        {.exponent = {2, 4}, .sign = 1, .base = 2, .length = PochLength::infinite(),
         .position = FactorPosition::denominator},
    };
    return t;
}

TermTemplate ady_nu_template() {
    TermTemplate t;
    t.prefix = {1, 0};
    t.factors = {
        {.exponent = {1, 1}, .sign = -1, .base = 1, .length = PochLength::index()},
        {.exponent = {2, 2}, .sign = -1, .base = 2, .length = PochLength::infinite()},
    };
    return t;
}

Series mock_theta(MockThetaForm spec, std::size_t order) {
    const bool minus = spec.argument == ArgumentSign::minus;
    if (spec.form == MockForm::ady) {
        if (spec.function == MockFunction::omega && !minus) {
            // The template sums to q*omega(q).
            return shift_down(sum_over_smallest(ady_omega_template(), order + 1), 1);
        }
        if (spec.function == MockFunction::nu && minus) {
            return sum_over_smallest(ady_nu_template(), order);
        }
        throw SeriesError("no ady form for " + to_string(spec));
    }

    Series s(order);
    const bool fine = spec.form == MockForm::fine;
    switch (spec.function) {
        case MockFunction::omega: s = fine ? omega_fine(order) : omega_defining(order); break;
        case MockFunction::psi: s = fine ? psi_fine(order) : psi_defining(order); break;
        case MockFunction::nu: s = fine ? nu_fine(order) : nu_defining(order); break;
    }
    return minus ? negate_variable(s) : s;
}

Series theta_squares(std::size_t order, bool alternating) {
    std::vector<BigInt> c(order + 1);
    c[0] = 1;
    for (std::size_t n = 1; n * n <= order; ++n) {
        c[n * n] = (alternating && n % 2 == 1) ? -2 : 2;
    }
    return Series(std::move(c));
}

std::string to_string(MockThetaForm spec) {
    std::string s;
    switch (spec.function) {
        case MockFunction::omega: s = "omega"; break;
        case MockFunction::psi: s = "psi"; break;
        case MockFunction::nu: s = "nu"; break;
    }
    s += spec.argument == ArgumentSign::minus ? "(-q)" : "(q)";
    switch (spec.form) {
        case MockForm::defining: s += " [defining]"; break;
        case MockForm::fine: s += " [fine]"; break;
        case MockForm::ady: s += " [ady]"; break;
    }
    return s;
}

}  // namespace qplab
