#pragma once

#include <cstddef>
#include <string>

#include "qplab/qengine.hpp"
#include "qplab/series.hpp"

namespace qplab {

enum class MockFunction { omega, psi, nu };

/// Which series expansion is used to compute a mock theta function.
enum class MockForm {
    /// Ramanujan-Watson series: omega = sum q^{2n^2+2n}/(q;q^2)_{n+1}^2,
    /// psi = sum_{n>=1} q^{n^2}/(q;q^2)_n, nu = sum q^{n^2+n}/(-q;q^2)_{n+1}.
    defining,
    /// omega = sum q^n/(q;q^2)_{n+1}, psi = sum (-q^2;q^2)_n q^{n+1}, nu = sum (q;q^2)_n (-q)^n.
    fine,
    /// Sum over the smallest part of a one-color partition family (omega at +q, nu at -q only).
    ady,
};

enum class ArgumentSign { plus, minus };

struct MockThetaForm {
    MockFunction function = MockFunction::omega;
    MockForm form = MockForm::defining;
    ArgumentSign argument = ArgumentSign::plus;
};

/// The requested mock theta function truncated to `order`.
/// Throws SeriesError for the combinations that have no ady form.
Series mock_theta(MockThetaForm spec, std::size_t order);

/// sum_{n>=1} q^n / ((1-q^n)(q^{n+1};q)_n (q^{2n+2};q^2)_inf), written with outer index m = n-1.
TermTemplate ady_omega_template();
/// sum_{n>=0} q^n (-q^{n+1};q)_n (-q^{2n+2};q^2)_inf.
TermTemplate ady_nu_template();

/// 1 + 2 sum_{n>=1} q^{n^2}, or with (-1)^n when alternating.
Series theta_squares(std::size_t order, bool alternating);

std::string to_string(MockThetaForm spec);

}  // namespace qplab
