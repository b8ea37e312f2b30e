#include "qplab/registry.hpp"

#include <algorithm>
#include <future>
#include <thread>

#include "qplab/families.hpp"
#include "qplab/mock_theta.hpp"

namespace qplab {

namespace {

using namespace build;

constexpr Parameter q(std::size_t e) { return Parameter::q(e); }
constexpr Parameter mq(std::size_t e) { return Parameter::minus_q(e); }
constexpr Parameter kZero = Parameter::zero();

constexpr std::size_t kSeriesOrder = 60;
constexpr std::size_t kEnumerationOrder = 24;

BinomialFactor minus(std::size_t e, std::size_t m = 1) { return {1, e, m}; }  // (1 - q^e)^m
BinomialFactor plus(std::size_t e, std::size_t m = 1) { return {-1, e, m}; }  // (1 + q^e)^m

RecipePtr family_gf(Family f, bool signed_variant) {
    std::string label = std::string(family_name(f)) + (signed_variant ? "' gf" : " gf");
    return sum_template(std::move(label), family_templates(f).get(signed_variant));
}

// (b, az; q^k)_inf / (c, z; q^k)_inf * 2phi1(c/b, z; az; q^k, b); zero parameters drop out.
RecipePtr heine_rhs(Parameter a, Parameter b, Parameter c, std::size_t k, Parameter z) {
    std::vector<RecipePtr> factors;
    for (Parameter p : {b, a * z}) {
        if (!p.is_zero()) factors.push_back(poch(p, k));
    }
    for (Parameter p : {c, z}) {
        if (!p.is_zero()) factors.push_back(inv_poch(p, k));
    }
    factors.push_back(build::phi21(c / b, z, a * z, k, b));
    return product(std::move(factors));
}

// (c/a, c/b; q^k)_inf / (c, c/ab; q^k)_inf
RecipePtr gauss_rhs(Parameter a, Parameter b, Parameter c, std::size_t k) {
    return product({poch(c / a, k), poch(c / b, k), inv_poch(c, k), inv_poch(c / (a * b), k)});
}

PochFactor factor(int sign, Affine e, std::size_t base, PochLength length, FactorPosition pos,
                  std::size_t power = 1) {
    return {.exponent = e, .sign = sign, .base = base, .length = length, .position = pos, .power = power};
}

// 2q(-q^2;q)_inf^2 (-q^2;q^2)_inf^2
RecipePtr a_theta_part() {
    return scaled(2, shift_up(1, product({poch(mq(2), 1, 2), poch(mq(2), 2, 2)})));
}

// 2q(-q^2;q)_inf (-q^4;q)_inf / ((q^2;q^4)_inf (q^6;q^4)_inf)
RecipePtr b_theta_part() {
    return scaled(2, shift_up(1, product({poch(mq(2), 1), poch(mq(4), 1), inv_poch(q(2), 4), inv_poch(q(6), 4)})));
}

// 2q^3(2-q+q^2)/((1+q)(1+q^3)^2) (-q^2,-q^4;q^2)_inf / (q;q^2)_inf^2
RecipePtr c_theta_part() {
    return product({rational({0, 0, 0, 4, -2, 2}, {plus(1), plus(3, 2)}), poch(mq(2), 2), poch(mq(4), 2),
                    inv_poch(q(1), 2, 2)});
}

TermTemplate mixed_sum_template(bool signed_variant) {
    const int s = signed_variant ? 1 : -1;
    TermTemplate t;
    t.prefix = {2, 1};
    t.factors = {
        factor(s, {2, 6}, 2, PochLength::infinite(), FactorPosition::numerator),
        factor(s, {2, 2}, 2, PochLength::infinite(), FactorPosition::numerator),
        factor(1, {2, 1}, 2, PochLength::infinite(), FactorPosition::denominator, 2),
    };
    return t;
}

RecipePtr mixed_sum_gf(bool plus_sign) {
    return sum_template(plus_sign ? "mixed sum(+) gf" : "mixed sum(-) gf", mixed_sum_template(plus_sign));
}

// The mixed sum decomposed through the A and C families: A(+-) +- q^3 C(+-).
RecipePtr mixed_sum_via_families(bool plus_sign) {
    return combination({{1, family_gf(Family::A, plus_sign)},
                        {plus_sign ? 1 : -1, shift_up(3, family_gf(Family::C, plus_sign))}});
}

RecipePtr mixed_sum_plus_closed() { return rational({0, 1, 1, 1, -1}, {minus(1), minus(3, 2)}); }

RecipePtr mixed_sum_minus_theta_part() {
    return product({a_theta_part(), rational({1, 0, 1, 2}, {plus(2), plus(3, 2)})});
}

RecipePtr mixed_sum_minus_closed() {
    return combination({{1, mixed_sum_minus_theta_part()},
                        {-1, rational({0, 1, -1, 1, 1}, {plus(1), plus(3, 2)})}});
}

struct CaseBuilder {
    std::vector<IdentityCase> cases;

    IdentityCase& add(std::string id, std::string description, std::string source, RecipePtr lhs, RecipePtr rhs,
                      std::string notes = {}) {
        IdentityCase c;
        c.id = std::move(id);
        c.description = std::move(description);
        c.source = std::move(source);
        c.lhs = std::move(lhs);
        c.rhs = std::move(rhs);
        c.notes = std::move(notes);
        c.default_order = c.enumeration_backed() ? kEnumerationOrder : kSeriesOrder;
        cases.push_back(std::move(c));
        return cases.back();
    }
};

void add_product_identities(CaseBuilder& b) {
    b.add("basic-finite-split", "(a;q)_inf = (a;q)_n (aq^n;q)_inf at a = -q, n = 3", "Pochhammer splitting",
          poch(mq(1), 1), product({poch_n(mq(1), 1, 3), poch(mq(4), 1)}));
    b.add("basic-parity-split", "(a;q)_inf = (a;q^2)_inf (aq;q^2)_inf at a = q", "Pochhammer parity splitting",
          poch(q(1), 1), product({poch(q(1), 2), poch(q(2), 2)}));
    b.add("euler", "(-q;q)_inf = 1/(q;q^2)_inf", "Euler's distinct-parts/odd-parts identity", poch(mq(1), 1),
          inv_poch(q(1), 2));
    b.add("fine-7.325-theta", "(q^2;q^2)_inf (-q;q^2)_inf^2 = 1 + 2 sum q^{n^2}", "Jacobi triple product (Fine 7.325)",
          product({poch(q(2), 2), poch(mq(1), 2, 2)}), theta(false));
    b.add("fine-7.324-theta-alternating", "(q^2;q^2)_inf (q;q^2)_inf^2 = 1 + 2 sum (-1)^n q^{n^2}",
          "Jacobi triple product (Fine 7.324)", product({poch(q(2), 2), poch(q(1), 2, 2)}), theta(true),
          "The alternating theta series is the product with (q;q^2)_inf^2. Read with "
          "(-q;q^2)_inf^2 instead, the product is the non-alternating series; the oracle rejects that reading at q^1.");
    b.add("overpartition-odd-gf", "sum pbar_o(n) q^n = (-q;q^2)_inf/(q;q^2)_inf",
          "odd overpartition generating function", overpartitions(true),
          product({poch(mq(1), 2), inv_poch(q(1), 2)}));
    b.add("overpartition-gf", "sum pbar(n) q^n = (-q;q)_inf/(q;q)_inf", "overpartition generating function",
          overpartitions(false), product({poch(mq(1), 1), inv_poch(q(1), 1)}));
}

void add_hypergeometric_identities(CaseBuilder& b) {
    b.add("q-gauss-a-prime", "2phi1(q,q;q^4;q^2,q^2) by q-Gauss", "q-Gauss summation, A' specialization",
          build::phi21(q(1), q(1), q(4), 2, q(2)), gauss_rhs(q(1), q(1), q(4), 2));
    b.add("q-gauss-b-prime", "2phi1(q,q^3;q^6;q^2,q^2) by q-Gauss", "q-Gauss summation, B' specialization",
          build::phi21(q(1), q(3), q(6), 2, q(2)), gauss_rhs(q(1), q(3), q(6), 2));
    b.add("q-gauss-c-prime", "2phi1(q,q;q^6;q^2,q^4) by q-Gauss", "q-Gauss summation, C' specialization",
          build::phi21(q(1), q(1), q(6), 2, q(4)), gauss_rhs(q(1), q(1), q(6), 2));
    b.add("heine-omega", "Heine with (a,b,c,z) = (q,q,0,q^2), base q^2", "Heine transformation",
          build::phi21(q(1), q(1), kZero, 2, q(2)), heine_rhs(q(1), q(1), kZero, 2, q(2)));
    b.add("heine-psi", "Heine with (a,b,c,z) = (0,q,-q^3,q^2), base q^2", "Heine transformation",
          build::phi21(kZero, q(1), mq(3), 2, q(2)), heine_rhs(kZero, q(1), mq(3), 2, q(2)),
          "Encodes the psi step as the Heine instance (0,q,-q^3,q^2); read right to left it gives "
          "2phi1(-q^2,q^2;0;q^2,q) with argument q. An argument of q^2 at that step does not match this instance.");
    b.add("heine-nu", "Heine with (a,b,c,z) = (0,-q,-q^2,q^2), base q^2", "Heine transformation",
          build::phi21(kZero, mq(1), mq(2), 2, q(2)), heine_rhs(kZero, mq(1), mq(2), 2, q(2)));
    b.add("phi21-omega-chain", "q (q^2;q^2)_inf/(q;q^2)_inf^2 2phi1(q,q;0;q^2,q^2) = q omega(q)",
          "Tomega generating function as a 2phi1", shift_up(1, mock(MockFunction::omega, MockForm::defining)),
          shift_up(1, product({poch(q(2), 2), inv_poch(q(1), 2, 2), build::phi21(q(1), q(1), kZero, 2, q(2))})));
}

void add_motivation_identities(CaseBuilder& b) {
    const StatisticFilter even_evens{Parity::even, std::nullopt};
    const StatisticFilter odd_evens{Parity::odd, std::nullopt};
    const StatisticFilter even_parts{std::nullopt, Parity::even};
    const StatisticFilter odd_parts{std::nullopt, Parity::odd};

    b.add("thm-1.2-a", "E(n) = pbar_o(n)", "two-color distinct partitions vs odd overpartitions",
          family_count(Family::E, false), overpartitions(true));
    b.add("thm-1.2-a-product", "sum E(n) q^n = (-q^2;q^2)_inf (-q;q^2)_inf^2", "E generating function",
          family_count(Family::E, false), product({poch(mq(2), 2), poch(mq(1), 2, 2)}));
    b.add("thm-1.2-b", "2 E_0(n) = pbar_o(n) + theta coefficient", "E_0 formula",
          scaled(2, family_count(Family::E, false, even_evens)),
          combination({{1, overpartitions(true)}, {1, theta(false)}}),
          "Checked as 2E_0 = pbar_o + (1 + 2 sum q^{n^2}), which also covers n = 0 where the case split "
          "would give a half-integer.");
    b.add("thm-1.2-c", "2 E_1(n) = pbar_o(n) - theta coefficient", "E_1 formula",
          scaled(2, family_count(Family::E, false, odd_evens)),
          combination({{1, overpartitions(true)}, {-1, theta(false)}}),
          "Checked as 2E_1 = pbar_o - (1 + 2 sum q^{n^2}).");
    b.add("thm-1.2-d", "2 E_2(n) = pbar_o(n) + alternating theta coefficient", "E_2 formula",
          scaled(2, family_count(Family::E, false, even_parts)),
          combination({{1, overpartitions(true)}, {1, theta(true)}}),
          "Checked as 2E_2 = pbar_o + (1 + 2 sum (-1)^k q^{k^2}); (-1)^k = (-1)^n for n = k^2.");
    b.add("thm-1.2-e", "2 E_3(n) = pbar_o(n) - alternating theta coefficient", "E_3 formula",
          scaled(2, family_count(Family::E, false, odd_parts)),
          combination({{1, overpartitions(true)}, {-1, theta(true)}}),
          "Square case verified as pbar_o(n)/2 - (-1)^n. Read as pbar_o(n)/2 - (1)^n it "
          "fails at n = 1 (E_3(1) = 2, pbar_o(1)/2 - 1 = 0).");
    b.add("e0-minus-e1-product", "sum (E_0 - E_1) q^n = (q^2;q^2)_inf (-q;q^2)_inf^2", "signed E generating function",
          family_count(Family::E, true), product({poch(q(2), 2), poch(mq(1), 2, 2)}));
    b.add("e2-minus-e3-product", "sum (E_2 - E_3) q^n = (q^2;q^2)_inf (q;q^2)_inf^2",
          "parts-parity signed E generating function",
          combination({{1, family_count(Family::E, false, even_parts)},
                       {-1, family_count(Family::E, false, odd_parts)}}),
          product({poch(q(2), 2), poch(q(1), 2, 2)}));
    b.add("sec9-f-overpartitions", "F(n) = pbar(n)", "two-color partitions with blue even parts vs overpartitions",
          family_count(Family::F, false), overpartitions(false));
    b.add("sec9-f-product", "(-q;q)_inf/(q;q)_inf = 1/((q;q^2)_inf^2 (q^2;q^2)_inf)", "F generating function",
          product({poch(mq(1), 1), inv_poch(q(1), 1)}), product({inv_poch(q(1), 2, 2), inv_poch(q(2), 2)}));
}

void add_mock_theta_identities(CaseBuilder& b) {
    b.add("thm-2.2-omega", "sum T_omega(n) q^n = q omega(q)", "Tomega family and omega",
          family_gf(Family::Tomega, true), shift_up(1, mock(MockFunction::omega, MockForm::defining)));
    b.add("thm-2.4-psi", "sum T_psi(n) q^n = psi(q)", "Tpsi family and psi", family_gf(Family::Tpsi, true),
          mock(MockFunction::psi, MockForm::defining),
          "psi is summed from n = 1. Starting the sum at n = 0 adds a constant term 1 "
          "that neither the family nor the (-q^2;q^2)_n form has; the oracle rejects the n = 0 start at q^0.");
    b.add("thm-2.6-nu", "sum T_nu(n) q^n = q nu(-q)", "Tnu family and nu", family_gf(Family::Tnu, true),
          shift_up(1, mock(MockFunction::nu, MockForm::defining, ArgumentSign::minus)));
    b.add("fine-12.331-omega", "omega(q) = sum q^n/(q;q^2)_{n+1}", "Fine 12.331",
          mock(MockFunction::omega, MockForm::defining), mock(MockFunction::omega, MockForm::fine));
    b.add("fine-26.53-psi", "psi(q) = sum (-q^2;q^2)_n q^{n+1}", "Fine 26.53",
          mock(MockFunction::psi, MockForm::defining), mock(MockFunction::psi, MockForm::fine),
          "psi summed from n = 1 on the defining side.");
    b.add("fine-26.85-nu", "nu(q) = sum (q;q^2)_n (-q)^n", "Fine 26.85", mock(MockFunction::nu, MockForm::defining),
          mock(MockFunction::nu, MockForm::fine),
          "The defining side is the classical sum q^{n(n+1)}/(-q;q^2)_{n+1}; the other common definition already "
          "uses the (q;q^2)_n (-q)^n form, which would make this check vacuous.");

    TermTemplate direct;
    direct.prefix = {1, 0};
    direct.factors = {factor(-1, {0, 1}, 2, PochLength::index(), FactorPosition::numerator)};
    b.add("nu-negated-direct", "nu(q)|q->-q = sum q^n (-q;q^2)_n", "sign handling of nu(-q)",
          mock(MockFunction::nu, MockForm::fine, ArgumentSign::minus),
          sum_template("sum q^n (-q;q^2)_n", direct));
    b.add("ady-omega", "sum_{n>=1} q^n/((1-q^n)(q^{n+1};q)_n (q^{2n+2};q^2)_inf) = q omega(q)",
          "smallest-part form of omega", sum_template("ady omega", ady_omega_template()),
          shift_up(1, mock(MockFunction::omega, MockForm::defining)));
    b.add("ady-nu", "sum q^n (-q^{n+1};q)_n (-q^{2n+2};q^2)_inf = nu(-q)", "smallest-part form of nu",
          sum_template("ady nu", ady_nu_template()), mock(MockFunction::nu, MockForm::defining, ArgumentSign::minus));
    b.add("cor-2.3", "T_omega(n) = partitions of n whose odd parts are < twice the smallest part",
          "Tomega vs one-color partitions", family_count(Family::Tomega, true), ady_count(false, false));
    b.add("cor-2.7", "T_nu(n+1) = distinct partitions of n whose odd parts are < twice the smallest part",
          "Tnu vs one-color distinct partitions", family_count(Family::Tnu, true),
          shift_up(1, ady_count(true, true)),
          "Holds when a single part 0 may be adjoined as the smallest part (then every other part is even). "
          "With positive parts only the count is short by the number of partitions into distinct even parts; "
          "the oracle rejects that reading at n = 0 (T_nu(1) = 1 vs 0) and, even if the empty partition is "
          "admitted, at n = 2 (T_nu(3) = 2 vs 1).");
}

void add_two_color_identities(CaseBuilder& b) {
    using node::FloorLinear;
    using node::PolynomialSum;

    b.add("thm-3.2-a", "sum A(n) q^n = 2q(-q^2;q)^2(-q^2;q^2)^2 - q/(1+q)^2", "A closed form",
          family_gf(Family::A, false),
          combination({{1, a_theta_part()}, {-1, rational({0, 1}, {plus(1, 2)})}}));
    b.add("thm-3.2-a-sum", "sum A(n) q^n = 2q(-q^2;q)^2(-q^2;q^2)^2 + sum (-1)^n n q^n", "A closed form",
          family_gf(Family::A, false),
          combination({{1, a_theta_part()}, {1, floor_linear(FloorLinear{1, 0, 1, true, 1})}}));
    b.add("thm-3.2-b", "sum A'(n) q^n = q/(1-q)^2", "A' closed form", family_gf(Family::A, true),
          rational({0, 1}, {minus(1, 2)}));
    b.add("thm-3.2-b-sum", "sum A'(n) q^n = sum n q^n", "A' closed form", family_gf(Family::A, true),
          floor_linear(FloorLinear{1, 0, 1, false, 1}));

    b.add("thm-3.4-a", "sum B(n) q^n = 2q(-q^2;q)(-q^4;q)/((q^2;q^4)(q^6;q^4)) - q/((1+q)(1+q^3))", "B closed form",
          family_gf(Family::B, false),
          combination({{1, b_theta_part()}, {-1, rational({0, 1}, {plus(1), plus(3)})}}));
    b.add("thm-3.4-a-sum", "sum B(n) q^n = 2q(...) + sum (-1)^n floor((n+2)/3) q^n", "B closed form",
          family_gf(Family::B, false),
          combination({{1, b_theta_part()}, {1, floor_linear(FloorLinear{1, 2, 3, true, 1})}}));
    b.add("thm-3.4-b", "sum B'(n) q^n = q/((1-q)(1-q^3))", "B' closed form", family_gf(Family::B, true),
          rational({0, 1}, {minus(1), minus(3)}));
    b.add("thm-3.4-b-sum", "sum B'(n) q^n = sum floor((n+2)/3) q^n", "B' closed form", family_gf(Family::B, true),
          floor_linear(FloorLinear{1, 2, 3, false, 1}));

    b.add("thm-3.6-a", "sum C(n) q^n = 2q^3(2-q+q^2)/((1+q)(1+q^3)^2) (-q^2,-q^4;q^2)/(q;q^2)^2 + q^2(1-q)/((1+q)(1+q^3)^2)",
          "C closed form", family_gf(Family::C, false),
          combination({{1, c_theta_part()}, {1, rational({0, 0, 1, -1}, {plus(1), plus(3, 2)})}}));
    b.add("thm-3.6-a-sum", "sum C(n) q^n = 2q^3(...) + sum_{n>=0} (-1)^n (n+1)(n - nq + (n+1)q^2) q^{3n}",
          "C closed form", family_gf(Family::C, false),
          combination({{1, c_theta_part()},
                       {1, polynomial_sum(PolynomialSum{true, 3, 0, 0, {{0, 1, 1}, {0, -1, -1}, {1, 2, 1}}})}}),
          "The sum starts at n = 0 and carries (-1)^n. Read from n = 1 without the sign, "
          "that reading misses the q^2 term and fails at q^2.");
    b.add("thm-3.6-b", "sum C'(n) q^n = q^2(1+q)/((1-q)(1-q^3)^2)", "C' closed form", family_gf(Family::C, true),
          rational({0, 0, 1, 1}, {minus(1), minus(3, 2)}));
    b.add("thm-3.6-b-sum", "sum C'(n) q^n = sum_{n>=0} (n+1)(n + nq + (n+1)q^2) q^{3n}", "C' closed form",
          family_gf(Family::C, true),
          polynomial_sum(PolynomialSum{false, 3, 0, 0, {{0, 1, 1}, {0, 1, 1}, {1, 2, 1}}}),
          "The sum starts at n = 0; its n = 0 summand is the leading q^2. Read from n = 1 it fails at q^2.");

    const std::string fact_note =
        "Uses sum q^{2n+1}(+-q^{2n+6},+-q^{2n+2};q^2)/(q^{2n+1};q^2)^2 = A(+-) +- q^3 C(+-). The sign of "
        "the q^{4n+5} sum is +-; taken as -+ the oracle rejects the step at q^5.";
    b.add("cor-3.7-plus-sign", "sum q^{2n+1}(q^{2n+6},q^{2n+2};q^2)/(q^{2n+1};q^2)^2 = q(1+q+q^2-q^3)/((1-q)(1-q^3)^2)",
          "mixed-parity sum, closed form (+)", mixed_sum_gf(true), mixed_sum_plus_closed());
    b.add("cor-3.7-plus-sign-sum", "same sum = sum (n+1) q^{3n+1} (n+1 + (n+2)q + (n+3)q^2)",
          "mixed-parity sum, closed form (+)", mixed_sum_gf(true),
          polynomial_sum(PolynomialSum{false, 3, 1, 0, {{1, 2, 1}, {2, 3, 1}, {3, 4, 1}}}));
    b.add("cor-3.7-plus-sign-combination", "A' + q^3 C' = q(1+q+q^2-q^3)/((1-q)(1-q^3)^2)",
          "mixed-parity sum via the A and C families (+)", mixed_sum_via_families(true), mixed_sum_plus_closed(), fact_note);
    b.add("cor-3.7-plus-sign-fact", "mixed sum(+) = A' + q^3 C'", "mixed-parity sum decomposition (+)",
          mixed_sum_gf(true), mixed_sum_via_families(true), fact_note);
    b.add("cor-3.7-minus-sign",
          "sum q^{2n+1}(-q^{2n+6},-q^{2n+2};q^2)/(q^{2n+1};q^2)^2 = 2q(-q^2;q)^2(-q^2;q^2)^2 (1-q+2q^2)(1+q)/((1+q^2)(1+q^3)^2) - q(1-q+q^2+q^3)/((1+q)(1+q^3)^2)",
          "mixed-parity sum, closed form (-)", mixed_sum_gf(false), mixed_sum_minus_closed());
    b.add("cor-3.7-minus-sign-sum", "same sum = theta part - sum (-1)^n (n+1) q^{3n+1} (n+1 - (n+2)q + (n+3)q^2)",
          "mixed-parity sum, closed form (-)", mixed_sum_gf(false),
          combination({{1, mixed_sum_minus_theta_part()},
                       {-1, polynomial_sum(PolynomialSum{true, 3, 1, 0, {{1, 2, 1}, {-2, -3, -1}, {3, 4, 1}}})}}),
          "The q^2 coefficient inside the alternating sum is (n+3); with (n+2) it fails at q^3.");
    b.add("cor-3.7-minus-sign-combination", "A - q^3 C = mixed sum(-) closed form",
          "mixed-parity sum via the A and C families (-)", mixed_sum_via_families(false), mixed_sum_minus_closed(), fact_note);
    b.add("cor-3.7-minus-sign-fact", "mixed sum(-) = A - q^3 C", "mixed-parity sum decomposition (-)",
          mixed_sum_gf(false), mixed_sum_via_families(false), fact_note);
}

void add_specialized_identities(CaseBuilder& b) {
    const std::string scaling_note =
        "Specialized at q -> q^2 with the substitutions pre-applied. The factor (-1;q^2)_{n+1} = 2(-q^2;q^2)_n "
        "makes both sides half-integral, so both are multiplied by 2.";
    {
        TermTemplate t;
        t.prefix = {2, 0};
        t.factors = {
            factor(1, {0, 1}, 2, PochLength::index(), FactorPosition::numerator, 2),
            factor(-1, {0, 2}, 2, PochLength::index(), FactorPosition::denominator),
            factor(-1, {0, 2}, 2, PochLength::index_plus_one(), FactorPosition::denominator),
        };
        const RecipePtr c_value = rational({1}, {plus(1, 2)});  // C_{q^2}(q,-1)
        b.add("chan-mao-specialized", "2 sum (q;q^2)_n^2 q^{2n} / (-1,-q^2;q^2)_{n+1} at (y,z) = (q,-1)",
              "Chan-Mao identity", sum_template("2 x lhs", t),
              combination({{2, c_value}, {-1, product({c_value, poch(q(1), 2, 2), inv_poch(mq(2), 2, 2)})}}),
              scaling_note + " C_{q^2}(q,-1) = 1/(1+q)^2.");
    }
    {
        TermTemplate t;
        t.prefix = {2, 2};
        t.factors = {
            factor(1, {0, 1}, 2, PochLength::index(), FactorPosition::numerator),
            factor(1, {0, 3}, 2, PochLength::index(), FactorPosition::numerator),
            factor(-1, {0, 2}, 2, PochLength::index(), FactorPosition::denominator),
            factor(-1, {0, 4}, 2, PochLength::index_plus_one(), FactorPosition::denominator),
        };
        b.add("gea-mel-companion-specialized",
              "2 sum_{n>=1} q^{2n} (q^3,q;q^2)_{n-1} / (-1,-q^4;q^2)_n at (y,z) = (q,-q^{-2})",
              "companion identity", sum_template("2 x lhs", t),
              product({rational({0, 0, 1}, {plus(1), plus(3)}),
                       combination({{2, one()},
                                    {-1, product({poch(q(1), 2), poch(q(3), 2), inv_poch(mq(2), 2),
                                                  inv_poch(mq(4), 2)})}})}),
              scaling_note + " Summation index shifted to start at 0; 1/(y+1/y-z-1/z) = q^2/((1+q)(1+q^3)).");
    }
    {
        TermTemplate t;
        t.prefix = {4, 2};
        t.factors = {
            factor(1, {0, 1}, 2, PochLength::index(), FactorPosition::numerator, 2),
            factor(-1, {0, 2}, 2, PochLength::index(), FactorPosition::denominator),
            factor(-1, {0, 4}, 2, PochLength::index_plus_one(), FactorPosition::denominator),
        };
        b.add("id-appl-1-specialized",
              "2 sum (q;q^2)_n^2 q^{4n+2} / (-1,-q^4;q^2)_{n+1} at (y,z) = (q,-q^{-2})",
              "C_q two-term identity", sum_template("2 x lhs", t),
              combination({{1, product({rational({0, 0, 1, -1}, {plus(1), plus(3, 2)}), poch(q(1), 2, 2),
                                        inv_poch(mq(2), 2), inv_poch(mq(4), 2)})},
                           {-2, rational({0, 0, 1, 0, 0, 0, -1}, {plus(1, 2), plus(3, 2)})},
                           {2, rational({0, 0, 1}, {plus(3, 2)})}}),
              scaling_note + " C_{q^2}(q,-q^{-2}) = q^2/(1+q^3)^2 and C_{q^2}(q,-1) = 1/(1+q)^2.");
    }
}

void add_oracle_cross_checks(CaseBuilder& b) {
    for (Family f : kAllFamilies) {
        const std::string name(family_name(f));
        b.add("oracle-" + name, "enumeration of " + name + " = its smallest-part generating function",
              "enumeration vs generating function", family_count(f, false), family_gf(f, false));
        b.add("oracle-" + name + "-signed", "signed enumeration of " + name + " = its signed generating function",
              "enumeration vs generating function", family_count(f, true), family_gf(f, true));
    }
}

std::vector<IdentityCase> build_catalog() {
    CaseBuilder b;
    add_product_identities(b);
    add_hypergeometric_identities(b);
    add_motivation_identities(b);
    add_mock_theta_identities(b);
    add_two_color_identities(b);
    add_specialized_identities(b);
    add_oracle_cross_checks(b);
    auto& control = b.add("deliberate-mismatch-selftest", "q omega(q) against psi(q); must fail",
                          "negative control", shift_up(1, mock(MockFunction::omega, MockForm::defining)),
                          mock(MockFunction::psi, MockForm::defining),
                          "Expected to mismatch first at q^2 (2 vs 1).");
    control.negative_control = true;
    std::sort(b.cases.begin(), b.cases.end(), [](const auto& x, const auto& y) { return x.id < y.id; });
    return std::move(b.cases);
}

std::vector<RejectedReading> build_rejected() {
    using node::PolynomialSum;
    std::vector<RejectedReading> out;
    auto add = [&](std::string id, std::string description, RecipePtr lhs, RecipePtr rhs, std::size_t at) {
        out.push_back({std::move(id), std::move(description), std::move(lhs), std::move(rhs), 20, at});
    };
    const StatisticFilter odd_parts{std::nullopt, Parity::odd};

    add("thm-1.2-e", "E_3(n) = pbar_o(n)/2 - (1)^n at squares",
        scaled(2, family_count(Family::E, false, odd_parts)),
        combination({{1, overpartitions(true)}, {-1, theta(false)}}), 1);
    add("thm-2.4-psi", "psi summed from n = 0", family_gf(Family::Tpsi, true),
        combination({{1, mock(MockFunction::psi, MockForm::defining)}, {1, one()}}), 0);
    add("thm-3.6-b-sum", "sum C'(n) q^n = sum_{n>=1} (n+1)(n + nq + (n+1)q^2) q^{3n}", family_gf(Family::C, true),
        polynomial_sum(PolynomialSum{false, 3, 0, 1, {{0, 1, 1}, {0, 1, 1}, {1, 2, 1}}}), 2);
    add("thm-3.6-a-sum", "sum C(n) q^n = 2q^3(...) + sum_{n>=1} (n+1)(n - nq + (n+1)q^2) q^{3n}",
        family_gf(Family::C, false),
        combination({{1, c_theta_part()},
                     {1, polynomial_sum(PolynomialSum{false, 3, 0, 1, {{0, 1, 1}, {0, -1, -1}, {1, 2, 1}}})}}),
        2);
    add("fine-7.324-theta-alternating", "(q^2;q^2)_inf (-q;q^2)_inf^2 = 1 + 2 sum (-1)^n q^{n^2}",
        product({poch(q(2), 2), poch(mq(1), 2, 2)}), theta(true), 1);
    add("cor-2.7", "T_nu(n+1) = distinct partitions of n into positive parts, odd parts < twice the smallest",
        family_count(Family::Tnu, true), shift_up(1, ady_count(true, false)), 1);
    add("cor-3.7-minus-sign-sum", "alternating sum with (n+2)q^2", mixed_sum_gf(false),
        combination({{1, mixed_sum_minus_theta_part()},
                     {-1, polynomial_sum(PolynomialSum{true, 3, 1, 0, {{1, 2, 1}, {-2, -3, -1}, {2, 3, 1}}})}}),
        3);
    add("cor-3.7-plus-sign-fact", "mixed sum(+) = A' - q^3 C'", mixed_sum_gf(true),
        combination({{1, family_gf(Family::A, true)}, {-1, shift_up(3, family_gf(Family::C, true))}}), 5);
    add("cor-3.7-minus-sign-fact", "mixed sum(-) = A + q^3 C", mixed_sum_gf(false),
        combination({{1, family_gf(Family::A, false)}, {1, shift_up(3, family_gf(Family::C, false))}}), 5);
    return out;
}

}  // namespace

const std::vector<RejectedReading>& rejected_readings() {
    static const std::vector<RejectedReading> readings = build_rejected();
    return readings;
}

Comparison check(const RejectedReading& r, const EvalContext& ctx) {
    return equal_up_to(evaluate(*r.lhs, r.order, ctx), evaluate(*r.rhs, r.order, ctx), r.order);
}

bool IdentityCase::enumeration_backed() const {
    return qplab::enumeration_backed(*lhs) || qplab::enumeration_backed(*rhs);
}

bool IdentityReport::as_expected() const {
    return negative_control ? status == VerifyStatus::mismatch : status == VerifyStatus::pass;
}

const std::vector<IdentityCase>& list_identities() {
    static const std::vector<IdentityCase> catalog = build_catalog();
    return catalog;
}

const IdentityCase& find_identity(std::string_view id) {
    const auto& all = list_identities();
    const auto it = std::find_if(all.begin(), all.end(), [&](const IdentityCase& c) { return c.id == id; });
    if (it == all.end()) throw UnknownIdentity(std::string(id));
    return *it;
}

IdentityReport verify(const IdentityCase& c, const VerifyOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    IdentityReport report;
    report.id = c.id;
    report.notes = c.notes;
    report.negative_control = c.negative_control;
    report.order_requested = options.order.value_or(c.default_order);
    report.order_checked = report.order_requested;
    if (c.enumeration_backed() && report.order_checked > options.enumeration_budget) {
        report.order_checked = options.enumeration_budget;
        report.clamped = true;
    }

    const EvalContext ctx{options.enumeration_budget};
    try {
        const Series lhs = evaluate(*c.lhs, report.order_checked, ctx);
        const Series rhs = evaluate(*c.rhs, report.order_checked, ctx);
        const Comparison cmp = equal_up_to(lhs, rhs, report.order_checked);
        report.status = cmp.equal() ? VerifyStatus::pass : VerifyStatus::mismatch;
        report.mismatch = cmp.mismatch;
    } catch (const SeriesError& e) {
        report.status = VerifyStatus::skipped;
        report.skip_reason = e.what();
    }
    report.elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return report;
}

IdentityReport verify(std::string_view id, const VerifyOptions& options) {
    return verify(find_identity(id), options);
}

std::vector<IdentityReport> verify_all(const VerifyOptions& options) {
    const auto& cases = list_identities();
    std::vector<IdentityReport> reports(cases.size());
    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    if (threads <= 1) {
        for (std::size_t i = 0; i < cases.size(); ++i) reports[i] = verify(cases[i], options);
        return reports;
    }
    // Cases are independent; each worker strides through the catalog and writes its own slots.
    std::vector<std::future<void>> workers;
    for (unsigned w = 0; w < threads; ++w) {
        workers.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < cases.size(); i += threads) reports[i] = verify(cases[i], options);
        }));
    }
    for (auto& f : workers) f.get();
    return reports;
}

bool all_as_expected(const std::vector<IdentityReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const IdentityReport& r) { return r.as_expected(); });
}

std::string_view to_string(VerifyStatus s) {
    switch (s) {
        case VerifyStatus::pass: return "pass";
        case VerifyStatus::mismatch: return "mismatch";
        case VerifyStatus::skipped: return "skipped";
    }
    return "?";
}

}  // namespace qplab
