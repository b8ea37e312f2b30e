#include "qplab/recipe.hpp"

#include <sstream>

namespace qplab {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

BigInt eval_poly_in_n(const std::vector<long long>& coeffs, std::size_t n) {
    BigInt acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * n + coeffs[i];
    return acc;
}

long long floor_div(long long num, long long den) {
    long long q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
    return q;
}

void require_budget(std::size_t order, const EvalContext& ctx) {
    if (order > ctx.enumeration_budget) {
        throw SeriesError("enumeration order " + std::to_string(order) + " exceeds budget " +
                          std::to_string(ctx.enumeration_budget));
    }
}

Series evaluate_node(const Recipe::Node& node, std::size_t order, const EvalContext& ctx) {
    return std::visit(
        overloaded{
            [&](const node::Polynomial& p) {
                std::vector<BigInt> c(order + 1);
                for (std::size_t i = 0; i < p.coeffs.size() && i <= order; ++i) c[i] = p.coeffs[i];
                return Series(std::move(c));
            },
            [&](const node::Poch& p) {
                Series base = p.length ? poch_finite(p.a, p.base, *p.length, order) : poch_infinite(p.a, p.base, order);
                if (p.inverse) base = invert(base);
                Series out = Series::one(order);
                for (std::size_t i = 0; i < p.power; ++i) out = out * base;
                return out;
            },
            [&](const node::Rational& r) { return rational_series(r.numerator, r.denominator, order); },
            [&](const node::Template& t) { return sum_over_smallest(t.term, order); },
            [&](const node::Phi21& p) { return phi21(p.a, p.b, p.c, p.base, p.z, order); },
            [&](const node::MockTheta& m) { return mock_theta(m.form, order); },
            [&](const node::Theta& t) { return theta_squares(order, t.alternating); },
            [&](const node::FamilyCount& f) {
                require_budget(order, ctx);
                FamilySpec spec = family_spec(f.family);
                spec.filter = f.filter;
                return brute_force_series(spec, order, f.weighted, ctx.enumeration_budget);
            },
            [&](const node::Overpartitions& o) {
                require_budget(order, ctx);
                std::vector<BigInt> c(order + 1);
                for (std::size_t n = 0; n <= order; ++n) c[n] = count_overpartitions(n, o.odd_only);
                return Series(std::move(c));
            },
            [&](const node::AdyCount& a) {
                require_budget(order, ctx);
                std::vector<BigInt> c(order + 1);
                for (std::size_t n = 0; n <= order; ++n) c[n] = count_ady(n, a.distinct, a.allow_zero_part);
                return Series(std::move(c));
            },
            [&](const node::FloorLinear& f) {
                std::vector<BigInt> c(order + 1);
                for (std::size_t n = f.start; n <= order; ++n) {
                    const long long v = floor_div(f.a * static_cast<long long>(n) + f.b, f.d);
                    c[n] = (f.alternating && n % 2 == 1) ? -v : v;
                }
                return Series(std::move(c));
            },
            [&](const node::PolynomialSum& s) {
                if (s.alpha == 0) throw SeriesError("polynomial sum needs a positive step");
                std::vector<BigInt> c(order + 1);
                for (std::size_t n = s.start; s.alpha * n + s.beta <= order; ++n) {
                    const std::size_t base = s.alpha * n + s.beta;
                    for (std::size_t i = 0; i < s.polys.size() && base + i <= order; ++i) {
                        const BigInt v = eval_poly_in_n(s.polys[i], n);
                        if (s.alternating && n % 2 == 1) {
                            c[base + i] -= v;
                        } else {
                            c[base + i] += v;
                        }
                    }
                }
                return Series(std::move(c));
            },
            [&](const node::Product& p) {
                Series out = Series::one(order);
                for (const auto& f : p.factors) out = out * evaluate(*f, order, ctx);
                return out;
            },
            [&](const node::Combination& c) {
                std::vector<std::pair<BigInt, Series>> terms;
                terms.reserve(c.terms.size());
                for (const auto& [k, r] : c.terms) terms.emplace_back(k, evaluate(*r, order, ctx));
                return linear_combine(terms);
            },
            [&](const node::ShiftUp& s) { return shift_up(evaluate(*s.inner, order, ctx), s.k); },
            [&](const node::NegateVariable& n) { return negate_variable(evaluate(*n.inner, order, ctx)); },
            [&](const node::SubstitutePower& s) { return substitute_power(evaluate(*s.inner, order, ctx), s.k); },
        },
        node);
}

std::string poly_string(const std::vector<long long>& coeffs, const char* var) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const long long c = coeffs[i];
        if (c == 0) continue;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << '-';
        const long long mag = c < 0 ? -c : c;
        if (i == 0 || mag != 1) os << mag;
        if (i > 0) os << var;
        if (i > 1) os << '^' << i;
        first = false;
    }
    if (first) os << '0';
    return os.str();
}

}  // namespace

Series evaluate(const Recipe& r, std::size_t order, const EvalContext& ctx) {
    return evaluate_node(r.node(), order, ctx);
}

bool enumeration_backed(const Recipe& r) {
    return std::visit(overloaded{
                          [](const node::FamilyCount&) { return true; },
                          [](const node::Overpartitions&) { return true; },
                          [](const node::AdyCount&) { return true; },
                          [](const node::Product& p) {
                              for (const auto& f : p.factors) {
                                  if (enumeration_backed(*f)) return true;
                              }
                              return false;
                          },
                          [](const node::Combination& c) {
                              for (const auto& t : c.terms) {
                                  if (enumeration_backed(*t.second)) return true;
                              }
                              return false;
                          },
                          [](const node::ShiftUp& s) { return enumeration_backed(*s.inner); },
                          [](const node::NegateVariable& n) { return enumeration_backed(*n.inner); },
                          [](const node::SubstitutePower& s) { return enumeration_backed(*s.inner); },
                          [](const auto&) { return false; },
                      },
                      r.node());
}

std::string describe(const Recipe& r) {
    return std::visit(
        overloaded{
            [](const node::Polynomial& p) { return "(" + poly_string(p.coeffs, "q") + ")"; },
            [](const node::Poch& p) {
                std::string s = "(" + to_string(p.a) + ";q" + (p.base != 1 ? "^" + std::to_string(p.base) : "") +
                                ")_" + (p.length ? std::to_string(*p.length) : std::string("inf"));
                if (p.power != 1) s += "^" + std::to_string(p.power);
                return p.inverse ? "1/" + s : s;
            },
            [](const node::Rational& r) {
                std::string den;
                for (const auto& f : r.denominator) {
                    den += std::string("(1") + (f.sign > 0 ? "-" : "+") + "q^" + std::to_string(f.exponent) + ")";
                    if (f.multiplicity != 1) den += "^" + std::to_string(f.multiplicity);
                }
                return "(" + poly_string(r.numerator, "q") + ")/(" + den + ")";
            },
            [](const node::Template& t) { return t.label + " := " + describe(t.term); },
            [](const node::Phi21& p) {
                return "2phi1(" + to_string(p.a) + "," + to_string(p.b) + ";" + to_string(p.c) + ";q^" +
                       std::to_string(p.base) + "," + to_string(p.z) + ")";
            },
            [](const node::MockTheta& m) { return to_string(m.form); },
            [](const node::Theta& t) {
                return std::string(t.alternating ? "1+2sum (-1)^n q^{n^2}" : "1+2sum q^{n^2}");
            },
            [](const node::FamilyCount& f) {
                std::string s = "enumerate(" + std::string(family_name(f.family));
                if (f.weighted) s += ", signed";
                if (f.filter.even_parts) s += f.filter.even_parts == Parity::even ? ", #even even" : ", #even odd";
                if (f.filter.parts) s += f.filter.parts == Parity::even ? ", #parts even" : ", #parts odd";
                return s + ")";
            },
            [](const node::Overpartitions& o) {
                return std::string(o.odd_only ? "overpartitions(odd parts)" : "overpartitions(all parts)");
            },
            [](const node::AdyCount& a) {
                std::string s = "ady_count(";
                s += a.distinct ? "distinct" : "repeated";
                if (a.allow_zero_part) s += ", zero part allowed";
                return s + ")";
            },
            [](const node::FloorLinear& f) {
                std::ostringstream os;
                os << "sum_{n>=" << f.start << "} " << (f.alternating ? "(-1)^n " : "") << "floor((" << f.a << "n+"
                   << f.b << ")/" << f.d << ") q^n";
                return os.str();
            },
            [](const node::PolynomialSum& s) {
                std::ostringstream os;
                os << "sum_{n>=" << s.start << "} " << (s.alternating ? "(-1)^n " : "") << "q^{" << s.alpha << "n+"
                   << s.beta << "} (";
                for (std::size_t i = 0; i < s.polys.size(); ++i) {
                    if (i) os << " + ";
                    os << '(' << poly_string(s.polys[i], "n") << ")q^" << i;
                }
                os << ')';
                return os.str();
            },
            [](const node::Product& p) {
                std::string s;
                for (const auto& f : p.factors) s += (s.empty() ? "" : " * ") + describe(*f);
                return s;
            },
            [](const node::Combination& c) {
                std::string s;
                for (const auto& [k, r] : c.terms) {
                    if (!s.empty()) s += " + ";
                    s += k.str() + "*[" + describe(*r) + "]";
                }
                return s;
            },
            [](const node::ShiftUp& s) { return "q^" + std::to_string(s.k) + "*[" + describe(*s.inner) + "]"; },
            [](const node::NegateVariable& n) { return "[" + describe(*n.inner) + "]|q->-q"; },
            [](const node::SubstitutePower& s) {
                return "[" + describe(*s.inner) + "]|q->q^" + std::to_string(s.k);
            },
        },
        r.node());
}

namespace build {

namespace {
RecipePtr make(Recipe::Node n) {
    return std::make_shared<const Recipe>(std::move(n));
}
}  // namespace

RecipePtr polynomial(std::vector<long long> coeffs) { return make(node::Polynomial{std::move(coeffs)}); }
RecipePtr one() { return polynomial({1}); }
RecipePtr poch(Parameter a, std::size_t base, std::size_t power) {
    return make(node::Poch{a, base, std::nullopt, power, false});
}
RecipePtr inv_poch(Parameter a, std::size_t base, std::size_t power) {
    return make(node::Poch{a, base, std::nullopt, power, true});
}
RecipePtr poch_n(Parameter a, std::size_t base, std::size_t length) {
    return make(node::Poch{a, base, length, 1, false});
}
RecipePtr rational(std::vector<long long> numerator, std::vector<BinomialFactor> denominator) {
    return make(node::Rational{std::move(numerator), std::move(denominator)});
}
RecipePtr sum_template(std::string label, TermTemplate t) { return make(node::Template{std::move(label), std::move(t)}); }
RecipePtr phi21(Parameter a, Parameter b, Parameter c, std::size_t base, Parameter z) {
    return make(node::Phi21{a, b, c, base, z});
}
RecipePtr mock(MockFunction f, MockForm form, ArgumentSign sign) { return make(node::MockTheta{{f, form, sign}}); }
RecipePtr theta(bool alternating) { return make(node::Theta{alternating}); }
RecipePtr family_count(Family f, bool weighted, StatisticFilter filter) {
    return make(node::FamilyCount{f, weighted, filter});
}
RecipePtr overpartitions(bool odd_only) { return make(node::Overpartitions{odd_only}); }
RecipePtr ady_count(bool distinct, bool allow_zero_part) { return make(node::AdyCount{distinct, allow_zero_part}); }
RecipePtr floor_linear(node::FloorLinear f) { return make(f); }
RecipePtr polynomial_sum(node::PolynomialSum s) { return make(std::move(s)); }
RecipePtr product(std::vector<RecipePtr> factors) { return make(node::Product{std::move(factors)}); }
RecipePtr combination(std::vector<std::pair<BigInt, RecipePtr>> terms) {
    return make(node::Combination{std::move(terms)});
}
RecipePtr scaled(BigInt k, RecipePtr r) { return combination({{std::move(k), std::move(r)}}); }
RecipePtr shift_up(std::size_t k, RecipePtr r) { return make(node::ShiftUp{k, std::move(r)}); }
RecipePtr negate_variable(RecipePtr r) { return make(node::NegateVariable{std::move(r)}); }
RecipePtr substitute_power(std::size_t k, RecipePtr r) { return make(node::SubstitutePower{k, std::move(r)}); }

}  // namespace build

}  // namespace qplab
