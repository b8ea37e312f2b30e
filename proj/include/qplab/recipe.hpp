#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qplab/families.hpp"
#include "qplab/mock_theta.hpp"
#include "qplab/partitions.hpp"
#include "qplab/qengine.hpp"
#include "qplab/series.hpp"

namespace qplab {

class Recipe;
using RecipePtr = std::shared_ptr<const Recipe>;

/// Composition tree describing how one side of an identity is computed.
/// Nodes are plain data so the computation can be printed as an audit trail.
namespace node {

struct Polynomial {
    std::vector<long long> coeffs;
};
/// (a; q^base)_length^power, or its inverse; length unset means infinite.
struct Poch {
    Parameter a;
    std::size_t base = 1;
    std::optional<std::size_t> length;
    std::size_t power = 1;
    bool inverse = false;
};
struct Rational {
    std::vector<long long> numerator;
    std::vector<BinomialFactor> denominator;
};
struct Template {
    std::string label;
    TermTemplate term;
};
struct Phi21 {
    Parameter a, b, c;
    std::size_t base = 1;
    Parameter z;
};
struct MockTheta {
    MockThetaForm form;
};
struct Theta {
    bool alternating = false;
};
/// Coefficients counted by the exhaustive enumerator.
struct FamilyCount {
    Family family;
    bool weighted = false;
    StatisticFilter filter;
};
struct Overpartitions {
    bool odd_only = false;
};
struct AdyCount {
    bool distinct = false;
    bool allow_zero_part = false;
};
/// Coefficient of q^n is (+-1)^n floor((a n + b) / d) for n >= start, zero below.
struct FloorLinear {
    long long a = 1, b = 0, d = 1;
    bool alternating = false;
    std::size_t start = 0;
};
/// sum_{n >= start} (+-1)^n q^{alpha n + beta} sum_i P_i(n) q^i, with P_i given by coefficients in n.
struct PolynomialSum {
    bool alternating = false;
    std::size_t alpha = 1, beta = 0, start = 0;
    std::vector<std::vector<long long>> polys;
};
struct Product {
    std::vector<RecipePtr> factors;
};
struct Combination {
    std::vector<std::pair<BigInt, RecipePtr>> terms;
};
struct ShiftUp {
    std::size_t k = 0;
    RecipePtr inner;
};
struct NegateVariable {
    RecipePtr inner;
};
struct SubstitutePower {
    std::size_t k = 1;
    RecipePtr inner;
};

}  // namespace node

class Recipe {
public:
    using Node = std::variant<node::Polynomial, node::Poch, node::Rational, node::Template, node::Phi21,
                              node::MockTheta, node::Theta, node::FamilyCount, node::Overpartitions, node::AdyCount,
                              node::FloorLinear, node::PolynomialSum, node::Product, node::Combination,
                              node::ShiftUp, node::NegateVariable, node::SubstitutePower>;

    explicit Recipe(Node n) : node_(std::move(n)) {}
    const Node& node() const noexcept { return node_; }

private:
    Node node_;
};

struct EvalContext {
    std::size_t enumeration_budget = kDefaultEnumerationBudget;
};

Series evaluate(const Recipe& r, std::size_t order, const EvalContext& ctx = {});
/// Whether any leaf runs an exhaustive enumeration.
bool enumeration_backed(const Recipe& r);
/// One-line rendering of the tree.
std::string describe(const Recipe& r);

/// Builders.
namespace build {

RecipePtr polynomial(std::vector<long long> coeffs);
RecipePtr one();
RecipePtr poch(Parameter a, std::size_t base, std::size_t power = 1);
RecipePtr inv_poch(Parameter a, std::size_t base, std::size_t power = 1);
RecipePtr poch_n(Parameter a, std::size_t base, std::size_t length);
RecipePtr rational(std::vector<long long> numerator, std::vector<BinomialFactor> denominator);
RecipePtr sum_template(std::string label, TermTemplate t);
RecipePtr phi21(Parameter a, Parameter b, Parameter c, std::size_t base, Parameter z);
RecipePtr mock(MockFunction f, MockForm form, ArgumentSign sign = ArgumentSign::plus);
RecipePtr theta(bool alternating);
RecipePtr family_count(Family f, bool weighted, StatisticFilter filter = {});
RecipePtr overpartitions(bool odd_only);
RecipePtr ady_count(bool distinct, bool allow_zero_part);
RecipePtr floor_linear(node::FloorLinear f);
RecipePtr polynomial_sum(node::PolynomialSum s);
RecipePtr product(std::vector<RecipePtr> factors);
RecipePtr combination(std::vector<std::pair<BigInt, RecipePtr>> terms);
RecipePtr scaled(BigInt k, RecipePtr r);
RecipePtr shift_up(std::size_t k, RecipePtr r);
RecipePtr negate_variable(RecipePtr r);
RecipePtr substitute_power(std::size_t k, RecipePtr r);

}  // namespace build

}  // namespace qplab
