#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ontoqual/indicators.hpp"

namespace ontoqual {

// The 17 generalized conjunction/disjunction operators, from full
// conjunction C (min) through the neutral arithmetic mean A to full
// disjunction D (max). Each non-limit operator maps to a weighted-power-mean
// exponent that depends on the number of inputs.
enum class LspOperator {
    C,   // pure conjunction: min
    Cpp, // C++
    Cp,  // C+
    Cpm, // C+-
    CA,
    Cmp, // C-+
    Cm,  // C-
    Cmm, // C--
    A,   // arithmetic mean, r = 1
    Dmm, // D--
    Dm,  // D-
    Dmp, // D-+
    DA,
    Dpm, // D+-
    Dp,  // D+
    Dpp, // D++
    D,   // pure disjunction: max
};

inline constexpr int kLspOperatorCount = 17;

std::string_view to_string(LspOperator op);
std::optional<LspOperator> parse_operator(std::string_view text);

// C and D have no finite exponent; they evaluate as min/max.
bool is_limit(LspOperator op);

// Exponent table for the non-limit operators at arities 2..5.
class OperatorTable {
public:
    // The standard exponent table (also shipped as data/lsp-operators.json).
    // Anchors reproduced from published evaluations: r(C--,2) = 0.619 and
    // r(C+,2) = -3.510.
    static const OperatorTable& standard();

    // Parses the data-file form: {"exponents": {"C+": [r2, r3, r4, r5], ...}}.
    // Missing operators keep their standard values. Throws ParseError.
    static OperatorTable parse(std::string_view json_text);

    // Returns the tabulated exponent; arities above 5 use the nearest
    // tabulated entry. Throws ContractError for arity < 2 and for the limit
    // operators C and D (callers must take the min/max path).
    double exponent_for(LspOperator op, int arity) const;

    void set(LspOperator op, int arity, double r);

    bool operator==(const OperatorTable&) const = default;

private:
    OperatorTable() = default;
    // exponents_[op][arity - 2]; limit rows unused
    std::array<std::array<double, 4>, kLspOperatorCount> exponents_{};
};

// Weighted power mean (sum_i w_i * x_i^r)^(1/r) with the conventions:
//   r = +inf  -> max, r = -inf -> min;
//   |r| < 1e-6 -> weighted geometric mean;
//   r < 0 with any x_i = 0 -> 0 (annihilator limit).
// Requires >= 2 values, weights positive and summing to 1 within 1e-9, and
// non-negative values; throws ContractError otherwise.
double weighted_power_mean(std::span<const double> values,
                           std::span<const double> weights, double r);

// A node of the quality requirements tree: either an attribute leaf bound to
// an elementary indicator, or a characteristic aggregating >= 2 children.
struct RequirementsNode {
    enum class Kind { Attribute, Characteristic };

    std::string id;   // dotted numeral, e.g. "1.1.4"
    std::string name;
    Kind kind = Kind::Attribute;
    double weight = 1.0; // weight within the parent; root weight is 1
    std::optional<LspOperator> op;         // characteristics only
    std::vector<RequirementsNode> children; // characteristics only
    std::string indicator; // attributes: expected indicator name (may be empty)
};

struct RequirementsModel {
    RequirementsNode root;
    OperatorTable operators = OperatorTable::standard();
};

// Scored tree mirroring the RequirementsNode topology.
struct EvaluationResult {
    std::string node_id;
    double value = 0;
    AcceptabilityLevel level = AcceptabilityLevel::Unsatisfactory;
    std::vector<EvaluationResult> children;
};

// Structural invariants: unique ids, attributes are leaves, characteristics
// carry an operator and >= 2 children whose weights sum to 1 within 1e-9,
// weights in (0,1], root weight 1. Throws ModelError.
void validate_model(const RequirementsNode& root);

// The bundled model: the structural/reuse quality requirements tree with
// its published weights and operators.
const RequirementsModel& default_model();

// Parses a model file: recursive {id, name, kind, weight, operator?,
// children?, indicator?} nodes, plus an optional root-level "operator_table"
// override. Throws ParseError / ModelError.
RequirementsModel parse_model(std::string_view json_text);
RequirementsModel load_model(const std::string& path);

// Evaluates the tree bottom-up: leaves take their elementary score, each
// characteristic the weighted power mean of its children. Throws
// BindingError when a leaf has no or several matching elementary results.
EvaluationResult evaluate_tree(const RequirementsNode& tree,
                               const std::vector<ElementaryResult>& elems,
                               const OperatorTable& ops = OperatorTable::standard());

} // namespace ontoqual
