#include "ontoqual/lsp.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ontoqual/defaults.hpp"

namespace ontoqual {

using nlohmann::json;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kWeightSumTolerance = 1e-9;
// Below this magnitude the power mean is numerically the geometric mean.
constexpr double kGeometricCutoff = 1e-6;
// Inputs smaller than this get the log-space path for negative exponents,
// where x^r would overflow.
constexpr double kLogSpaceCutoff = 1e-3;

struct OperatorName {
    LspOperator op;
    std::string_view text;
};

constexpr OperatorName kOperatorNames[] = {
    {LspOperator::C, "C"},     {LspOperator::Cpp, "C++"}, {LspOperator::Cp, "C+"},
    {LspOperator::Cpm, "C+-"}, {LspOperator::CA, "CA"},   {LspOperator::Cmp, "C-+"},
    {LspOperator::Cm, "C-"},   {LspOperator::Cmm, "C--"}, {LspOperator::A, "A"},
    {LspOperator::Dmm, "D--"}, {LspOperator::Dm, "D-"},   {LspOperator::Dmp, "D-+"},
    {LspOperator::DA, "DA"},   {LspOperator::Dpm, "D+-"}, {LspOperator::Dp, "D+"},
    {LspOperator::Dpp, "D++"}, {LspOperator::D, "D"},
};

} // namespace

std::string_view to_string(LspOperator op) {
    for (const OperatorName& entry : kOperatorNames)
        if (entry.op == op) return entry.text;
    return "?";
}

std::optional<LspOperator> parse_operator(std::string_view text) {
    for (const OperatorName& entry : kOperatorNames)
        if (entry.text == text) return entry.op;
    return std::nullopt;
}

bool is_limit(LspOperator op) { return op == LspOperator::C || op == LspOperator::D; }

const OperatorTable& OperatorTable::standard() {
    static const OperatorTable table = parse(defaults::kOperatorTableJson);
    return table;
}

OperatorTable OperatorTable::parse(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed operator table: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("exponents") || !doc["exponents"].is_object())
        throw ParseError("operator table needs an 'exponents' object");

    OperatorTable table;
    // Start from the arithmetic mean everywhere so partial overrides of the
    // standard table stay total.
    for (auto& row : table.exponents_) row.fill(1.0);

    for (const auto& [key, value] : doc["exponents"].items()) {
        const std::optional<LspOperator> op = parse_operator(key);
        if (!op) throw ParseError("unknown operator label '" + key + "'");
        if (is_limit(*op))
            throw ParseError("operator '" + key + "' is a limit operator and has no exponent");
        if (!value.is_array() || value.size() != 4)
            throw ParseError("operator '" + key + "' needs exactly 4 exponents (arities 2..5)");
        for (size_t i = 0; i < 4; ++i) {
            if (!value[i].is_number())
                throw ParseError("operator '" + key + "' exponents must be numbers");
            table.exponents_[static_cast<size_t>(*op)][i] = value[i].get<double>();
        }
    }
    return table;
}

double OperatorTable::exponent_for(LspOperator op, int arity) const {
    if (is_limit(op))
        throw ContractError("operator " + std::string(to_string(op)) +
                            " has no exponent; use the min/max path");
    if (arity < 2) throw ContractError("aggregation needs at least 2 inputs");
    const int clamped = std::min(arity, 5); // nearest tabulated arity
    return exponents_[static_cast<size_t>(op)][static_cast<size_t>(clamped - 2)];
}

void OperatorTable::set(LspOperator op, int arity, double r) {
    if (is_limit(op)) throw ContractError("limit operators carry no exponent");
    if (arity < 2 || arity > 5) throw ContractError("arity must be in 2..5");
    exponents_[static_cast<size_t>(op)][static_cast<size_t>(arity - 2)] = r;
}

double weighted_power_mean(std::span<const double> values, std::span<const double> weights,
                           double r) {
    if (values.size() != weights.size())
        throw ContractError("values and weights must have equal length");
    if (values.size() < 2) throw ContractError("weighted power mean needs at least 2 inputs");

    double weight_sum = 0;
    bool has_zero = false;
    for (size_t i = 0; i < values.size(); ++i) {
        if (!(weights[i] > 0)) throw ContractError("weights must be positive");
        if (std::isnan(values[i]) || values[i] < 0)
            throw ContractError("values must be non-negative");
        weight_sum += weights[i];
        has_zero = has_zero || values[i] == 0.0;
    }
    if (std::abs(weight_sum - 1.0) > kWeightSumTolerance)
        throw ContractError("weights must sum to 1");

    if (r == kInf) return *std::max_element(values.begin(), values.end());
    if (r == -kInf) return *std::min_element(values.begin(), values.end());

    if (std::abs(r) < kGeometricCutoff) {
        if (has_zero) return 0.0;
        double log_mean = 0;
        for (size_t i = 0; i < values.size(); ++i) log_mean += weights[i] * std::log(values[i]);
        return std::exp(log_mean);
    }

    if (r < 0) {
        if (has_zero) return 0.0; // annihilator limit of x^r as x -> 0
        const double min_value = *std::min_element(values.begin(), values.end());
        if (min_value < kLogSpaceCutoff) {
            // log-sum-exp keeps x^r finite for tiny x
            double shift = -kInf;
            for (double x : values) shift = std::max(shift, r * std::log(x));
            double sum = 0;
            for (size_t i = 0; i < values.size(); ++i)
                sum += weights[i] * std::exp(r * std::log(values[i]) - shift);
            return std::exp((shift + std::log(sum)) / r);
        }
    }

    double sum = 0;
    for (size_t i = 0; i < values.size(); ++i) sum += weights[i] * std::pow(values[i], r);
    if (sum == 0.0) return 0.0;
    return std::pow(sum, 1.0 / r);
}

namespace {

void validate_node(const RequirementsNode& node, bool is_root, std::set<std::string>& seen_ids) {
    if (node.id.empty()) throw ModelError("every node needs a non-empty id");
    if (!seen_ids.insert(node.id).second)
        throw ModelError("duplicate node id '" + node.id + "'");
    if (!(node.weight > 0 && node.weight <= 1))
        throw ModelError("node '" + node.id + "': weight must lie in (0,1]");
    if (is_root && node.weight != 1.0)
        throw ModelError("root node weight is fixed at 1");

    if (node.kind == RequirementsNode::Kind::Attribute) {
        if (!node.children.empty())
            throw ModelError("attribute '" + node.id + "' must be a leaf");
        return;
    }

    if (!node.op)
        throw ModelError("characteristic '" + node.id + "' needs an aggregation operator");
    if (node.children.size() < 2)
        throw ModelError("characteristic '" + node.id + "' needs at least 2 children");
    double weight_sum = 0;
    for (const RequirementsNode& child : node.children) weight_sum += child.weight;
    if (std::abs(weight_sum - 1.0) > kWeightSumTolerance) {
        std::ostringstream os;
        os << "characteristic '" << node.id << "': children weights sum to " << weight_sum
           << ", expected 1";
        throw ModelError(os.str());
    }
    for (const RequirementsNode& child : node.children) validate_node(child, false, seen_ids);
}

RequirementsNode parse_node(const json& obj, const std::string& path) {
    if (!obj.is_object()) throw ParseError(path + ": expected an object");

    auto text_field = [&](const char* key, bool required) -> std::string {
        auto it = obj.find(key);
        if (it == obj.end()) {
            if (required) throw ParseError(path + ": missing field '" + key + "'");
            return {};
        }
        if (!it->is_string()) throw ParseError(path + "." + key + ": expected a string");
        return it->get<std::string>();
    };

    RequirementsNode node;
    node.id = text_field("id", true);
    node.name = text_field("name", true);

    const std::string kind = text_field("kind", true);
    if (kind == "attribute")
        node.kind = RequirementsNode::Kind::Attribute;
    else if (kind == "characteristic")
        node.kind = RequirementsNode::Kind::Characteristic;
    else
        throw ParseError(path + ".kind: unknown kind '" + kind + "'");

    if (auto it = obj.find("weight"); it != obj.end()) {
        if (!it->is_number()) throw ParseError(path + ".weight: expected a number");
        node.weight = it->get<double>();
    }

    if (const std::string op_text = text_field("operator", false); !op_text.empty()) {
        node.op = parse_operator(op_text);
        if (!node.op) throw ParseError(path + ".operator: unknown operator '" + op_text + "'");
    }
    node.indicator = text_field("indicator", false);

    if (auto it = obj.find("children"); it != obj.end()) {
        if (!it->is_array()) throw ParseError(path + ".children: expected an array");
        for (size_t i = 0; i < it->size(); ++i)
            node.children.push_back(parse_node((*it)[i], path + ".children[" + std::to_string(i) + "]"));
    }
    return node;
}

} // namespace

void validate_model(const RequirementsNode& root) {
    std::set<std::string> seen_ids;
    validate_node(root, true, seen_ids);
}

RequirementsModel parse_model(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed model document: ") + e.what());
    }

    RequirementsModel model;
    model.root = parse_node(doc, "$");
    if (doc.is_object() && doc.contains("operator_table"))
        model.operators = OperatorTable::parse(doc["operator_table"].dump());
    validate_model(model.root);
    return model;
}

RequirementsModel load_model(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open model file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_model(buffer.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

const RequirementsModel& default_model() {
    static const RequirementsModel model = parse_model(defaults::kDefaultModelJson);
    return model;
}

namespace {

EvaluationResult evaluate_node(const RequirementsNode& node,
                               const std::vector<ElementaryResult>& elems,
                               const OperatorTable& ops) {
    EvaluationResult result;
    result.node_id = node.id;

    if (node.kind == RequirementsNode::Kind::Attribute) {
        const ElementaryResult* match = nullptr;
        for (const ElementaryResult& elem : elems) {
            if (elem.attribute_id != node.id) continue;
            if (match)
                throw BindingError("attribute '" + node.id +
                                   "' matches more than one elementary result");
            match = &elem;
        }
        if (!match)
            throw BindingError("attribute '" + node.id + "' has no elementary result");
        if (!node.indicator.empty() && !match->indicator_name.empty() &&
            node.indicator != match->indicator_name)
            throw BindingError("attribute '" + node.id + "' expects indicator '" + node.indicator +
                               "' but the elementary result came from '" + match->indicator_name +
                               "'");
        result.value = match->score;
    } else {
        std::vector<double> values;
        std::vector<double> weights;
        values.reserve(node.children.size());
        weights.reserve(node.children.size());
        for (const RequirementsNode& child : node.children) {
            result.children.push_back(evaluate_node(child, elems, ops));
            values.push_back(result.children.back().value);
            weights.push_back(child.weight);
        }
        double r = 0;
        if (is_limit(*node.op))
            r = *node.op == LspOperator::C ? -kInf : kInf;
        else
            r = ops.exponent_for(*node.op, static_cast<int>(node.children.size()));
        result.value = weighted_power_mean(values, weights, r);
        // classify() rejects values even a few ulps outside [0,100]
        result.value = std::clamp(result.value, 0.0, 100.0);
    }

    result.level = classify(result.value);
    return result;
}

} // namespace

EvaluationResult evaluate_tree(const RequirementsNode& tree,
                               const std::vector<ElementaryResult>& elems,
                               const OperatorTable& ops) {
    return evaluate_node(tree, elems, ops);
}

} // namespace ontoqual
