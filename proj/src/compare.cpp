#include "ontoqual/compare.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace ontoqual {

namespace {

constexpr double kWinnerTolerance = 1e-9;

void walk(const EvaluationResult& node, const std::function<void(const EvaluationResult&)>& fn) {
    fn(node);
    for (const EvaluationResult& child : node.children) walk(child, fn);
}

} // namespace

EntityEvaluation evaluate_entity(const RequirementsModel& model, const OntologyInventory& inv) {
    if (ValidationReport report = validate(inv); !report.empty())
        throw ValidationError(inv.entity_name, std::move(report));

    EntityEvaluation ev;
    ev.entity_name = inv.entity_name;
    ev.version = inv.version;
    ev.measures = measure(derive_basis(inv));
    ev.elementary = evaluate_attributes(ev.measures);
    ev.tree = evaluate_tree(model.root, ev.elementary, model.operators);
    return ev;
}

ComparisonReport compare(const RequirementsModel& model,
                         const std::vector<OntologyInventory>& inventories) {
    if (inventories.size() < 2)
        throw ContractError("comparison needs at least 2 inventories");

    ComparisonReport report;
    report.model_id = model.root.name;
    for (const OntologyInventory& inv : inventories) {
        try {
            report.entities.push_back(evaluate_entity(model, inv));
        } catch (const ValidationError&) {
            throw;
        } catch (const Error& e) {
            throw Error("entity '" + inv.entity_name + "': " + e.what());
        }
    }

    report.ranking.reserve(report.entities.size());
    for (const EntityEvaluation& ev : report.entities) report.ranking.push_back(ev.entity_name);
    std::sort(report.ranking.begin(), report.ranking.end(),
              [&](const std::string& a, const std::string& b) {
                  const auto global = [&](const std::string& name) {
                      for (const EntityEvaluation& ev : report.entities)
                          if (ev.entity_name == name) return ev.tree.value;
                      return 0.0;
                  };
                  const double ga = global(a);
                  const double gb = global(b);
                  if (ga != gb) return ga > gb;
                  return a < b;
              });

    walk(report.entities.front().tree, [&](const EvaluationResult& node) {
        report.per_node_winner[node.node_id] = {};
    });
    for (auto& [node_id, winners] : report.per_node_winner) {
        double best = -1;
        for (const EntityEvaluation& ev : report.entities) {
            walk(ev.tree, [&](const EvaluationResult& node) {
                if (node.node_id == node_id) best = std::max(best, node.value);
            });
        }
        for (const EntityEvaluation& ev : report.entities) {
            walk(ev.tree, [&](const EvaluationResult& node) {
                if (node.node_id == node_id && node.value >= best - kWinnerTolerance)
                    winners.push_back(ev.entity_name);
            });
        }
        std::sort(winners.begin(), winners.end());
    }
    return report;
}

std::vector<Weakness> weaknesses(const EvaluationResult& result) {
    std::vector<Weakness> out;
    walk(result, [&](const EvaluationResult& node) {
        if (node.children.empty() && node.level != AcceptabilityLevel::Satisfactory)
            out.push_back({node.node_id, node.value, node.level});
    });
    std::sort(out.begin(), out.end(), [](const Weakness& a, const Weakness& b) {
        if (a.score != b.score) return a.score < b.score;
        return a.attribute_id < b.attribute_id;
    });
    return out;
}

ImprovementReport reevaluate(const RequirementsModel& model, const OntologyInventory& before,
                             const OntologyInventory& after) {
    if (before.entity_name != after.entity_name)
        throw PairingError("cannot pair '" + before.entity_name + "' with '" + after.entity_name +
                           "': re-evaluation needs two versions of the same entity");

    ImprovementReport report;
    report.entity_name = before.entity_name;
    report.before_version = before.version;
    report.after_version = after.version;
    report.before = evaluate_entity(model, before);
    report.after = evaluate_entity(model, after);

    // identical model => identical topology; walk both trees in parallel
    std::function<void(const EvaluationResult&, const EvaluationResult&)> diff =
        [&](const EvaluationResult& b, const EvaluationResult& a) {
            report.deltas[b.node_id] = a.value - b.value;
            if (b.children.empty() && static_cast<int>(a.level) > static_cast<int>(b.level))
                report.addressed_attributes.push_back(b.node_id);
            for (size_t i = 0; i < b.children.size(); ++i) diff(b.children[i], a.children[i]);
        };
    diff(report.before.tree, report.after.tree);
    return report;
}

} // namespace ontoqual
