#pragma once

#include <map>
#include <string>
#include <vector>

#include "ontoqual/lsp.hpp"

namespace ontoqual {

// Everything one entity produces on its way through the pipeline
// measure -> evaluate_attributes -> evaluate_tree.
struct EntityEvaluation {
    std::string entity_name;
    std::string version;
    MeasureSet measures;
    std::vector<ElementaryResult> elementary;
    EvaluationResult tree;
};

// Runs the full pipeline for one inventory. Throws ValidationError when the
// inventory is invalid, plus whatever the pipeline stages throw.
EntityEvaluation evaluate_entity(const RequirementsModel& model,
                                 const OntologyInventory& inv);

struct ComparisonReport {
    std::string model_id;
    std::vector<EntityEvaluation> entities; // input order
    std::vector<std::string> ranking;       // by global value, descending
    // node id -> entities within 1e-9 of the node maximum
    std::map<std::string, std::vector<std::string>> per_node_winner;
};

// Evaluates >= 2 inventories against one model. Ranking ties break by
// ascending entity name. Errors are tagged with the failing entity's name.
ComparisonReport compare(const RequirementsModel& model,
                         const std::vector<OntologyInventory>& inventories);

struct Weakness {
    std::string attribute_id;
    double score = 0;
    AcceptabilityLevel level = AcceptabilityLevel::Unsatisfactory;
};

// Attribute leaves that are not Satisfactory, ascending by score (which puts
// every Unsatisfactory leaf before the Marginal ones).
std::vector<Weakness> weaknesses(const EvaluationResult& result);

struct ImprovementReport {
    std::string entity_name;
    std::string before_version;
    std::string after_version;
    EntityEvaluation before;
    EntityEvaluation after;
    std::map<std::string, double> deltas;         // node id -> after - before
    std::vector<std::string> addressed_attributes; // leaves whose level rose
};

// Re-evaluates an improved entity against the identical model. Throws
// PairingError when the inventories name different entities.
ImprovementReport reevaluate(const RequirementsModel& model,
                             const OntologyInventory& before,
                             const OntologyInventory& after);

} // namespace ontoqual
