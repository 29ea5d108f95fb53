#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ontoqual/metrics.hpp"

namespace ontoqual {

// Traffic-light classification shared by every indicator:
// Unsatisfactory [0,60], Marginal (60,85], Satisfactory (85,100].
enum class AcceptabilityLevel { Unsatisfactory, Marginal, Satisfactory };

std::string_view to_string(AcceptabilityLevel level);

// Returns the unique level containing score; 60 classifies Unsatisfactory
// and 85 Marginal. Throws DomainError outside [0,100].
AcceptabilityLevel classify(double score);

// Half-open/closed interval with explicit endpoint membership.
struct Interval {
    double lo = 0;
    double hi = 0;
    bool lo_closed = true;
    bool hi_closed = true;

    bool contains(double x) const;
};

struct LinearPiece {
    Interval domain;
    double slope = 0;
    double intercept = 0;
};

struct StepPiece {
    Interval domain;
    double output = 0;
};

// An elementary function: the identity, a piecewise-linear map, or a step
// table. Pieces must cover the domain without overlap, and piecewise-linear
// functions must be continuous at interior breakpoints (see check_spec).
struct ElementaryFunctionSpec {
    enum class Kind { Identity, PiecewiseLinear, Step };

    Kind kind = Kind::Identity;
    Interval domain{0, 100, true, true};
    std::vector<LinearPiece> pieces; // PiecewiseLinear only
    std::vector<StepPiece> steps;    // Step only
};

// Evaluates the spec at x. Throws DomainError when x is outside the domain.
double eval_elementary(const ElementaryFunctionSpec& spec, double x);

// Verifies the structural invariants of a spec: full domain coverage, no
// overlap, and 1e-9 continuity at interior breakpoints for piecewise-linear
// functions. Throws ContractError on the first violation found.
void check_spec(const ElementaryFunctionSpec& spec);

// Six-piece tent scoring the non-taxonomic/taxonomic balance: 0 at the
// extremes, 100 at the 50/50 point, with f(10)=f(90)=60 and f(40)=f(60)=85.
double tent_bntr(double pct);

// Step score for term reuse: 100 only at full reuse, 85 from 95%, 60 from
// 70%, else 0.
double step_stfo(double pct);

// Step score for non-taxonomic relationship reuse; like step_stfo but with
// an extra 20-point step from 20%.
double step_sntrfo(double pct);

// Glossary-count score: 0 for none, 75 for one, 100 for two or more.
double step_uisg(int count);

struct ElementaryResult {
    std::string attribute_id;   // e.g. "1.1.3"
    std::string indicator_name; // e.g. "PL_FSAA"
    double input = 0;
    double score = 0;
    AcceptabilityLevel level = AcceptabilityLevel::Unsatisfactory;

    bool operator==(const ElementaryResult&) const = default;
};

struct IndicatorInfo {
    std::string_view name;         // canonical indicator name
    std::string_view attribute_id; // attribute quantified by its metric
    std::string_view metric;       // metric fed into the function
    const ElementaryFunctionSpec* spec;
    bool count_valued; // input is an integer count, not a percentage
};

// The eight canonical indicators in attribute order.
std::span<const IndicatorInfo> canonical_indicators();

// Looks an indicator up by canonical name; nullptr when unknown.
const IndicatorInfo* find_indicator(std::string_view name);

// Scores all eight attributes from a measure set.
std::vector<ElementaryResult> evaluate_attributes(const MeasureSet& m);

} // namespace ontoqual
