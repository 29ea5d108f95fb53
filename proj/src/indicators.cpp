#include "ontoqual/indicators.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace ontoqual {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string describe(double x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

ElementaryFunctionSpec make_identity() {
    ElementaryFunctionSpec spec;
    spec.kind = ElementaryFunctionSpec::Kind::Identity;
    spec.domain = {0, 100, true, true};
    return spec;
}

// Tent over the non-taxonomic share x, peaking at the 50/50 balance. Slopes
// are fixed by the anchor values f(0)=0, f(10)=60, f(40)=85, f(50)=100 and
// the mirror-symmetric descent.
ElementaryFunctionSpec make_tent_bntr() {
    ElementaryFunctionSpec spec;
    spec.kind = ElementaryFunctionSpec::Kind::PiecewiseLinear;
    spec.domain = {0, 100, true, true};
    spec.pieces = {
        {{0, 10, true, false}, 6.0, 0.0},
        {{10, 40, true, false}, 5.0 / 6.0, 155.0 / 3.0},
        {{40, 50, true, true}, 1.5, 25.0},
        {{50, 60, false, true}, -1.5, 175.0},
        {{60, 90, false, true}, -5.0 / 6.0, 135.0},
        {{90, 100, false, true}, -6.0, 600.0},
    };
    return spec;
}

ElementaryFunctionSpec make_step_stfo() {
    ElementaryFunctionSpec spec;
    spec.kind = ElementaryFunctionSpec::Kind::Step;
    spec.domain = {0, 100, true, true};
    spec.steps = {
        {{0, 70, true, false}, 0},
        {{70, 95, true, false}, 60},
        {{95, 100, true, false}, 85},
        {{100, 100, true, true}, 100},
    };
    return spec;
}

ElementaryFunctionSpec make_step_sntrfo() {
    ElementaryFunctionSpec spec;
    spec.kind = ElementaryFunctionSpec::Kind::Step;
    spec.domain = {0, 100, true, true};
    spec.steps = {
        {{0, 20, true, false}, 0},
        {{20, 70, true, false}, 20},
        {{70, 95, true, false}, 60},
        {{95, 100, true, false}, 85},
        {{100, 100, true, true}, 100},
    };
    return spec;
}

ElementaryFunctionSpec make_step_uisg() {
    ElementaryFunctionSpec spec;
    spec.kind = ElementaryFunctionSpec::Kind::Step;
    spec.domain = {0, kInf, true, false};
    spec.steps = {
        {{0, 1, true, false}, 0},
        {{1, 2, true, false}, 75},
        {{2, kInf, true, false}, 100},
    };
    return spec;
}

const ElementaryFunctionSpec kIdentity = make_identity();
const ElementaryFunctionSpec kTentBntr = make_tent_bntr();
const ElementaryFunctionSpec kStepStfo = make_step_stfo();
const ElementaryFunctionSpec kStepSntrfo = make_step_sntrfo();
const ElementaryFunctionSpec kStepUisg = make_step_uisg();

const IndicatorInfo kIndicators[] = {
    {"PL_DTA", "1.1.1", "%DT", &kIdentity, false},
    {"PL_DPA", "1.1.2", "%DP", &kIdentity, false},
    {"PL_FSAA", "1.1.3", "%SA", &kIdentity, false},
    {"PL_DNTRA", "1.1.4.1", "%DNTR", &kIdentity, false},
    {"PL_BNTRRA", "1.1.4.2", "%BNTR", &kTentBntr, false},
    {"P_LRTFO", "1.2.1.1", "%STFO", &kStepStfo, false},
    {"P_LRNRFO", "1.2.1.2", "%SNTRFO", &kStepSntrfo, false},
    {"P_LUISG", "1.2.2", "#UISG", &kStepUisg, true},
};

} // namespace

std::string_view to_string(AcceptabilityLevel level) {
    switch (level) {
    case AcceptabilityLevel::Unsatisfactory: return "Unsatisfactory";
    case AcceptabilityLevel::Marginal: return "Marginal";
    case AcceptabilityLevel::Satisfactory: return "Satisfactory";
    }
    return "?";
}

AcceptabilityLevel classify(double score) {
    if (!(score >= 0.0 && score <= 100.0))
        throw DomainError("score " + describe(score) + " outside [0,100]");
    if (score <= 60.0) return AcceptabilityLevel::Unsatisfactory;
    if (score <= 85.0) return AcceptabilityLevel::Marginal;
    return AcceptabilityLevel::Satisfactory;
}

bool Interval::contains(double x) const {
    const bool above = lo_closed ? x >= lo : x > lo;
    const bool below = hi_closed ? x <= hi : x < hi;
    return above && below;
}

double eval_elementary(const ElementaryFunctionSpec& spec, double x) {
    if (std::isnan(x) || !spec.domain.contains(x))
        throw DomainError("input " + describe(x) + " outside the elementary function domain [" +
                          describe(spec.domain.lo) + "," + describe(spec.domain.hi) + "]");
    switch (spec.kind) {
    case ElementaryFunctionSpec::Kind::Identity:
        return x;
    case ElementaryFunctionSpec::Kind::PiecewiseLinear:
        for (const LinearPiece& piece : spec.pieces)
            if (piece.domain.contains(x)) return piece.slope * x + piece.intercept;
        break;
    case ElementaryFunctionSpec::Kind::Step:
        for (const StepPiece& step : spec.steps)
            if (step.domain.contains(x)) return step.output;
        break;
    }
    throw ContractError("elementary function pieces do not cover input " + describe(x));
}

void check_spec(const ElementaryFunctionSpec& spec) {
    if (spec.kind == ElementaryFunctionSpec::Kind::Identity) return;

    const size_t n = spec.kind == ElementaryFunctionSpec::Kind::PiecewiseLinear
                         ? spec.pieces.size()
                         : spec.steps.size();
    if (n == 0) throw ContractError("elementary function has no pieces");

    auto domain_of = [&](size_t i) {
        return spec.kind == ElementaryFunctionSpec::Kind::PiecewiseLinear ? spec.pieces[i].domain
                                                                          : spec.steps[i].domain;
    };
    auto value_at = [&](size_t i, double x) {
        return spec.kind == ElementaryFunctionSpec::Kind::PiecewiseLinear
                   ? spec.pieces[i].slope * x + spec.pieces[i].intercept
                   : spec.steps[i].output;
    };

    const Interval first = domain_of(0);
    if (first.lo != spec.domain.lo || first.lo_closed != spec.domain.lo_closed)
        throw ContractError("pieces do not start at the domain lower bound");
    for (size_t i = 0; i + 1 < n; ++i) {
        const Interval cur = domain_of(i);
        const Interval next = domain_of(i + 1);
        if (cur.hi != next.lo)
            throw ContractError("gap between pieces at " + describe(cur.hi));
        if (cur.hi_closed == next.lo_closed)
            throw ContractError(cur.hi_closed ? "pieces overlap at " + describe(cur.hi)
                                              : "no piece covers " + describe(cur.hi));
        if (spec.kind == ElementaryFunctionSpec::Kind::PiecewiseLinear) {
            const double left = value_at(i, cur.hi);
            const double right = value_at(i + 1, cur.hi);
            if (std::abs(left - right) > 1e-9)
                throw ContractError("discontinuity at breakpoint " + describe(cur.hi) + ": " +
                                    describe(left) + " vs " + describe(right));
        }
    }
    const Interval last = domain_of(n - 1);
    if (last.hi != spec.domain.hi || last.hi_closed != spec.domain.hi_closed)
        throw ContractError("pieces do not end at the domain upper bound");
}

double tent_bntr(double pct) { return eval_elementary(kTentBntr, pct); }

double step_stfo(double pct) { return eval_elementary(kStepStfo, pct); }

double step_sntrfo(double pct) { return eval_elementary(kStepSntrfo, pct); }

double step_uisg(int count) {
    if (count < 0) throw DomainError("glossary count must be non-negative");
    return eval_elementary(kStepUisg, static_cast<double>(count));
}

std::span<const IndicatorInfo> canonical_indicators() { return kIndicators; }

const IndicatorInfo* find_indicator(std::string_view name) {
    for (const IndicatorInfo& info : kIndicators)
        if (info.name == name) return &info;
    return nullptr;
}

std::vector<ElementaryResult> evaluate_attributes(const MeasureSet& m) {
    const double inputs[] = {m.pct_dt,   m.pct_dp,   m.pct_sa,     m.pct_dntr,
                             m.pct_bntr, m.pct_stfo, m.pct_sntrfo, static_cast<double>(m.uisg)};
    std::vector<ElementaryResult> results;
    results.reserve(std::size(kIndicators));
    for (size_t i = 0; i < std::size(kIndicators); ++i) {
        const IndicatorInfo& info = kIndicators[i];
        ElementaryResult r;
        r.attribute_id = info.attribute_id;
        r.indicator_name = info.name;
        r.input = inputs[i];
        r.score = eval_elementary(*info.spec, inputs[i]);
        r.level = classify(r.score);
        results.push_back(std::move(r));
    }
    return results;
}

} // namespace ontoqual
