#include <doctest.h>

#include <cmath>

#include "ontoqual/indicators.hpp"

#include "test_helpers.hpp"

using namespace ontoqual;
using doctest::Approx;

namespace {

MeasureSet spo_measures() {
    MeasureSet m;
    m.basis = {36, 29, 0, 0, 22, 22, 27, 11, 53, 36, 0, 6, 5};
    m.pct_dt = 2900.0 / 36.0;
    m.pct_dp = 0;
    m.pct_sa = 100;
    m.pct_dntr = 1100.0 / 27.0;
    m.pct_bntr = 2700.0 / 53.0;
    m.pct_stfo = 100;
    m.pct_sntrfo = 600.0 / 27.0;
    m.uisg = 5;
    return m;
}

MeasureSet pco_measures() {
    MeasureSet m;
    m.basis = {30, 30, 30, 30, 0, 0, 18, 18, 44, 30, 0, 18, 3};
    m.pct_dt = 100;
    m.pct_dp = 100;
    m.pct_sa = 0;
    m.pct_dntr = 100;
    m.pct_bntr = 1800.0 / 44.0;
    m.pct_stfo = 100;
    m.pct_sntrfo = 100;
    m.uisg = 3;
    return m;
}

} // namespace

TEST_CASE("classify: levels and boundaries") {
    CHECK(classify(0) == AcceptabilityLevel::Unsatisfactory);
    CHECK(classify(60) == AcceptabilityLevel::Unsatisfactory);
    CHECK(classify(60.0001) == AcceptabilityLevel::Marginal);
    CHECK(classify(85) == AcceptabilityLevel::Marginal);
    CHECK(classify(85.0001) == AcceptabilityLevel::Satisfactory);
    CHECK(classify(98.58) == AcceptabilityLevel::Satisfactory);
    CHECK(classify(100) == AcceptabilityLevel::Satisfactory);
    CHECK_THROWS_AS(classify(-0.01), DomainError);
    CHECK_THROWS_AS(classify(100.01), DomainError);
}

TEST_CASE("classify: exactly one level matches every score") {
    auto contains = [](AcceptabilityLevel level, double x) {
        switch (level) {
        case AcceptabilityLevel::Unsatisfactory: return x >= 0 && x <= 60;
        case AcceptabilityLevel::Marginal: return x > 60 && x <= 85;
        case AcceptabilityLevel::Satisfactory: return x > 85 && x <= 100;
        }
        return false;
    };
    for (int i = 0; i <= 1000; ++i) {
        const double x = i / 10.0;
        int matches = 0;
        for (AcceptabilityLevel level :
             {AcceptabilityLevel::Unsatisfactory, AcceptabilityLevel::Marginal,
              AcceptabilityLevel::Satisfactory}) {
            if (contains(level, x)) ++matches;
        }
        CHECK(matches == 1);
        CHECK(contains(classify(x), x));
    }
}

TEST_CASE("identity indicator") {
    const IndicatorInfo* info = find_indicator("PL_DTA");
    REQUIRE(info != nullptr);
    CHECK(eval_elementary(*info->spec, 80.56) == 80.56);
    CHECK(eval_elementary(*info->spec, 0) == 0);
    CHECK(eval_elementary(*info->spec, 100) == 100);
    CHECK_THROWS_AS(eval_elementary(*info->spec, -0.5), DomainError);
    CHECK_THROWS_AS(eval_elementary(*info->spec, 100.5), DomainError);
}

TEST_CASE("tent: published anchors and breakpoints") {
    CHECK(tent_bntr(2700.0 / 53.0) == near(98.58, 0.01));
    CHECK(tent_bntr(1800.0 / 44.0) == near(86.36, 0.01));
    CHECK(tent_bntr(50) == 100.0);
    CHECK(tent_bntr(25) == near(72.50, 1e-9));
    CHECK(tent_bntr(0) == 0.0);
    CHECK(tent_bntr(100) == near(0.0, 1e-9));
    CHECK(tent_bntr(10) == near(60.0, 1e-9));
    CHECK(tent_bntr(40) == near(85.0, 1e-9));
    CHECK(tent_bntr(60) == near(85.0, 1e-9));
    CHECK(tent_bntr(90) == near(60.0, 1e-9));
    CHECK_THROWS_AS(tent_bntr(-1), DomainError);
    CHECK_THROWS_AS(tent_bntr(101), DomainError);
}

TEST_CASE("tent: symmetric about 50 and continuous at breakpoints") {
    for (int i = 0; i <= 5000; ++i) {
        const double d = i / 100.0;
        CHECK(std::abs(tent_bntr(50 - d) - tent_bntr(50 + d)) < 1e-9);
    }
    const ElementaryFunctionSpec& spec = *find_indicator("PL_BNTRRA")->spec;
    REQUIRE(spec.pieces.size() == 6);
    for (size_t i = 0; i + 1 < spec.pieces.size(); ++i) {
        const double b = spec.pieces[i].domain.hi;
        const double left = spec.pieces[i].slope * b + spec.pieces[i].intercept;
        const double right = spec.pieces[i + 1].slope * b + spec.pieces[i + 1].intercept;
        CHECK(std::abs(left - right) < 1e-9);
    }
}

TEST_CASE("step indicators") {
    SUBCASE("term reuse") {
        CHECK(step_stfo(100) == 100.0);
        CHECK(step_stfo(99.999) == 85.0);
        CHECK(step_stfo(96) == 85.0);
        CHECK(step_stfo(95) == 85.0);
        CHECK(step_stfo(94.999) == 60.0);
        CHECK(step_stfo(70) == 60.0);
        CHECK(step_stfo(69.999) == 0.0);
        CHECK(step_stfo(0) == 0.0);
        CHECK_THROWS_AS(step_stfo(-1), DomainError);
    }
    SUBCASE("non-taxonomic relationship reuse") {
        CHECK(step_sntrfo(600.0 / 27.0) == 20.0); // 22.22
        CHECK(step_sntrfo(100) == 100.0);
        CHECK(step_sntrfo(19.99) == 0.0);
        CHECK(step_sntrfo(20) == 20.0);
        CHECK(step_sntrfo(95) == 85.0);
        CHECK(step_sntrfo(70) == 60.0);
    }
    SUBCASE("glossary count") {
        CHECK(step_uisg(5) == 100.0);
        CHECK(step_uisg(1) == 75.0);
        CHECK(step_uisg(0) == 0.0);
        CHECK(step_uisg(2) == 100.0);
        CHECK(step_uisg(1000) == 100.0);
        CHECK_THROWS_AS(step_uisg(-1), DomainError);
    }
}

TEST_CASE("step functions are non-decreasing") {
    for (int i = 0; i < 2000; ++i) {
        const double x = i / 20.0;
        const double next = (i + 1) / 20.0;
        CHECK(step_stfo(next) >= step_stfo(x));
        CHECK(step_sntrfo(next) >= step_sntrfo(x));
    }
    for (int n = 0; n < 20; ++n) CHECK(step_uisg(n + 1) >= step_uisg(n));
}

TEST_CASE("canonical specs satisfy the structural invariants") {
    for (const IndicatorInfo& info : canonical_indicators()) {
        CAPTURE(info.name);
        CHECK_NOTHROW(check_spec(*info.spec));
    }
    CHECK(canonical_indicators().size() == 8);
    CHECK(find_indicator("PL_XXX") == nullptr);

    ElementaryFunctionSpec broken;
    broken.kind = ElementaryFunctionSpec::Kind::PiecewiseLinear;
    broken.domain = {0, 100, true, true};
    broken.pieces = {{{0, 50, true, false}, 1, 0}, {{50, 100, false, true}, 1, 10}};
    // x = 50 not covered by either piece
    CHECK_THROWS_AS(check_spec(broken), ContractError);
    broken.pieces[1].domain.lo_closed = true;
    // continuous? 50 vs 60 at the breakpoint
    CHECK_THROWS_AS(check_spec(broken), ContractError);
}

TEST_CASE("evaluate_attributes: fixture columns") {
    const std::vector<ElementaryResult> spo = evaluate_attributes(spo_measures());
    REQUIRE(spo.size() == 8);
    const double expected_spo[] = {2900.0 / 36.0, 0, 100, 1100.0 / 27.0, 98.58, 100, 20, 100};
    const char* ids[] = {"1.1.1", "1.1.2", "1.1.3", "1.1.4.1", "1.1.4.2", "1.2.1.1", "1.2.1.2",
                         "1.2.2"};
    for (size_t i = 0; i < 8; ++i) {
        CHECK(spo[i].attribute_id == ids[i]);
        CHECK(spo[i].score == near(expected_spo[i], 0.01));
    }
    CHECK(spo[0].indicator_name == "PL_DTA");
    CHECK(spo[4].indicator_name == "PL_BNTRRA");
    CHECK(spo[4].level == AcceptabilityLevel::Satisfactory);
    CHECK(spo[6].level == AcceptabilityLevel::Unsatisfactory);

    const std::vector<ElementaryResult> pco = evaluate_attributes(pco_measures());
    const double expected_pco[] = {100, 100, 0, 100, 86.36, 100, 100, 100};
    for (size_t i = 0; i < 8; ++i) CHECK(pco[i].score == near(expected_pco[i], 0.01));

    MeasureSet zero;
    zero.basis = {1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0};
    for (const ElementaryResult& r : evaluate_attributes(zero)) {
        CHECK(r.score == 0.0);
        CHECK(r.level == AcceptabilityLevel::Unsatisfactory);
    }
}

TEST_CASE("property: every elementary score stays in [0,100]") {
    for (const IndicatorInfo& info : canonical_indicators()) {
        for (int i = 0; i <= 400; ++i) {
            const double x = i / 4.0;
            const double score = eval_elementary(*info.spec, x);
            CAPTURE(info.name);
            CAPTURE(x);
            CHECK(score >= 0.0);
            CHECK(score <= 100.0);
        }
    }
}
