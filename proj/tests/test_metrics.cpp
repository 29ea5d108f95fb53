#include <doctest.h>

#include <cmath>
#include <random>

#include "ontoqual/metrics.hpp"

#include "test_helpers.hpp"

using namespace ontoqual;
using doctest::Approx;

namespace {

// 2-decimal rounding used by the published tables
double round2(double v) { return std::llround(v * 100.0) / 100.0; }

MeasurementBasis spo_basis() { return {36, 29, 0, 0, 22, 22, 27, 11, 53, 36, 0, 6, 5}; }
MeasurementBasis pco_basis() { return {30, 30, 30, 30, 0, 0, 18, 18, 44, 30, 0, 18, 3}; }

} // namespace

TEST_CASE("guarded_ratio") {
    CHECK(guarded_ratio(29, 36) == near(2900.0 / 36.0, 1e-12));
    CHECK(round2(guarded_ratio(29, 36)) == 80.56);
    CHECK(guarded_ratio(0, 0) == 0.0);
    CHECK(guarded_ratio(18, 18) == 100.0);
    CHECK(guarded_ratio(0, 7) == 0.0);
    CHECK_THROWS_AS(guarded_ratio(3, 2), ContractError);
}

TEST_CASE("pct_specialized_terms") {
    CHECK(pct_specialized_terms(36, 0, 36) == 100.0);
    CHECK(pct_specialized_terms(0, 0, 10) == 0.0);
    CHECK(pct_specialized_terms(3, 2, 10) == 50.0);
    CHECK_THROWS_AS(pct_specialized_terms(0, 0, 0), MeasureError);
    CHECK_THROWS_AS(pct_specialized_terms(7, 4, 10), ContractError);
}

TEST_CASE("measure: published fixtures") {
    const MeasureSet spo = measure(spo_basis());
    CHECK(round2(spo.pct_dt) == 80.56);
    CHECK(spo.pct_dp == 0.0);
    CHECK(spo.pct_sa == 100.0);
    CHECK(round2(spo.pct_dntr) == 40.74);
    CHECK(round2(spo.pct_bntr) == 50.94);
    CHECK(spo.pct_stfo == 100.0);
    CHECK(round2(spo.pct_sntrfo) == 22.22);
    CHECK(spo.uisg == 5);

    const MeasureSet pco = measure(pco_basis());
    CHECK(pco.pct_dt == 100.0);
    CHECK(pco.pct_dp == 100.0);
    CHECK(pco.pct_sa == 0.0);
    CHECK(pco.pct_dntr == 100.0);
    CHECK(round2(pco.pct_bntr) == 40.91);
    CHECK(pco.pct_stfo == 100.0);
    CHECK(pco.pct_sntrfo == 100.0);
    CHECK(pco.uisg == 3);
}

TEST_CASE("measure: saturation case") {
    // everything defined/specified/reused, non-taxonomic exactly half
    const MeasureSet m = measure({4, 4, 2, 2, 3, 3, 5, 5, 10, 3, 1, 5, 2});
    CHECK(m.pct_dt == 100.0);
    CHECK(m.pct_dp == 100.0);
    CHECK(m.pct_sa == 100.0);
    CHECK(m.pct_dntr == 100.0);
    CHECK(m.pct_stfo == 100.0);
    CHECK(m.pct_sntrfo == 100.0);
    CHECK(m.pct_bntr == 50.0);
}

TEST_CASE("measure: zero guards return exactly 0") {
    MeasurementBasis b{5, 3, 0, 0, 0, 0, 0, 0, 4, 0, 0, 0, 0};
    const MeasureSet m = measure(b);
    CHECK(m.pct_dp == 0.0);
    CHECK(m.pct_sa == 0.0);
    CHECK(m.pct_dntr == 0.0);
    CHECK(m.pct_sntrfo == 0.0);
}

TEST_CASE("measure: empty bases are rejected") {
    CHECK_THROWS_AS(measure(MeasurementBasis{}), MeasureError);
    // one term but no relationships
    CHECK_THROWS_AS(measure(MeasurementBasis{1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}),
                    MeasureError);
}

TEST_CASE("property: ratios are exact and scale invariant") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> denom_dist(1, 500);
    std::uniform_int_distribution<int> scale_dist(1, 9);
    for (int i = 0; i < 500; ++i) {
        const int den = denom_dist(rng);
        const int num = std::uniform_int_distribution<int>(0, den)(rng);
        const double pct = guarded_ratio(num, den);
        CHECK(pct >= 0.0);
        CHECK(pct <= 100.0);
        // rational identity: pct * den == 100 * num up to rounding noise
        CHECK(pct * den == near(100.0 * num, 1e-8));
        const int k = scale_dist(rng);
        CHECK(guarded_ratio(num * k, den * k) == near(pct, 1e-12));
    }
}
