#pragma once

#include "ontoqual/inventory.hpp"

namespace ontoqual {

// The seven indirect percentages plus the glossary count, kept at full
// precision; rounding happens only at report rendering.
struct MeasureSet {
    MeasurementBasis basis;
    double pct_dt = 0;     // defined terms
    double pct_dp = 0;     // defined properties
    double pct_sa = 0;     // formally specified axioms
    double pct_dntr = 0;   // defined non-taxonomic relationships
    double pct_bntr = 0;   // non-taxonomic share of all relationships
    double pct_stfo = 0;   // terms specialized from a foundational ontology
    double pct_sntrfo = 0; // non-taxonomic relationships specialized from a FO
    int uisg = 0;

    bool operator==(const MeasureSet&) const = default;
};

// (numerator/denominator)*100, defined as 0 when the denominator is 0.
// Throws ContractError when numerator > denominator.
double guarded_ratio(int numerator, int denominator);

// ((stdfo + stifo)/tt)*100. This formula has no zero guard; tt = 0 throws
// MeasureError because an empty ontology is invalid upstream.
double pct_specialized_terms(int stdfo, int stifo, int tt);

// Computes all indirect metrics from a basis. Throws MeasureError when
// tt = 0 (empty ontology) or tr = 0 (no relationships).
MeasureSet measure(const MeasurementBasis& basis);

} // namespace ontoqual
