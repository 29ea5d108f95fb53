#include "ontoqual/metrics.hpp"

#include <string>

namespace ontoqual {

double guarded_ratio(int numerator, int denominator) {
    if (numerator > denominator)
        throw ContractError("guarded_ratio: numerator " + std::to_string(numerator) +
                            " exceeds denominator " + std::to_string(denominator));
    if (denominator == 0) return 0.0;
    return static_cast<double>(numerator) / static_cast<double>(denominator) * 100.0;
}

double pct_specialized_terms(int stdfo, int stifo, int tt) {
    if (tt == 0) throw MeasureError("empty ontology: term-reuse percentage needs at least one term");
    if (stdfo + stifo > tt)
        throw ContractError("specialized terms " + std::to_string(stdfo + stifo) +
                            " exceed total terms " + std::to_string(tt));
    return static_cast<double>(stdfo + stifo) / static_cast<double>(tt) * 100.0;
}

MeasureSet measure(const MeasurementBasis& basis) {
    if (basis.tt == 0) throw MeasureError("empty ontology: nothing to measure");
    if (basis.tr == 0)
        throw MeasureError("no relationships: the relationship-balance percentage is undefined");

    MeasureSet m;
    m.basis = basis;
    m.pct_dt = guarded_ratio(basis.dt, basis.tt);
    m.pct_dp = guarded_ratio(basis.dp, basis.tp);
    m.pct_sa = guarded_ratio(basis.sa, basis.ta);
    m.pct_dntr = guarded_ratio(basis.dntr, basis.tntr);
    m.pct_bntr = guarded_ratio(basis.tntr, basis.tr);
    m.pct_stfo = pct_specialized_terms(basis.stdfo, basis.stifo, basis.tt);
    m.pct_sntrfo = guarded_ratio(basis.sntrfo, basis.tntr);
    m.uisg = basis.uisg;
    return m;
}

} // namespace ontoqual
