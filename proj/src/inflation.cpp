#include "skellam/inflation.hpp"

#include <cmath>
#include <stdexcept>

#include "skellam/errors.hpp"

namespace skellam {

void InflationModel::validate() const {
    switch (kind) {
        case InflationKind::None:
            return;
        case InflationKind::TypeOne:
            if (!(factor > 0.0 && factor < 1.0))
                throw std::domain_error("TypeOne inflation requires 0 < p < 1");
            return;
        case InflationKind::TypeTwo:
            if (!(std::isfinite(factor) && factor >= 0.0))
                throw std::domain_error("TypeTwo inflation requires theta >= 0");
            return;
    }
}

double type_two_gamma(double theta, double p0) {
    return theta * p0 / (1.0 - p0);
}

ScoreDiffDist inflate(const ScoreDiffDist& dist, const InflationModel& model) {
    dist.validate();
    model.validate();
    if (model.kind == InflationKind::None) return dist;

    ScoreDiffDist out = dist;
    if (!out.contains(0)) {
        // Extend the support to hold the inflated draw cell.
        if (out.k_min > 0) {
            out.probs.insert(out.probs.begin(), static_cast<std::size_t>(out.k_min), 0.0);
            out.k_min = 0;
        } else {
            out.probs.resize(static_cast<std::size_t>(-out.k_min) + 1, 0.0);
        }
    }
    const std::size_t zero_idx = static_cast<std::size_t>(-out.k_min);
    const double p0 = out.probs[zero_idx];

    if (model.kind == InflationKind::TypeOne) {
        const double p = model.factor;
        for (double& v : out.probs) v *= 1.0 - p;
        out.probs[zero_idx] += p;
        return out;
    }

    if (p0 == 1.0)
        throw degenerate_error("TypeTwo inflation undefined for a pure draw distribution");
    const double gamma = type_two_gamma(model.factor, p0);
    if (!(gamma >= 0.0 && gamma < 1.0))
        throw std::domain_error("TypeTwo deflation must stay below 1");
    for (double& v : out.probs) v *= 1.0 - gamma;
    out.probs[zero_idx] = (1.0 + model.factor) * p0;
    return out;
}

} // namespace skellam
