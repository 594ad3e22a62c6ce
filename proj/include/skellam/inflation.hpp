#pragma once

#include "skellam/distribution.hpp"

namespace skellam {

enum class InflationKind { None, TypeOne, TypeTwo };

/// Draw-inflation variant applied on top of a base difference distribution.
/// TypeOne mixes a point mass at zero into the base with weight p in (0,1).
/// TypeTwo multiplies the zero cell by (1+theta), theta >= 0, and deflates all
/// other cells by the factor that restores total mass 1.
struct InflationModel {
    InflationKind kind = InflationKind::None;
    double factor = 0.0;

    /// Throws std::domain_error if the factor is outside the valid range for
    /// the kind (TypeTwo validity additionally depends on the base draw mass
    /// and is checked by inflate()).
    void validate() const;
};

/// TypeTwo deflation factor gamma = theta * p0 / (1 - p0) for base draw mass p0.
double type_two_gamma(double theta, double p0);

/// Applies the inflation model to a normalized distribution.
/// Throws degenerate_error when TypeTwo meets a base distribution whose draw
/// mass is 1, and std::domain_error when the implied deflation reaches 1.
ScoreDiffDist inflate(const ScoreDiffDist& dist, const InflationModel& model);

} // namespace skellam
