#pragma once

#include "bfi/model.hpp"

namespace bfi {

/// Choquet integral (Schmeidler form, valid on any real scale).
double choquet(const ScoreVector& x, const Capacity& mu);

/// Shilkret integral: max over i of x_i * mu({j: x_j >= x_i}).
/// Accepts mixed-sign input; negative components never dominate.
double shilkret(const ScoreVector& x, const Capacity& mu);

/// Negative Shilkret integral, defined for nonpositive vectors only.
double shilkret_negative(const ScoreVector& x, const Capacity& mu);

/// Sipos-style split: shilkret on the positive part plus the negative
/// Shilkret integral on the negative part.
double shilkret_symmetric(const ScoreVector& x, const Capacity& mu);

/// Sugeno integral of x with respect to a measure on the same scale.
double sugeno(const ScoreVector& x, const Measure& nu);

/// Subset-enumeration form of the Sugeno integral; the empty-set term is
/// the scale bottom.  Intended for small n.
double sugeno_subset_oracle(const ScoreVector& x, const Measure& nu);

/// Symmetric Sugeno integral on [-1,1] with respect to a capacity.
double sugeno_symmetric(const ScoreVector& x, const Capacity& mu);

} // namespace bfi
