#pragma once

#include "bfi/bipolar_max.hpp"
#include "bfi/model.hpp"

namespace bfi {

/// Bipolar Choquet integral on [-1,1], computed by the sorted-levels sum.
double bipolar_choquet(const ScoreVector& x, const BiCapacity& mb);

/// Bipolar Choquet integral computed as the exact integral of the
/// piecewise-constant level function, with strict level-set inequalities
/// evaluated at interval midpoints.  Independent of bipolar_choquet.
double bipolar_choquet_oracle(const ScoreVector& x, const BiCapacity& mb);

/// Bipolar Shilkret integral; the variant selects the bipolar-maximum tie rule.
double bipolar_shilkret(const ScoreVector& x, const BiCapacity& mb,
                        Variant v = Variant::neutral);

/// Bipolar Sugeno integral; the variant selects the bipolar-maximum tie rule.
double bipolar_sugeno(const ScoreVector& x, const BiCapacity& mb,
                      Variant v = Variant::neutral);

enum class BipolarFamily { shilkret, sugeno };

struct LinkTriple {
    double neutral;
    double right;
    double left;
};

/// Evaluates all three variants and verifies the linking identity
/// neutral = bipolar_max{right, left}; a failure signals an implementation
/// bug, never valid data.
LinkTriple link_check(const ScoreVector& x, const BiCapacity& mb, BipolarFamily family);

} // namespace bfi
