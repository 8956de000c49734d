#pragma once

#include <vector>

#include "bfi/model.hpp"

namespace bfi::testing {

// The three-criterion capacity used across the unipolar tests.
inline Capacity example_capacity3() {
    return Capacity::from_table(3, {0.0, 0.2, 0.3, 0.5, 0.4, 0.7, 0.8, 1.0});
}

// The two-criterion bi-capacity used across the bipolar tests.
inline BiCapacity example_bicapacity2() {
    return BiCapacity::validate(
        2, {
               {{0, 0}, 0.0},
               {{single(1), 0}, 0.5},
               {{single(2), 0}, 0.4},
               {{full_mask(2), 0}, 1.0},
               {{0, single(1)}, -0.6},
               {{0, single(2)}, -0.3},
               {{0, full_mask(2)}, -1.0},
               {{single(1), single(2)}, 0.2},
               {{single(2), single(1)}, -0.2},
           });
}

inline ScoreVector vec(std::vector<double> s, Interval scale = Interval::reals()) {
    return {std::move(s), scale};
}

inline ScoreVector bvec(std::vector<double> s) {
    return {std::move(s), Interval::bipolar()};
}

} // namespace bfi::testing
