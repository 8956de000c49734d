#include "bfi/integrals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace bfi {

namespace {

void check_dims(const ScoreVector& x, int n) {
    if (x.size() != n)
        fail(errc::dimension_mismatch,
             "vector has " + std::to_string(x.size()) + " components, carrier expects " +
                 std::to_string(n));
}

// Stable tie rule: sort by (score, criterion index).  Any valid sort
// permutation yields the same Choquet value since tied increments vanish.
std::vector<int> sort_permutation(const ScoreVector& x) {
    std::vector<int> order(static_cast<std::size_t>(x.size()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return x[a] < x[b]; });
    return order;
}

Mask at_least(const ScoreVector& x, double level) {
    Mask m = 0;
    for (int i = 1; i <= x.size(); ++i)
        if (x[i - 1] >= level) m |= single(i);
    return m;
}

Mask at_most(const ScoreVector& x, double level) {
    Mask m = 0;
    for (int i = 1; i <= x.size(); ++i)
        if (x[i - 1] <= level) m |= single(i);
    return m;
}

ScoreVector positive_part(const ScoreVector& x) {
    std::vector<double> s(x.scores);
    for (double& v : s) v = std::max(v, 0.0);
    return {std::move(s), Interval::reals()};
}

ScoreVector negative_part(const ScoreVector& x) {
    std::vector<double> s(x.scores);
    for (double& v : s) v = std::min(v, 0.0);
    return {std::move(s), Interval::reals()};
}

} // namespace

double choquet(const ScoreVector& x, const Capacity& mu) {
    check_dims(x, mu.n());
    auto order = sort_permutation(x);
    double acc = x[order[0]];
    for (std::size_t i = 1; i < order.size(); ++i) {
        double prev = x[order[i - 1]];
        double cur = x[order[i]];
        if (cur == prev) continue;
        acc += (cur - prev) * mu.at(at_least(x, cur));
    }
    return acc;
}

double shilkret(const ScoreVector& x, const Capacity& mu) {
    check_dims(x, mu.n());
    double best = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < x.size(); ++i)
        best = std::max(best, x[i] * mu.at(at_least(x, x[i])));
    return best;
}

double shilkret_negative(const ScoreVector& x, const Capacity& mu) {
    check_dims(x, mu.n());
    for (int i = 0; i < x.size(); ++i)
        if (x[i] > 0.0)
            fail(errc::positive_component,
                 "negative Shilkret integral requires nonpositive components");
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < x.size(); ++i)
        best = std::min(best, x[i] * mu.at(at_most(x, x[i])));
    return best;
}

double shilkret_symmetric(const ScoreVector& x, const Capacity& mu) {
    check_dims(x, mu.n());
    return shilkret(positive_part(x), mu) + shilkret_negative(negative_part(x), mu);
}

double sugeno(const ScoreVector& x, const Measure& nu) {
    check_dims(x, nu.n());
    for (int i = 0; i < x.size(); ++i)
        if (!nu.scale().contains(x[i]))
            fail(errc::scale_mismatch,
                 "score vector and measure must share one scale");
    double best = nu.scale().lower;
    for (int i = 0; i < x.size(); ++i)
        best = std::max(best, std::min(x[i], nu.at(at_least(x, x[i]))));
    return best;
}

double sugeno_subset_oracle(const ScoreVector& x, const Measure& nu) {
    check_dims(x, nu.n());
    std::size_t size = std::size_t{1} << nu.n();
    double best = nu.at(0); // empty-set term: min over the empty set is the scale top
    for (std::size_t m = 1; m < size; ++m) {
        double inner = nu.at(static_cast<Mask>(m));
        for (int i = 1; i <= nu.n(); ++i)
            if (m & single(i)) inner = std::min(inner, x[i - 1]);
        best = std::max(best, inner);
    }
    return best;
}

double sugeno_symmetric(const ScoreVector& x, const Capacity& mu) {
    check_dims(x, mu.n());
    for (int i = 0; i < x.size(); ++i)
        if (x[i] < -1.0 || x[i] > 1.0)
            fail(errc::scale_mismatch, "symmetric Sugeno integral requires scores in [-1,1]");
    Measure nu = Measure::from_capacity(mu);
    std::vector<double> pos(x.scores), neg(x.scores);
    for (double& v : pos) v = std::max(v, 0.0);
    for (double& v : neg) v = std::max(-v, 0.0);
    ScoreVector xp{std::move(pos), Interval::unit()};
    ScoreVector xn{std::move(neg), Interval::unit()};
    return sugeno(xp, nu) - sugeno(xn, nu);
}

} // namespace bfi
