#include "bfi/bipolar_integrals.hpp"

#include <algorithm>
#include <cmath>

namespace bfi {

namespace {

constexpr double kScaleSlack = 1e-12;

// Rejects components outside [-1,1] by more than the slack; clamps benign
// floating drift from upstream arithmetic.
ScoreVector checked_bipolar(const ScoreVector& x, int n) {
    if (x.size() != n)
        fail(errc::dimension_mismatch,
             "vector has " + std::to_string(x.size()) + " components, carrier expects " +
                 std::to_string(n));
    std::vector<double> s(x.scores);
    for (double& v : s) {
        if (std::abs(v) > 1.0 + kScaleSlack)
            fail(errc::scale_violation,
                 "score " + std::to_string(v) + " outside the bipolar scale [-1,1]");
        v = std::clamp(v, -1.0, 1.0);
    }
    return {std::move(s), Interval::bipolar()};
}

// Distinct absolute levels, ascending, zero included.
std::vector<double> abs_levels(const ScoreVector& x) {
    std::vector<double> levels;
    levels.reserve(static_cast<std::size_t>(x.size()) + 1);
    levels.push_back(0.0);
    for (int i = 0; i < x.size(); ++i) levels.push_back(std::abs(x[i]));
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    return levels;
}

} // namespace

double bipolar_choquet(const ScoreVector& x0, const BiCapacity& mb) {
    ScoreVector x = checked_bipolar(x0, mb.n());
    auto levels = abs_levels(x);
    double acc = 0.0;
    for (std::size_t k = 1; k < levels.size(); ++k)
        acc += (levels[k] - levels[k - 1]) * mb.at(level_pair(x, levels[k]));
    return acc;
}

double bipolar_choquet_oracle(const ScoreVector& x0, const BiCapacity& mb) {
    ScoreVector x = checked_bipolar(x0, mb.n());
    auto levels = abs_levels(x);
    double acc = 0.0;
    for (std::size_t k = 1; k < levels.size(); ++k) {
        double t = 0.5 * (levels[k - 1] + levels[k]);
        SignedCoalition p;
        for (int i = 1; i <= x.size(); ++i) {
            if (x[i - 1] > t) p.pos |= single(i);
            else if (x[i - 1] < -t) p.neg |= single(i);
        }
        acc += (levels[k] - levels[k - 1]) * mb.at(p);
    }
    return acc;
}

namespace {

std::vector<double> shilkret_terms(const ScoreVector& x, const BiCapacity& mb) {
    std::vector<double> terms;
    for (double level : abs_levels(x))
        terms.push_back(level * mb.at(level_pair(x, level)));
    return terms;
}

std::vector<double> sugeno_terms(const ScoreVector& x, const BiCapacity& mb) {
    std::vector<double> terms;
    for (double level : abs_levels(x)) {
        double v = mb.at(level_pair(x, level));
        double sign = v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0);
        terms.push_back(sign * std::min(std::abs(v), level));
    }
    return terms;
}

} // namespace

double bipolar_shilkret(const ScoreVector& x0, const BiCapacity& mb, Variant v) {
    ScoreVector x = checked_bipolar(x0, mb.n());
    std::vector<double> terms = shilkret_terms(x, mb);
    return bipolar_max(terms, v);
}

double bipolar_sugeno(const ScoreVector& x0, const BiCapacity& mb, Variant v) {
    ScoreVector x = checked_bipolar(x0, mb.n());
    std::vector<double> terms = sugeno_terms(x, mb);
    return bipolar_max(terms, v);
}

LinkTriple link_check(const ScoreVector& x0, const BiCapacity& mb, BipolarFamily family) {
    ScoreVector x = checked_bipolar(x0, mb.n());
    std::vector<double> terms = family == BipolarFamily::shilkret
                                    ? shilkret_terms(x, mb)
                                    : sugeno_terms(x, mb);
    LinkTriple t{bipolar_max(terms), bipolar_max_right(terms), bipolar_max_left(terms)};
    const double sides[2] = {t.right, t.left};
    double linked = bipolar_max(sides);
    if (t.neutral != linked)
        fail(errc::link_violation, "neutral value disagrees with bipolar_max{right,left}");
    if (t.neutral != 0.0 && (t.right != t.neutral || t.left != t.neutral))
        fail(errc::link_violation, "nonzero neutral value must equal both variants");
    if (t.neutral == 0.0 && t.right != -t.left)
        fail(errc::link_violation, "zero neutral value requires right = -left");
    return t;
}

} // namespace bfi
