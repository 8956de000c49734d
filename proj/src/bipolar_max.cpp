#include "bfi/bipolar_max.hpp"

#include <algorithm>
#include <cmath>

namespace bfi {

const char* to_string(Variant v) {
    switch (v) {
    case Variant::neutral: return "neutral";
    case Variant::right: return "right";
    default: return "left";
    }
}

Variant parse_variant(const std::string& name) {
    if (name == "neutral") return Variant::neutral;
    if (name == "right" || name == "pos") return Variant::right;
    if (name == "left" || name == "neg") return Variant::left;
    fail(errc::parse_error, "unknown variant '" + name + "'");
}

double symmetric_max(double a, double b) {
    if (b == -a) return 0.0;
    double m = std::max(std::abs(a), std::abs(b));
    if (m == -a || m == -b) return -m;
    return m;
}

namespace {

// Reduces to distinct values and reports the top magnitude together with
// whether both signs attain it.  Duplicates collapse first, so {3,3} has a
// unique top element.
struct TopMagnitude {
    double magnitude;
    bool positive_present;
    bool negative_present;
};

TopMagnitude top_magnitude(std::span<const double> xs) {
    if (xs.empty()) fail(errc::empty_input, "bipolar maximum of an empty set");
    double m = 0.0;
    for (double v : xs) m = std::max(m, std::abs(v));
    TopMagnitude top{m, false, false};
    for (double v : xs) {
        if (std::abs(v) != m) continue;
        if (v >= 0.0) top.positive_present = true;
        if (v <= 0.0) top.negative_present = true;
    }
    return top;
}

} // namespace

double bipolar_max(std::span<const double> xs) {
    TopMagnitude top = top_magnitude(xs);
    if (top.magnitude == 0.0) return 0.0;
    if (top.positive_present && top.negative_present) return 0.0;
    return top.positive_present ? top.magnitude : -top.magnitude;
}

double bipolar_max_right(std::span<const double> xs) {
    TopMagnitude top = top_magnitude(xs);
    if (top.magnitude == 0.0) return 0.0;
    return top.positive_present ? top.magnitude : -top.magnitude;
}

double bipolar_max_left(std::span<const double> xs) {
    TopMagnitude top = top_magnitude(xs);
    if (top.magnitude == 0.0) return 0.0;
    return top.negative_present ? -top.magnitude : top.magnitude;
}

double bipolar_max(std::span<const double> xs, Variant v) {
    switch (v) {
    case Variant::neutral: return bipolar_max(xs);
    case Variant::right: return bipolar_max_right(xs);
    default: return bipolar_max_left(xs);
    }
}

ScoreVector vector_bipolar_max(const std::vector<ScoreVector>& family, Variant v) {
    if (family.empty()) fail(errc::empty_input, "bipolar maximum of an empty family");
    int n = family.front().size();
    for (const auto& x : family)
        if (x.size() != n)
            fail(errc::length_mismatch, "family vectors must have equal length");
    std::vector<double> out(static_cast<std::size_t>(n));
    std::vector<double> column(family.size());
    for (int i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < family.size(); ++k) column[k] = family[k][i];
        out[static_cast<std::size_t>(i)] = bipolar_max(column, v);
    }
    return {std::move(out), family.front().scale};
}

} // namespace bfi
