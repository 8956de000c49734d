#include "bfi/model.hpp"

#include <bit>
#include <cmath>
#include <sstream>

namespace bfi {

int popcount(Mask m) { return std::popcount(m); }

Mask mask_from_indices(const std::vector<int>& indices, int n) {
    Mask m = 0;
    for (int i : indices) {
        if (i < 1 || i > n)
            fail(errc::parse_error,
                 "criterion index " + std::to_string(i) + " out of range 1.." +
                     std::to_string(n));
        m |= single(i);
    }
    return m;
}

std::vector<int> indices_from_mask(Mask m) {
    std::vector<int> out;
    for (int i = 1; m != 0; ++i, m >>= 1)
        if (m & 1u) out.push_back(i);
    return out;
}

std::string mask_to_string(Mask m) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int i : indices_from_mask(m)) {
        if (!first) os << ',';
        os << i;
        first = false;
    }
    os << '}';
    return os.str();
}

std::string to_string(const SignedCoalition& p) {
    return "(" + mask_to_string(p.pos) + "," + mask_to_string(p.neg) + ")";
}

Interval::Interval(double lo, double hi, bool lo_open, bool hi_open)
    : lower(lo), upper(hi), lower_open(lo_open), upper_open(hi_open) {
    if (!(lower < upper))
        fail(errc::internal_error, "interval endpoints must satisfy lower < upper");
    if (std::isinf(lower)) lower_open = true;
    if (std::isinf(upper)) upper_open = true;
}

bool Interval::contains(double v) const {
    if (lower_open ? !(v > lower) : !(v >= lower)) return false;
    if (upper_open ? !(v < upper) : !(v <= upper)) return false;
    return true;
}

ScoreVector::ScoreVector(std::vector<double> s, Interval sc)
    : scores(std::move(s)), scale(sc) {
    if (scores.empty())
        fail(errc::empty_input, "score vector must have at least one criterion");
    for (std::size_t i = 0; i < scores.size(); ++i)
        if (!scale.contains(scores[i]))
            fail(errc::scale_violation, "score " + std::to_string(scores[i]) +
                                            " at criterion " + std::to_string(i + 1) +
                                            " lies outside the declared scale");
}

bool lattice_leq(const SignedCoalition& p, const SignedCoalition& q) {
    return (p.pos & ~q.pos) == 0 && (q.neg & ~p.neg) == 0;
}

bool pair_inclusion(const SignedCoalition& p, const SignedCoalition& q) {
    return (p.pos & ~q.pos) == 0 && (p.neg & ~q.neg) == 0;
}

SignedCoalition lattice_sup(const SignedCoalition& p, const SignedCoalition& q) {
    return {p.pos | q.pos, p.neg & q.neg};
}

SignedCoalition lattice_inf(const SignedCoalition& p, const SignedCoalition& q) {
    return {p.pos & q.pos, p.neg | q.neg};
}

ScoreVector indicator(const SignedCoalition& p, int n) {
    std::vector<double> s(static_cast<std::size_t>(n), 0.0);
    for (int i = 1; i <= n; ++i) {
        if (p.pos & single(i)) s[i - 1] = 1.0;
        else if (p.neg & single(i)) s[i - 1] = -1.0;
    }
    return {std::move(s), Interval::bipolar()};
}

SignedCoalition level_pair(const ScoreVector& x, double t) {
    SignedCoalition p;
    for (int i = 1; i <= x.size(); ++i) {
        double v = x[i - 1];
        if (t > 0.0) {
            if (v >= t) p.pos |= single(i);
            else if (v <= -t) p.neg |= single(i);
        } else {
            if (v >= 0.0) p.pos |= single(i);
            else p.neg |= single(i);
        }
    }
    return p;
}

bool is_comonotone(const ScoreVector& x, const ScoreVector& y) {
    if (x.size() != y.size())
        fail(errc::dimension_mismatch, "comonotonicity requires equal lengths");
    int n = x.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((x[i] - x[j]) * (y[i] - y[j]) < 0.0) return false;
    return true;
}

bool is_bipolar_comonotone(const ScoreVector& x, const ScoreVector& y) {
    if (x.size() != y.size())
        fail(errc::dimension_mismatch, "comonotonicity requires equal lengths");
    int n = x.size();
    for (int i = 0; i < n; ++i)
        if (x[i] * y[i] < 0.0) return false;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((std::abs(x[i]) - std::abs(x[j])) * (std::abs(y[i]) - std::abs(y[j])) < 0.0)
                return false;
    return true;
}

namespace {

void check_criteria_count(int n) {
    if (n < 1 || n > kMaxCriteria)
        fail(errc::internal_error, "criterion count must be in 1.." +
                                       std::to_string(kMaxCriteria));
}

} // namespace

Capacity Capacity::validate(int n, const std::vector<std::pair<Mask, double>>& entries) {
    check_criteria_count(n);
    std::size_t size = std::size_t{1} << n;
    std::vector<double> table(size, 0.0);
    std::vector<bool> seen(size, false);
    for (const auto& [mask, value] : entries) {
        if (mask >= size)
            fail(errc::parse_error, "coalition " + mask_to_string(mask) +
                                        " out of range for n=" + std::to_string(n));
        if (seen[mask])
            fail(errc::duplicate_entry, "duplicate entry for coalition " + mask_to_string(mask));
        seen[mask] = true;
        table[mask] = value;
    }
    for (std::size_t m = 0; m < size; ++m)
        if (!seen[m])
            fail(errc::missing_entry,
                 "missing entry for coalition " + mask_to_string(static_cast<Mask>(m)));
    return from_table(n, std::move(table));
}

Capacity Capacity::from_table(int n, std::vector<double> table) {
    check_criteria_count(n);
    std::size_t size = std::size_t{1} << n;
    if (table.size() != size)
        fail(errc::missing_entry, "capacity table must have 2^n entries");
    for (std::size_t m = 0; m < size; ++m) {
        if (table[m] < 0.0 || table[m] > 1.0)
            fail(errc::boundary_violation, "capacity value " + std::to_string(table[m]) +
                                               " for " + mask_to_string(static_cast<Mask>(m)) +
                                               " outside [0,1]");
        for (int i = 1; i <= n; ++i) {
            Mask bit = single(i);
            if (m & bit) continue;
            if (table[m] > table[m | bit])
                fail(errc::monotonicity_violation,
                     "monotonicity fails on covering pair " +
                         mask_to_string(static_cast<Mask>(m)) + " subset of " +
                         mask_to_string(static_cast<Mask>(m | bit)));
        }
    }
    if (table[0] != 0.0)
        fail(errc::boundary_violation, "capacity of the empty set must be 0");
    if (table[full_mask(n)] != 1.0)
        fail(errc::boundary_violation, "capacity of the full set must be 1");
    return Capacity(n, std::move(table));
}

Measure Measure::validate(int n, Interval scale,
                          const std::vector<std::pair<Mask, double>>& entries) {
    check_criteria_count(n);
    std::size_t size = std::size_t{1} << n;
    std::vector<double> table(size, 0.0);
    std::vector<bool> seen(size, false);
    for (const auto& [mask, value] : entries) {
        if (mask >= size)
            fail(errc::parse_error, "coalition out of range");
        if (seen[mask])
            fail(errc::duplicate_entry, "duplicate entry for coalition " + mask_to_string(mask));
        seen[mask] = true;
        table[mask] = value;
    }
    for (std::size_t m = 0; m < size; ++m)
        if (!seen[m])
            fail(errc::missing_entry,
                 "missing entry for coalition " + mask_to_string(static_cast<Mask>(m)));
    return from_table(n, scale, std::move(table));
}

Measure Measure::from_table(int n, Interval scale, std::vector<double> table) {
    check_criteria_count(n);
    if (scale.lower_open || scale.upper_open)
        fail(errc::scale_mismatch,
             "a measure needs a scale with closed endpoints so the boundary values are attained");
    std::size_t size = std::size_t{1} << n;
    if (table.size() != size)
        fail(errc::missing_entry, "measure table must have 2^n entries");
    if (table[0] != scale.lower)
        fail(errc::boundary_violation, "measure of the empty set must equal the scale bottom");
    if (table[full_mask(n)] != scale.upper)
        fail(errc::boundary_violation, "measure of the full set must equal the scale top");
    for (std::size_t m = 0; m < size; ++m) {
        if (!scale.contains(table[m]))
            fail(errc::boundary_violation, "measure value outside the declared scale");
        for (int i = 1; i <= n; ++i) {
            Mask bit = single(i);
            if (m & bit) continue;
            if (table[m] > table[m | bit])
                fail(errc::monotonicity_violation,
                     "monotonicity fails on covering pair " +
                         mask_to_string(static_cast<Mask>(m)) + " subset of " +
                         mask_to_string(static_cast<Mask>(m | bit)));
        }
    }
    return Measure(n, scale, std::move(table));
}

Measure Measure::from_capacity(const Capacity& mu) {
    return Measure(mu.n(), Interval::unit(), mu.table());
}

std::size_t pair_count(int n) {
    std::size_t c = 1;
    for (int i = 0; i < n; ++i) c *= 3;
    return c;
}

std::size_t pair_index(int n, const SignedCoalition& p) {
    std::size_t idx = 0, w = 1;
    for (int i = 1; i <= n; ++i, w *= 3) {
        if (p.pos & single(i)) idx += w;
        else if (p.neg & single(i)) idx += 2 * w;
    }
    return idx;
}

SignedCoalition pair_decode(int n, std::size_t index) {
    SignedCoalition p;
    for (int i = 1; i <= n; ++i) {
        switch (index % 3) {
        case 1: p.pos |= single(i); break;
        case 2: p.neg |= single(i); break;
        default: break;
        }
        index /= 3;
    }
    return p;
}

BiCapacity BiCapacity::validate(int n,
                                const std::vector<std::pair<SignedCoalition, double>>& entries) {
    check_criteria_count(n);
    std::size_t size = pair_count(n);
    std::vector<double> table(size, 0.0);
    std::vector<bool> seen(size, false);
    Mask all = full_mask(n);
    for (const auto& [pair, value] : entries) {
        if (!pair.disjoint())
            fail(errc::disjointness_violation,
                 "pair " + mask_to_string(pair.pos) + "," + mask_to_string(pair.neg) +
                     " is not disjoint");
        if ((pair.pos | pair.neg) & ~all)
            fail(errc::parse_error, "pair uses criteria beyond n=" + std::to_string(n));
        std::size_t idx = pair_index(n, pair);
        if (seen[idx])
            fail(errc::duplicate_entry, "duplicate entry for pair " + to_string(pair));
        seen[idx] = true;
        table[idx] = value;
    }
    for (std::size_t i = 0; i < size; ++i)
        if (!seen[i])
            fail(errc::missing_entry, "missing entry for pair " + to_string(pair_decode(n, i)));
    return from_table(n, std::move(table));
}

BiCapacity BiCapacity::from_table(int n, std::vector<double> table) {
    check_criteria_count(n);
    std::size_t size = pair_count(n);
    if (table.size() != size)
        fail(errc::missing_entry, "bi-capacity table must have 3^n entries");
    Mask all = full_mask(n);
    if (table[pair_index(n, {0, 0})] != 0.0)
        fail(errc::boundary_violation, "bi-capacity must vanish on (empty,empty)");
    if (table[pair_index(n, {all, 0})] != 1.0)
        fail(errc::boundary_violation, "bi-capacity must attain 1 on (N,empty)");
    if (table[pair_index(n, {0, all})] != -1.0)
        fail(errc::boundary_violation, "bi-capacity must attain -1 on (empty,N)");
    // Covering moves in the lattice order: add one element to pos, or
    // remove one element from neg.  Monotonicity on covering moves implies
    // monotonicity on all comparable pairs.
    for (std::size_t idx = 0; idx < size; ++idx) {
        SignedCoalition p = pair_decode(n, idx);
        double v = table[idx];
        if (v < -1.0 || v > 1.0)
            fail(errc::boundary_violation,
                 "bi-capacity value for " + to_string(p) + " outside [-1,1]");
        for (int i = 1; i <= n; ++i) {
            Mask bit = single(i);
            if (!((p.pos | p.neg) & bit)) {
                SignedCoalition q{p.pos | bit, p.neg};
                if (v > table[pair_index(n, q)])
                    fail(errc::monotonicity_violation,
                         "monotonicity fails on covering pair " + to_string(p) +
                             " <= " + to_string(q));
            }
            if (p.neg & bit) {
                SignedCoalition q{p.pos, p.neg & ~bit};
                if (v > table[pair_index(n, q)])
                    fail(errc::monotonicity_violation,
                         "monotonicity fails on covering pair " + to_string(p) +
                             " <= " + to_string(q));
            }
        }
    }
    return BiCapacity(n, std::move(table));
}

} // namespace bfi
