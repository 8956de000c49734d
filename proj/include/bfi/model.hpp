#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "bfi/error.hpp"

namespace bfi {

/// Criterion subsets are bitmasks over 1-based criterion indices
/// (bit i-1 represents criterion i).  At most 20 criteria.
using Mask = std::uint32_t;

inline constexpr int kMaxCriteria = 20;

constexpr Mask full_mask(int n) { return (Mask{1} << n) - 1; }
constexpr Mask single(int criterion) { return Mask{1} << (criterion - 1); }

int popcount(Mask m);
Mask mask_from_indices(const std::vector<int>& indices, int n);
std::vector<int> indices_from_mask(Mask m);
std::string mask_to_string(Mask m);

/// A real interval, possibly unbounded; infinite endpoints are open.
struct Interval {
    double lower;
    double upper;
    bool lower_open = false;
    bool upper_open = false;

    Interval(double lo, double hi, bool lo_open = false, bool hi_open = false);

    bool contains(double v) const;

    static Interval closed(double lo, double hi) { return {lo, hi}; }
    static Interval unit() { return {0.0, 1.0}; }
    static Interval bipolar() { return {-1.0, 1.0}; }
    static Interval reals() {
        return {-std::numeric_limits<double>::infinity(),
                std::numeric_limits<double>::infinity(), true, true};
    }
};

/// n real evaluations on a declared scale; the integrand.
struct ScoreVector {
    std::vector<double> scores;
    Interval scale;

    ScoreVector(std::vector<double> s, Interval sc);

    int size() const { return static_cast<int>(scores.size()); }
    double operator[](int i) const { return scores[static_cast<std::size_t>(i)]; }
};

/// A pair (A,B) of disjoint criterion subsets; element of the lattice Q.
struct SignedCoalition {
    Mask pos = 0;
    Mask neg = 0;

    bool disjoint() const { return (pos & neg) == 0; }
    bool operator==(const SignedCoalition&) const = default;
};

std::string to_string(const SignedCoalition& p);

/// Lattice order on Q: (A,B) <= (C,D) iff A subset of C and B superset of D.
bool lattice_leq(const SignedCoalition& p, const SignedCoalition& q);

/// Componentwise inclusion on Q: (A,B) <= (C,D) iff A subset of C and B subset of D.
bool pair_inclusion(const SignedCoalition& p, const SignedCoalition& q);

SignedCoalition lattice_sup(const SignedCoalition& p, const SignedCoalition& q);
SignedCoalition lattice_inf(const SignedCoalition& p, const SignedCoalition& q);

/// The vector valued 1 on pos, -1 on neg, 0 elsewhere, on scale [-1,1].
ScoreVector indicator(const SignedCoalition& p, int n);

/// The level pair ({j: x_j >= t}, {j: x_j <= -t}) for t > 0.  At t = 0 the
/// negative side uses the strict inequality x_j < 0 so the pair stays disjoint.
SignedCoalition level_pair(const ScoreVector& x, double t);

bool is_comonotone(const ScoreVector& x, const ScoreVector& y);
bool is_bipolar_comonotone(const ScoreVector& x, const ScoreVector& y);

/// Monotone normalized set function on 2^N into [0,1].
class Capacity {
  public:
    static Capacity validate(int n, const std::vector<std::pair<Mask, double>>& entries);
    static Capacity from_table(int n, std::vector<double> table);

    int n() const { return n_; }
    double at(Mask coalition) const { return table_[coalition]; }
    const std::vector<double>& table() const { return table_; }

    bool operator==(const Capacity&) const = default;

  private:
    Capacity(int n, std::vector<double> table)
        : n_(n), table_(std::move(table)) {}

    int n_;
    std::vector<double> table_; // indexed by mask, size 2^n
};

/// Monotone set function on 2^N into a general scale (alpha, beta).
/// Construction requires closed endpoints so the boundary values are attained.
class Measure {
  public:
    static Measure validate(int n, Interval scale,
                            const std::vector<std::pair<Mask, double>>& entries);
    static Measure from_table(int n, Interval scale, std::vector<double> table);
    static Measure from_capacity(const Capacity& mu);

    int n() const { return n_; }
    const Interval& scale() const { return scale_; }
    double at(Mask coalition) const { return table_[coalition]; }
    const std::vector<double>& table() const { return table_; }

  private:
    Measure(int n, Interval scale, std::vector<double> table)
        : n_(n), scale_(scale), table_(std::move(table)) {}

    int n_;
    Interval scale_;
    std::vector<double> table_;
};

/// Dense base-3 index of a disjoint pair: criterion i contributes
/// 0 (absent), 1 (in pos) or 2 (in neg) times 3^(i-1).
std::size_t pair_index(int n, const SignedCoalition& p);
SignedCoalition pair_decode(int n, std::size_t index);
std::size_t pair_count(int n); // 3^n

/// Monotone function on the lattice Q of disjoint pairs into [-1,1].
class BiCapacity {
  public:
    static BiCapacity validate(int n,
                               const std::vector<std::pair<SignedCoalition, double>>& entries);
    static BiCapacity from_table(int n, std::vector<double> table);

    int n() const { return n_; }
    double at(const SignedCoalition& p) const { return table_[pair_index(n_, p)]; }
    double at(Mask pos, Mask neg) const { return at(SignedCoalition{pos, neg}); }
    const std::vector<double>& table() const { return table_; }

    bool operator==(const BiCapacity&) const = default;

  private:
    BiCapacity(int n, std::vector<double> table)
        : n_(n), table_(std::move(table)) {}

    int n_;
    std::vector<double> table_; // indexed by pair_index, size 3^n
};

} // namespace bfi
