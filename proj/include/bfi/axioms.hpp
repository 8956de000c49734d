#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bfi/bipolar_max.hpp"
#include "bfi/model.hpp"

namespace bfi {

/// A black-box aggregation function under test.  `eval` must be
/// deterministic and safe to call from several threads at once.
struct Aggregator {
    std::string name;
    int n;
    Interval scale;
    std::function<double(const ScoreVector&)> eval;
};

Aggregator make_choquet(Capacity mu, Interval scale = Interval::bipolar());
Aggregator make_shilkret(Capacity mu, Interval scale = Interval::unit());
Aggregator make_shilkret_negative(Capacity mu); // scale [-1,0]
Aggregator make_shilkret_symmetric(Capacity mu);
Aggregator make_sugeno(Measure nu);
Aggregator make_sugeno_symmetric(Capacity mu);
Aggregator make_bipolar_choquet(BiCapacity mb);
Aggregator make_bipolar_shilkret(BiCapacity mb, Variant v = Variant::neutral);
Aggregator make_bipolar_sugeno(BiCapacity mb, Variant v = Variant::neutral);

/// Demo aggregators used to exercise the falsification paths.
Aggregator make_mean(int n);
Aggregator make_coordinate_max(int n);

/// Recovers the carrier from an aggregator via its values on indicator
/// vectors; validation errors signal that G is not an integral of the
/// expected kind.
Capacity elicit_capacity(const Aggregator& G);
BiCapacity elicit_bicapacity(const Aggregator& G);

/// Seeded deterministic generator; identical output on every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed);
    std::uint64_t next();
    double uniform();                       // in [0,1)
    double uniform(double lo, double hi);
    std::uint64_t below(std::uint64_t bound);

  private:
    std::uint64_t state_;
};

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

ScoreVector gen_score_vector(int n, const Interval& scale, Rng& rng);

std::pair<ScoreVector, ScoreVector>
gen_comonotone_pair(int n, const Interval& scale, std::uint64_t seed);

/// A pair on [-1,1]^n, scaled so the sum stays on the scale.
std::pair<ScoreVector, ScoreVector>
gen_bipolar_comonotone_pair(int n, std::uint64_t seed);

/// Strictly increasing levels in (0,1] paired with a componentwise-inclusion
/// decreasing sequence of disjoint pairs.
struct ChainSpec {
    std::vector<double> levels;
    std::vector<SignedCoalition> pairs;
};

ChainSpec gen_chain(int n, std::uint64_t seed);

Capacity gen_capacity(int n, std::uint64_t seed);
BiCapacity gen_bicapacity(int n, std::uint64_t seed);

enum class Axiom {
    idempotency,
    homogeneity,
    additivity,
    maxitivity,
    minitivity,
    min_stability,
    comonotone_additivity,
    comonotone_maxitivity,
    comonotone_minitivity,
    bipolar_comonotone_additivity,
    bipolar_comonotone_maxitivity_neutral,
    bipolar_comonotone_maxitivity_right,
    bipolar_comonotone_maxitivity_left,
    bipolar_sign_stability,
    bipolar_min_stability,
};

const char* to_string(Axiom a);
Axiom parse_axiom(const std::string& name);

struct AxiomViolation {
    long trial;
    std::string witness;
    double lhs;
    double rhs;
};

struct AxiomReport {
    std::string aggregator;
    Axiom axiom;
    long trials;
    long total_violations;
    std::vector<AxiomViolation> violations; // capped sample, sorted by trial
    bool passed() const { return total_violations == 0; }
};

/// Runs `trials` seeded instances of the axiom's quantifier domain;
/// indicator-quantified axioms additionally enumerate every disjoint pair.
AxiomReport check_axiom(const Aggregator& G, Axiom axiom, long trials,
                        std::uint64_t seed, double eps);

enum class Family {
    choquet,
    shilkret,
    sugeno,
    bipolar_choquet,
    bipolar_shilkret,
    bipolar_sugeno,
};

const char* to_string(Family f);
bool is_bipolar(Family f);

using Carrier = std::variant<Capacity, BiCapacity>;

struct SuiteResult {
    std::vector<AxiomReport> reports;
    bool roundtrip_exact = false;
    bool passed() const {
        if (!roundtrip_exact) return false;
        for (const auto& r : reports)
            if (!r.passed()) return false;
        return true;
    }
};

/// Checks the axiom bundle of the family's characterization theorem against
/// the integral bound to `carrier`, then elicits the carrier back and
/// requires exact table equality.
SuiteResult run_characterization_suite(Family family, const Carrier& carrier,
                                       Variant variant, long trials,
                                       std::uint64_t seed, double eps);

} // namespace bfi
