#include <doctest.h>

#include <cmath>

#include "bfi/axioms.hpp"
#include "helpers.hpp"

using namespace bfi;
using bfi::testing::example_bicapacity2;
using bfi::testing::example_capacity3;

TEST_CASE("rng and seed mixing are deterministic") {
    Rng a(123), b(123);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
    CHECK(mix_seed(1, 2) == mix_seed(1, 2));
    CHECK(mix_seed(1, 2) != mix_seed(1, 3));
    Rng c(7);
    for (int i = 0; i < 1000; ++i) {
        double u = c.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
}

TEST_CASE("generators satisfy their declared predicates") {
    for (std::uint64_t s = 0; s < 500; ++s) {
        auto [x, y] = gen_comonotone_pair(4, Interval::bipolar(), s);
        CHECK(is_comonotone(x, y));

        auto [u, v] = gen_bipolar_comonotone_pair(4, s);
        CHECK(is_bipolar_comonotone(u, v));
        for (int i = 0; i < 4; ++i) CHECK(std::abs(u[i] + v[i]) <= 1.0);

        ChainSpec chain = gen_chain(4, s);
        CHECK(chain.levels.size() == chain.pairs.size());
        CHECK(!chain.levels.empty());
        CHECK(chain.levels.size() <= 5);
        for (std::size_t i = 0; i < chain.levels.size(); ++i) {
            CHECK(chain.levels[i] > 0.0);
            CHECK(chain.levels[i] <= 1.0);
            if (i > 0) {
                CHECK(chain.levels[i] > chain.levels[i - 1]);
                CHECK(pair_inclusion(chain.pairs[i], chain.pairs[i - 1]));
            }
        }
    }
}

TEST_CASE("generated carriers validate and generators are seed-stable") {
    for (std::uint64_t s = 0; s < 50; ++s) {
        Capacity mu = gen_capacity(4, s);
        CHECK(mu == gen_capacity(4, s));
        BiCapacity mb = gen_bicapacity(3, s);
        CHECK(mb == gen_bicapacity(3, s));
        // reconstruction through the validator proves the invariants hold
        std::vector<std::pair<SignedCoalition, double>> entries;
        for (std::size_t i = 0; i < pair_count(3); ++i)
            entries.emplace_back(pair_decode(3, i), mb.table()[i]);
        CHECK(BiCapacity::validate(3, entries) == mb);
    }
}

TEST_CASE("chains make the three vector bipolar maxima coincide") {
    for (std::uint64_t s = 0; s < 300; ++s) {
        ChainSpec chain = gen_chain(4, mix_seed(61, s));
        std::vector<ScoreVector> family;
        for (std::size_t i = 0; i < chain.levels.size(); ++i) {
            ScoreVector ind = indicator(chain.pairs[i], 4);
            std::vector<double> v(ind.scores);
            for (double& e : v) e *= chain.levels[i];
            family.emplace_back(std::move(v), Interval::bipolar());
        }
        ScoreVector n = vector_bipolar_max(family, Variant::neutral);
        CHECK(vector_bipolar_max(family, Variant::right).scores == n.scores);
        CHECK(vector_bipolar_max(family, Variant::left).scores == n.scores);
    }
}

TEST_CASE("axiom names round-trip") {
    for (Axiom a : {Axiom::idempotency, Axiom::homogeneity, Axiom::additivity,
                    Axiom::maxitivity, Axiom::minitivity, Axiom::min_stability,
                    Axiom::comonotone_additivity, Axiom::comonotone_maxitivity,
                    Axiom::comonotone_minitivity, Axiom::bipolar_comonotone_additivity,
                    Axiom::bipolar_comonotone_maxitivity_neutral,
                    Axiom::bipolar_comonotone_maxitivity_right,
                    Axiom::bipolar_comonotone_maxitivity_left,
                    Axiom::bipolar_sign_stability, Axiom::bipolar_min_stability})
        CHECK(parse_axiom(to_string(a)) == a);
    CHECK_THROWS_AS(parse_axiom("monotonicity"), Error);
}

TEST_CASE("elicitation recovers the bound carrier exactly") {
    Capacity mu = example_capacity3();
    CHECK(elicit_capacity(make_shilkret(mu)) == mu);
    CHECK(elicit_capacity(make_choquet(mu)) == mu);
    Capacity mean3 = elicit_capacity(make_mean(3));
    CHECK(mean3.at(single(2)) == doctest::Approx(1.0 / 3).epsilon(1e-15));

    BiCapacity mb = example_bicapacity2();
    CHECK(elicit_bicapacity(make_bipolar_choquet(mb)) == mb);
    CHECK(elicit_bicapacity(make_bipolar_shilkret(mb)) == mb);
    CHECK(elicit_bicapacity(make_bipolar_sugeno(mb)) == mb);
}

TEST_CASE("axiom checks pass for the integrals they characterize") {
    BiCapacity mb = example_bicapacity2();
    Aggregator chb = make_bipolar_choquet(mb);
    CHECK(check_axiom(chb, Axiom::bipolar_comonotone_additivity, 300, 1, 1e-9).passed());
    CHECK(check_axiom(chb, Axiom::idempotency, 300, 1, 1e-9).passed());

    Aggregator shb = make_bipolar_shilkret(mb);
    CHECK(check_axiom(shb, Axiom::idempotency, 300, 1, 1e-9).passed());
    CHECK(check_axiom(shb, Axiom::homogeneity, 300, 1, 1e-9).passed());
    CHECK(check_axiom(shb, Axiom::bipolar_comonotone_maxitivity_neutral, 300, 1, 1e-9)
              .passed());

    Aggregator sub = make_bipolar_sugeno(mb);
    CHECK(check_axiom(sub, Axiom::bipolar_sign_stability, 100, 1, 1e-9).passed());
    CHECK(check_axiom(sub, Axiom::bipolar_min_stability, 100, 1, 1e-9).passed());

    Measure nu = Measure::from_capacity(example_capacity3());
    Aggregator sug = make_sugeno(nu);
    CHECK(check_axiom(sug, Axiom::comonotone_maxitivity, 300, 1, 1e-9).passed());
    CHECK(check_axiom(sug, Axiom::min_stability, 300, 1, 1e-9).passed());
}

TEST_CASE("the mean fails bipolar min-stability with a recorded witness") {
    AxiomReport r = check_axiom(make_mean(3), Axiom::bipolar_min_stability, 50, 0, 1e-9);
    CHECK_FALSE(r.passed());
    CHECK(r.total_violations > 0);
    REQUIRE(!r.violations.empty());
    CHECK(!r.violations.front().witness.empty());
}

TEST_CASE("axiom reports are reproducible") {
    Aggregator mean = make_mean(2);
    AxiomReport a = check_axiom(mean, Axiom::bipolar_min_stability, 40, 9, 1e-9);
    AxiomReport b = check_axiom(mean, Axiom::bipolar_min_stability, 40, 9, 1e-9);
    CHECK(a.total_violations == b.total_violations);
    REQUIRE(a.violations.size() == b.violations.size());
    for (std::size_t i = 0; i < a.violations.size(); ++i) {
        CHECK(a.violations[i].trial == b.violations[i].trial);
        CHECK(a.violations[i].witness == b.violations[i].witness);
        CHECK(a.violations[i].lhs == b.violations[i].lhs);
        CHECK(a.violations[i].rhs == b.violations[i].rhs);
    }
}

TEST_CASE("scale-incompatible axioms are refused") {
    Aggregator ch = make_choquet(example_capacity3(), Interval::bipolar());
    CHECK_THROWS_AS(check_axiom(ch, Axiom::maxitivity, 10, 0, 1e-9), Error);
    Aggregator sh = make_shilkret(example_capacity3()); // scale [0,1]
    CHECK_THROWS_AS(check_axiom(sh, Axiom::minitivity, 10, 0, 1e-9), Error);
}

TEST_CASE("trials=0 is a vacuous pass on sampled axioms") {
    Aggregator chb = make_bipolar_choquet(example_bicapacity2());
    AxiomReport r = check_axiom(chb, Axiom::bipolar_comonotone_additivity, 0, 0, 1e-9);
    CHECK(r.passed());
    CHECK(r.trials == 0);
}

TEST_CASE("characterization suites pass for all six families") {
    Capacity mu = example_capacity3();
    BiCapacity mb = example_bicapacity2();
    CHECK(run_characterization_suite(Family::choquet, mu, Variant::neutral, 150, 0, 1e-9)
              .passed());
    CHECK(run_characterization_suite(Family::shilkret, mu, Variant::neutral, 150, 0, 1e-9)
              .passed());
    CHECK(run_characterization_suite(Family::sugeno, mu, Variant::neutral, 150, 0, 1e-9)
              .passed());
    CHECK(run_characterization_suite(Family::bipolar_choquet, mb, Variant::neutral, 150, 0,
                                     1e-9)
              .passed());
    for (Variant v : {Variant::neutral, Variant::right, Variant::left}) {
        CHECK(run_characterization_suite(Family::bipolar_shilkret, mb, v, 150, 0, 1e-9)
                  .passed());
        CHECK(run_characterization_suite(Family::bipolar_sugeno, mb, v, 150, 0, 1e-9)
                  .passed());
    }
}
