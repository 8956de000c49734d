#include <doctest.h>

#include <cmath>

#include "bfi/axioms.hpp"
#include "bfi/bipolar_integrals.hpp"
#include "bfi/integrals.hpp"
#include "helpers.hpp"

using namespace bfi;
using bfi::testing::bvec;
using bfi::testing::example_bicapacity2;

TEST_CASE("bipolar choquet on the two-criterion example") {
    BiCapacity mb = example_bicapacity2();
    ScoreVector x = bvec({0.8, -0.5});
    CHECK(bipolar_choquet(x, mb) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(bipolar_choquet_oracle(x, mb) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(bipolar_choquet(bvec({0, 0}), mb) == 0.0);
    CHECK(bipolar_choquet(indicator({full_mask(2), 0}, 2), mb) == 1.0);
    CHECK(bipolar_choquet(bvec({0.3, 0.3}), mb) == doctest::Approx(0.3).epsilon(1e-15));
    CHECK_THROWS_AS(bipolar_choquet(bvec({0.5}), mb), Error);
    CHECK_THROWS_AS(bipolar_choquet(ScoreVector({1.5, 0.0}, Interval::closed(-2.0, 2.0)), mb),
                    Error);
}

TEST_CASE("scaled indicators are the homogeneity anchor") {
    BiCapacity mb = example_bicapacity2();
    for (std::size_t i = 0; i < pair_count(2); ++i) {
        SignedCoalition p = pair_decode(2, i);
        for (double r : {0.25, 0.5, 1.0}) {
            ScoreVector ind = indicator(p, 2);
            std::vector<double> s(ind.scores);
            for (double& v : s) v *= r;
            ScoreVector x = bvec(std::move(s));
            CHECK(bipolar_choquet(x, mb) == doctest::Approx(r * mb.at(p)).epsilon(1e-15));
            for (Variant v : {Variant::neutral, Variant::right, Variant::left})
                CHECK(bipolar_shilkret(x, mb, v) ==
                      doctest::Approx(r * mb.at(p)).epsilon(1e-15));
            double mv = mb.at(p);
            double sg = mv > 0 ? 1.0 : (mv < 0 ? -1.0 : 0.0);
            double expected = p.pos == 0 && p.neg == 0
                                  ? 0.0
                                  : sg * std::min(r, std::abs(mv));
            CHECK(bipolar_sugeno(x, mb) == doctest::Approx(expected).epsilon(1e-15));
        }
    }
}

TEST_CASE("bipolar choquet agrees with its integral oracle on random instances") {
    for (std::uint64_t s = 0; s < 3000; ++s) {
        int n = 2 + static_cast<int>(s % 3);
        BiCapacity mb = gen_bicapacity(n, mix_seed(41, s));
        Rng rng(mix_seed(42, s));
        ScoreVector x = gen_score_vector(n, Interval::bipolar(), rng);
        CHECK(bipolar_choquet(x, mb) ==
              doctest::Approx(bipolar_choquet_oracle(x, mb)).epsilon(1e-12));
    }
}

TEST_CASE("bipolar shilkret and sugeno on the two-criterion example") {
    BiCapacity mb = example_bicapacity2();
    ScoreVector x = bvec({0.8, -0.5});
    CHECK(bipolar_shilkret(x, mb) == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(bipolar_sugeno(x, mb) == 0.5);
    CHECK(bipolar_sugeno(bvec({0.3, 0.3}), mb) == 0.3);
    CHECK(bipolar_sugeno(bvec({-0.2, -0.2}), mb) == -0.2);
}

TEST_CASE("trichotomy of the variants on the crafted two-level instance") {
    BiCapacity mb = BiCapacity::validate(2, {
                                                {{0, 0}, 0.0},
                                                {{single(1), 0}, 0.5},
                                                {{single(2), 0}, 0.0},
                                                {{full_mask(2), 0}, 1.0},
                                                {{0, single(1)}, -1.0},
                                                {{0, single(2)}, -1.0},
                                                {{0, full_mask(2)}, -1.0},
                                                {{single(1), single(2)}, -1.0},
                                                {{single(2), single(1)}, -1.0},
                                            });
    ScoreVector x = bvec({0.8, -0.4});
    CHECK(bipolar_shilkret(x, mb, Variant::neutral) == 0.0);
    CHECK(bipolar_shilkret(x, mb, Variant::right) == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(bipolar_shilkret(x, mb, Variant::left) == doctest::Approx(-0.4).epsilon(1e-15));
    LinkTriple t = link_check(x, mb, BipolarFamily::shilkret);
    CHECK(t.neutral == 0.0);
    CHECK(t.right == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(t.left == doctest::Approx(-0.4).epsilon(1e-15));
}

TEST_CASE("link identity holds on random instances for both families") {
    for (std::uint64_t s = 0; s < 3000; ++s) {
        int n = 2 + static_cast<int>(s % 3);
        BiCapacity mb = gen_bicapacity(n, mix_seed(43, s));
        Rng rng(mix_seed(44, s));
        ScoreVector x = gen_score_vector(n, Interval::bipolar(), rng);
        LinkTriple sh = link_check(x, mb, BipolarFamily::shilkret);
        LinkTriple su = link_check(x, mb, BipolarFamily::sugeno);
        if (sh.neutral != 0.0) CHECK(sh.right == sh.left);
        if (su.neutral != 0.0) CHECK(su.right == su.left);
    }
    // zero vector gives the all-zero triple
    BiCapacity mb = example_bicapacity2();
    LinkTriple z = link_check(bvec({0, 0}), mb, BipolarFamily::sugeno);
    CHECK(z.neutral == 0.0);
    CHECK(z.right == 0.0);
    CHECK(z.left == 0.0);
}

TEST_CASE("restriction to nonnegative vectors recovers the classical integrals") {
    const double grid[] = {0.0, 0.25, 0.5, 0.75, 1.0};
    for (std::uint64_t s = 0; s < 10; ++s) {
        BiCapacity mb = gen_bicapacity(3, mix_seed(45, s));
        std::vector<double> pos_table(1u << 3), neg_table(1u << 3);
        for (Mask a = 0; a <= full_mask(3); ++a) {
            pos_table[a] = mb.at(a, 0);
            neg_table[a] = -mb.at(0, a);
        }
        Capacity mu_pos = Capacity::from_table(3, pos_table);
        Capacity mu_neg = Capacity::from_table(3, neg_table);
        Measure nu_pos = Measure::from_capacity(mu_pos);
        for (double a : grid)
            for (double b : grid)
                for (double c : grid) {
                    ScoreVector x = bvec({a, b, c});
                    CHECK(bipolar_choquet(x, mb) ==
                          doctest::Approx(choquet(x, mu_pos)).epsilon(1e-12));
                    CHECK(bipolar_shilkret(x, mb) ==
                          doctest::Approx(shilkret(x, mu_pos)).epsilon(1e-12));
                    CHECK(bipolar_sugeno(x, mb) ==
                          doctest::Approx(sugeno(ScoreVector(x.scores, Interval::unit()),
                                                 nu_pos))
                              .epsilon(1e-12));
                    ScoreVector nx = bvec({-a, -b, -c});
                    CHECK(bipolar_choquet(nx, mb) ==
                          doctest::Approx(-choquet(x, mu_neg)).epsilon(1e-12));
                    CHECK(bipolar_shilkret(nx, mb) ==
                          doctest::Approx(shilkret_negative(nx, mu_neg)).epsilon(1e-12));
                }
    }
}

TEST_CASE("neutral bipolar integrals are monotone in the integrand") {
    Rng rng(47);
    for (int t = 0; t < 500; ++t) {
        BiCapacity mb = gen_bicapacity(3, rng.next());
        ScoreVector y = gen_score_vector(3, Interval::closed(-1.0, 0.9), rng);
        std::vector<double> up(y.scores);
        for (double& v : up) v += rng.uniform(0.0, std::min(0.1, 1.0 - v));
        ScoreVector x = bvec(std::move(up));
        CHECK(bipolar_choquet(x, mb) >= bipolar_choquet(y, mb));
        CHECK(bipolar_shilkret(x, mb) >= bipolar_shilkret(y, mb));
        CHECK(bipolar_sugeno(x, mb) >= bipolar_sugeno(y, mb));
    }
}

TEST_CASE("indicators elicit the bi-capacity exactly") {
    for (std::uint64_t s = 0; s < 20; ++s) {
        BiCapacity mb = gen_bicapacity(3, mix_seed(49, s));
        for (std::size_t i = 0; i < pair_count(3); ++i) {
            SignedCoalition p = pair_decode(3, i);
            ScoreVector ind = indicator(p, 3);
            CHECK(bipolar_choquet(ind, mb) == mb.at(p));
            CHECK(bipolar_shilkret(ind, mb) == mb.at(p));
            CHECK(bipolar_sugeno(ind, mb) == mb.at(p));
        }
    }
}
