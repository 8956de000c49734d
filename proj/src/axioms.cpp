#include "bfi/axioms.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bfi/bipolar_integrals.hpp"
#include "bfi/integrals.hpp"

namespace bfi {

namespace {

constexpr std::size_t kMaxStoredViolations = 50;

std::string format_scores(const ScoreVector& x) {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < x.size(); ++i) {
        if (i) os << ',';
        os << x[i];
    }
    os << ')';
    return os.str();
}

ScoreVector constant_vector(int n, double c, const Interval& scale) {
    return {std::vector<double>(static_cast<std::size_t>(n), c), scale};
}

} // namespace

Aggregator make_choquet(Capacity mu, Interval scale) {
    int n = mu.n();
    return {"choquet", n, scale,
            [mu = std::move(mu)](const ScoreVector& x) { return choquet(x, mu); }};
}

Aggregator make_shilkret(Capacity mu, Interval scale) {
    int n = mu.n();
    return {"shilkret", n, scale,
            [mu = std::move(mu)](const ScoreVector& x) { return shilkret(x, mu); }};
}

Aggregator make_shilkret_negative(Capacity mu) {
    int n = mu.n();
    return {"shilkret-negative", n, Interval::closed(-1.0, 0.0),
            [mu = std::move(mu)](const ScoreVector& x) { return shilkret_negative(x, mu); }};
}

Aggregator make_shilkret_symmetric(Capacity mu) {
    int n = mu.n();
    return {"shilkret-symmetric", n, Interval::bipolar(),
            [mu = std::move(mu)](const ScoreVector& x) { return shilkret_symmetric(x, mu); }};
}

Aggregator make_sugeno(Measure nu) {
    int n = nu.n();
    Interval scale = nu.scale();
    return {"sugeno", n, scale,
            [nu = std::move(nu)](const ScoreVector& x) { return sugeno(x, nu); }};
}

Aggregator make_sugeno_symmetric(Capacity mu) {
    int n = mu.n();
    return {"sugeno-symmetric", n, Interval::bipolar(),
            [mu = std::move(mu)](const ScoreVector& x) { return sugeno_symmetric(x, mu); }};
}

Aggregator make_bipolar_choquet(BiCapacity mb) {
    int n = mb.n();
    return {"bipolar-choquet", n, Interval::bipolar(),
            [mb = std::move(mb)](const ScoreVector& x) { return bipolar_choquet(x, mb); }};
}

Aggregator make_bipolar_shilkret(BiCapacity mb, Variant v) {
    int n = mb.n();
    std::string name = std::string("bipolar-shilkret-") + to_string(v);
    return {std::move(name), n, Interval::bipolar(),
            [mb = std::move(mb), v](const ScoreVector& x) { return bipolar_shilkret(x, mb, v); }};
}

Aggregator make_bipolar_sugeno(BiCapacity mb, Variant v) {
    int n = mb.n();
    std::string name = std::string("bipolar-sugeno-") + to_string(v);
    return {std::move(name), n, Interval::bipolar(),
            [mb = std::move(mb), v](const ScoreVector& x) { return bipolar_sugeno(x, mb, v); }};
}

Aggregator make_mean(int n) {
    return {"mean", n, Interval::bipolar(), [](const ScoreVector& x) {
                double s = 0.0;
                for (int i = 0; i < x.size(); ++i) s += x[i];
                return s / x.size();
            }};
}

Aggregator make_coordinate_max(int n) {
    return {"max", n, Interval::bipolar(), [](const ScoreVector& x) {
                double m = x[0];
                for (int i = 1; i < x.size(); ++i) m = std::max(m, x[i]);
                return m;
            }};
}

Capacity elicit_capacity(const Aggregator& G) {
    if (!G.scale.contains(0.0) || !G.scale.contains(1.0))
        fail(errc::scale_mismatch,
             "capacity elicitation needs an aggregator scale containing 0 and 1");
    std::size_t size = std::size_t{1} << G.n;
    std::vector<double> table(size);
    for (std::size_t m = 0; m < size; ++m) {
        std::vector<double> s(static_cast<std::size_t>(G.n), 0.0);
        for (int i = 1; i <= G.n; ++i)
            if (m & single(i)) s[i - 1] = 1.0;
        table[m] = G.eval(ScoreVector{std::move(s), G.scale});
    }
    return Capacity::from_table(G.n, std::move(table));
}

BiCapacity elicit_bicapacity(const Aggregator& G) {
    if (!G.scale.contains(-1.0) || !G.scale.contains(1.0))
        fail(errc::scale_mismatch,
             "bi-capacity elicitation needs an aggregator on the bipolar scale");
    std::size_t size = pair_count(G.n);
    std::vector<double> table(size);
    for (std::size_t idx = 0; idx < size; ++idx)
        table[idx] = G.eval(indicator(pair_decode(G.n, idx), G.n));
    return BiCapacity::from_table(G.n, std::move(table));
}

// splitmix64
Rng::Rng(std::uint64_t seed) : state_(seed) {}

std::uint64_t Rng::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double Rng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

std::uint64_t Rng::below(std::uint64_t bound) { return next() % bound; }

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    Rng r(seed ^ (0x6a09e667f3bcc909ULL + stream * 0x9e3779b97f4a7c15ULL));
    return r.next();
}

ScoreVector gen_score_vector(int n, const Interval& scale, Rng& rng) {
    std::vector<double> s(static_cast<std::size_t>(n));
    for (double& v : s) v = rng.uniform(scale.lower, scale.upper);
    return {std::move(s), scale};
}

std::pair<ScoreVector, ScoreVector>
gen_comonotone_pair(int n, const Interval& scale, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
    for (double& v : a) v = rng.uniform(scale.lower, scale.upper);
    for (double& v : b) v = rng.uniform(scale.lower, scale.upper);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    // one random permutation, both vectors sorted consistently with it
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(perm[i], perm[rng.below(static_cast<std::uint64_t>(i) + 1)]);
    std::vector<double> x(static_cast<std::size_t>(n)), y(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        x[perm[k]] = a[k];
        y[perm[k]] = b[k];
    }
    return {ScoreVector{std::move(x), scale}, ScoreVector{std::move(y), scale}};
}

std::pair<ScoreVector, ScoreVector> gen_bipolar_comonotone_pair(int n, std::uint64_t seed) {
    Rng rng(seed);
    // shared per-index signs, two magnitude assignments nondecreasing along
    // one shared permutation: cosigned with comonotone absolute values
    std::vector<double> a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
    for (double& v : a) v = rng.uniform(0.0, 0.5);
    for (double& v : b) v = rng.uniform(0.0, 0.5);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    // a zero prefix keeps the magnitudes sorted and exercises the cosign edge
    if (rng.below(4) == 0) {
        auto zeros = rng.below(static_cast<std::uint64_t>(n) + 1);
        for (std::uint64_t k = 0; k < zeros; ++k) a[k] = 0.0;
    }
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(perm[i], perm[rng.below(static_cast<std::uint64_t>(i) + 1)]);
    std::vector<double> x(static_cast<std::size_t>(n)), y(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        double sign = rng.below(2) == 0 ? 1.0 : -1.0;
        x[perm[k]] = sign * a[k];
        y[perm[k]] = sign * b[k];
    }
    return {ScoreVector{std::move(x), Interval::bipolar()},
            ScoreVector{std::move(y), Interval::bipolar()}};
}

ChainSpec gen_chain(int n, std::uint64_t seed) {
    Rng rng(seed);
    int k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n) + 1));
    ChainSpec chain;
    chain.levels.resize(static_cast<std::size_t>(k));
    for (;;) {
        for (double& l : chain.levels) l = 1.0 - rng.uniform(); // in (0,1]
        std::sort(chain.levels.begin(), chain.levels.end());
        if (std::adjacent_find(chain.levels.begin(), chain.levels.end()) ==
            chain.levels.end())
            break;
    }
    SignedCoalition cur;
    for (int i = 1; i <= n; ++i) {
        switch (rng.below(3)) {
        case 0: cur.pos |= single(i); break;
        case 1: cur.neg |= single(i); break;
        default: break;
        }
    }
    chain.pairs.push_back(cur);
    for (int step = 1; step < k; ++step) {
        SignedCoalition next;
        for (int i = 1; i <= n; ++i) {
            if ((cur.pos & single(i)) && rng.below(3) != 0) next.pos |= single(i);
            if ((cur.neg & single(i)) && rng.below(3) != 0) next.neg |= single(i);
        }
        chain.pairs.push_back(next);
        cur = next;
    }
    return chain;
}

Capacity gen_capacity(int n, std::uint64_t seed) {
    Rng rng(seed);
    std::size_t size = std::size_t{1} << n;
    std::vector<Mask> order;
    order.reserve(size);
    for (std::size_t m = 0; m < size; ++m) order.push_back(static_cast<Mask>(m));
    std::stable_sort(order.begin(), order.end(),
                     [](Mask a, Mask b) { return popcount(a) < popcount(b); });
    std::vector<double> table(size, 0.0);
    table[full_mask(n)] = 1.0;
    for (Mask m : order) {
        if (m == 0 || m == full_mask(n)) continue;
        double lo = 0.0;
        for (int i = 1; i <= n; ++i)
            if (m & single(i)) lo = std::max(lo, table[m & ~single(i)]);
        table[m] = lo + rng.uniform() * (1.0 - lo) * popcount(m) / n;
    }
    return Capacity::from_table(n, std::move(table));
}

BiCapacity gen_bicapacity(int n, std::uint64_t seed) {
    Capacity pos = gen_capacity(n, mix_seed(seed, 1));
    Capacity neg = gen_capacity(n, mix_seed(seed, 2));
    Rng rng(mix_seed(seed, 3));
    std::size_t size = pair_count(n);
    std::vector<double> table(size, 0.0);
    std::vector<std::size_t> order;
    order.reserve(size);
    for (std::size_t idx = 0; idx < size; ++idx) order.push_back(idx);
    auto height = [n](std::size_t idx) {
        SignedCoalition p = pair_decode(n, idx);
        return popcount(p.pos) + n - popcount(p.neg);
    };
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return height(a) < height(b); });
    for (std::size_t idx : order) {
        SignedCoalition p = pair_decode(n, idx);
        if (p.pos == 0) {
            table[idx] = -neg.at(p.neg);
            continue;
        }
        if (p.neg == 0) {
            table[idx] = pos.at(p.pos);
            continue;
        }
        // mixed node: stay above every already-filled predecessor and below
        // the all-positive ancestor (A, empty)
        double lo = -1.0;
        for (int i = 1; i <= n; ++i) {
            if (p.pos & single(i))
                lo = std::max(lo, table[pair_index(n, {p.pos & ~single(i), p.neg})]);
            if (!((p.pos | p.neg) & single(i)))
                lo = std::max(lo, table[pair_index(n, {p.pos, p.neg | single(i)})]);
        }
        double hi = pos.at(p.pos);
        table[idx] = lo + rng.uniform() * (hi - lo);
    }
    return BiCapacity::from_table(n, std::move(table));
}

const char* to_string(Axiom a) {
    switch (a) {
    case Axiom::idempotency: return "idempotency";
    case Axiom::homogeneity: return "homogeneity";
    case Axiom::additivity: return "additivity";
    case Axiom::maxitivity: return "maxitivity";
    case Axiom::minitivity: return "minitivity";
    case Axiom::min_stability: return "min-stability";
    case Axiom::comonotone_additivity: return "comonotone-additivity";
    case Axiom::comonotone_maxitivity: return "comonotone-maxitivity";
    case Axiom::comonotone_minitivity: return "comonotone-minitivity";
    case Axiom::bipolar_comonotone_additivity: return "bipolar-comonotone-additivity";
    case Axiom::bipolar_comonotone_maxitivity_neutral:
        return "bipolar-comonotone-maxitivity";
    case Axiom::bipolar_comonotone_maxitivity_right:
        return "bipolar-comonotone-maxitivity-right";
    case Axiom::bipolar_comonotone_maxitivity_left:
        return "bipolar-comonotone-maxitivity-left";
    case Axiom::bipolar_sign_stability: return "bipolar-sign-stability";
    default: return "bipolar-min-stability";
    }
}

Axiom parse_axiom(const std::string& name) {
    for (int a = 0; a <= static_cast<int>(Axiom::bipolar_min_stability); ++a)
        if (name == to_string(static_cast<Axiom>(a))) return static_cast<Axiom>(a);
    if (name == "bipolar-comonotone-maxitivity-neutral")
        return Axiom::bipolar_comonotone_maxitivity_neutral;
    fail(errc::parse_error, "unknown axiom '" + name + "'");
}

const char* to_string(Family f) {
    switch (f) {
    case Family::choquet: return "choquet";
    case Family::shilkret: return "shilkret";
    case Family::sugeno: return "sugeno";
    case Family::bipolar_choquet: return "bipolar-choquet";
    case Family::bipolar_shilkret: return "bipolar-shilkret";
    default: return "bipolar-sugeno";
    }
}

bool is_bipolar(Family f) {
    return f == Family::bipolar_choquet || f == Family::bipolar_shilkret ||
           f == Family::bipolar_sugeno;
}

namespace {

void require_zero_in_scale(const Aggregator& G, Axiom a) {
    if (!G.scale.contains(0.0))
        fail(errc::unsupported_axiom_for_scale,
             std::string(to_string(a)) + " needs a scale containing 0");
}

void require_bipolar_scale(const Aggregator& G, Axiom a) {
    if (!(G.scale.contains(-1.0) && G.scale.contains(1.0)))
        fail(errc::unsupported_axiom_for_scale,
             std::string(to_string(a)) + " is defined on the bipolar scale [-1,1]");
}

struct TrialContext {
    const Aggregator& G;
    double eps;
    std::vector<AxiomViolation>& out;
    long trial;

    void record(std::string witness, double lhs, double rhs) {
        out.push_back({trial, std::move(witness), lhs, rhs});
    }
    void compare(std::string witness, double lhs, double rhs) {
        if (!(std::abs(lhs - rhs) <= eps)) record(std::move(witness), lhs, rhs);
    }
};

double dyadic_or_random(Rng& rng, long trial) {
    static constexpr double dyadics[] = {0.25, 0.5, 0.75, 1.0};
    if (trial % 5 < 4) return dyadics[trial % 5];
    double c = 1.0 - rng.uniform(); // (0,1]
    return c;
}

ScoreVector scaled(const ScoreVector& x, double c) {
    std::vector<double> s(x.scores);
    for (double& v : s) v *= c;
    return {std::move(s), x.scale};
}

ScoreVector vec_sum(const ScoreVector& x, const ScoreVector& y) {
    std::vector<double> s(x.scores);
    for (int i = 0; i < y.size(); ++i) s[i] += y[i];
    return {std::move(s), x.scale};
}

ScoreVector vec_max(const ScoreVector& x, const ScoreVector& y) {
    std::vector<double> s(x.scores);
    for (int i = 0; i < y.size(); ++i) s[i] = std::max(s[i], y[i]);
    return {std::move(s), x.scale};
}

ScoreVector vec_min(const ScoreVector& x, const ScoreVector& y) {
    std::vector<double> s(x.scores);
    for (int i = 0; i < y.size(); ++i) s[i] = std::min(s[i], y[i]);
    return {std::move(s), x.scale};
}

Interval half_scale(const Interval& scale) {
    return Interval::closed(scale.lower / 2.0, scale.upper / 2.0);
}

int band_sign(double v, double eps) { return v > eps ? 1 : (v < -eps ? -1 : 0); }

Variant maxitivity_variant(Axiom a) {
    if (a == Axiom::bipolar_comonotone_maxitivity_right) return Variant::right;
    if (a == Axiom::bipolar_comonotone_maxitivity_left) return Variant::left;
    return Variant::neutral;
}

// Scale preconditions are checked once, before the trial loop, so nothing
// throws inside the parallel region.
void require_axiom_scale(const Aggregator& G, Axiom axiom) {
    switch (axiom) {
    case Axiom::homogeneity:
    case Axiom::additivity:
    case Axiom::comonotone_additivity:
        require_zero_in_scale(G, axiom);
        break;
    case Axiom::maxitivity:
        if (G.scale.lower < 0.0)
            fail(errc::unsupported_axiom_for_scale,
                 "maxitivity is defined for scales with nonnegative bottom");
        break;
    case Axiom::minitivity:
        if (G.scale.upper > 0.0)
            fail(errc::unsupported_axiom_for_scale,
                 "minitivity is defined for scales with nonpositive top");
        break;
    case Axiom::bipolar_comonotone_additivity:
    case Axiom::bipolar_comonotone_maxitivity_neutral:
    case Axiom::bipolar_comonotone_maxitivity_right:
    case Axiom::bipolar_comonotone_maxitivity_left:
    case Axiom::bipolar_sign_stability:
    case Axiom::bipolar_min_stability:
        require_bipolar_scale(G, axiom);
        break;
    default:
        break;
    }
}

void run_trial(const Aggregator& G, Axiom axiom, long trial, std::uint64_t seed,
               double eps, std::vector<AxiomViolation>& out) {
    std::uint64_t ts = mix_seed(seed, static_cast<std::uint64_t>(trial) * 16 +
                                          static_cast<std::uint64_t>(axiom));
    Rng rng(ts);
    TrialContext ctx{G, eps, out, trial};
    switch (axiom) {
    case Axiom::idempotency: {
        double c = rng.uniform(G.scale.lower, G.scale.upper);
        if (trial == 0) c = G.scale.lower;
        else if (trial == 1) c = G.scale.upper;
        else if (trial == 2 && G.scale.contains(0.0)) c = 0.0;
        ctx.compare("a=" + std::to_string(c),
                    G.eval(constant_vector(G.n, c, G.scale)), c);
        break;
    }
    case Axiom::homogeneity: {
        ScoreVector x = gen_score_vector(G.n, G.scale, rng);
        double c = dyadic_or_random(rng, trial);
        ctx.compare("x=" + format_scores(x) + " c=" + std::to_string(c),
                    G.eval(scaled(x, c)), c * G.eval(x));
        break;
    }
    case Axiom::additivity: {
        Interval h = half_scale(G.scale);
        ScoreVector x = gen_score_vector(G.n, h, rng);
        ScoreVector y = gen_score_vector(G.n, h, rng);
        ctx.compare("x=" + format_scores(x) + " y=" + format_scores(y),
                    G.eval(vec_sum(x, y)), G.eval(x) + G.eval(y));
        break;
    }
    case Axiom::maxitivity: {
        ScoreVector x = gen_score_vector(G.n, G.scale, rng);
        ScoreVector y = gen_score_vector(G.n, G.scale, rng);
        ctx.compare("x=" + format_scores(x) + " y=" + format_scores(y),
                    G.eval(vec_max(x, y)), std::max(G.eval(x), G.eval(y)));
        break;
    }
    case Axiom::minitivity: {
        ScoreVector x = gen_score_vector(G.n, G.scale, rng);
        ScoreVector y = gen_score_vector(G.n, G.scale, rng);
        ctx.compare("x=" + format_scores(x) + " y=" + format_scores(y),
                    G.eval(vec_min(x, y)), std::min(G.eval(x), G.eval(y)));
        break;
    }
    case Axiom::min_stability: {
        ScoreVector x = gen_score_vector(G.n, G.scale, rng);
        double gamma = rng.uniform(G.scale.lower, G.scale.upper);
        ScoreVector clipped = vec_min(x, constant_vector(G.n, gamma, G.scale));
        ctx.compare("x=" + format_scores(x) + " gamma=" + std::to_string(gamma),
                    G.eval(clipped), std::min(G.eval(x), gamma));
        break;
    }
    case Axiom::comonotone_additivity: {
        auto [x, y] = gen_comonotone_pair(G.n, half_scale(G.scale), rng.next());
        ScoreVector xs{x.scores, G.scale}, ys{y.scores, G.scale};
        ctx.compare("x=" + format_scores(xs) + " y=" + format_scores(ys),
                    G.eval(vec_sum(xs, ys)), G.eval(xs) + G.eval(ys));
        break;
    }
    case Axiom::comonotone_maxitivity: {
        auto [x, y] = gen_comonotone_pair(G.n, G.scale, rng.next());
        ctx.compare("x=" + format_scores(x) + " y=" + format_scores(y),
                    G.eval(vec_max(x, y)), std::max(G.eval(x), G.eval(y)));
        break;
    }
    case Axiom::comonotone_minitivity: {
        auto [x, y] = gen_comonotone_pair(G.n, G.scale, rng.next());
        ctx.compare("x=" + format_scores(x) + " y=" + format_scores(y),
                    G.eval(vec_min(x, y)), std::min(G.eval(x), G.eval(y)));
        break;
    }
    case Axiom::bipolar_comonotone_additivity: {
        auto [x, y] = gen_bipolar_comonotone_pair(G.n, rng.next());
        ctx.compare("x=" + format_scores(x) + " y=" + format_scores(y),
                    G.eval(vec_sum(x, y)), G.eval(x) + G.eval(y));
        break;
    }
    case Axiom::bipolar_comonotone_maxitivity_neutral:
    case Axiom::bipolar_comonotone_maxitivity_right:
    case Axiom::bipolar_comonotone_maxitivity_left: {
        Variant v = maxitivity_variant(axiom);
        ChainSpec chain = gen_chain(G.n, rng.next());
        std::vector<ScoreVector> family;
        std::vector<double> values;
        for (std::size_t i = 0; i < chain.levels.size(); ++i) {
            ScoreVector bi = scaled(indicator(chain.pairs[i], G.n), chain.levels[i]);
            values.push_back(G.eval(bi));
            family.push_back(std::move(bi));
        }
        ScoreVector combined = vector_bipolar_max(family, v);
        ctx.compare("chain of " + std::to_string(chain.levels.size()) +
                        " bi-constants, combined=" + format_scores(combined),
                    G.eval(combined), bipolar_max(values, v));
        break;
    }
    case Axiom::bipolar_sign_stability: {
        double r = dyadic_or_random(rng, trial);
        double s = dyadic_or_random(rng, trial / 5);
        std::size_t pairs = pair_count(G.n);
        for (std::size_t idx = 0; idx < pairs; ++idx) {
            SignedCoalition p = pair_decode(G.n, idx);
            double gr = G.eval(scaled(indicator(p, G.n), r));
            double gs = G.eval(scaled(indicator(p, G.n), s));
            int sr = band_sign(gr, ctx.eps), ss = band_sign(gs, ctx.eps);
            if (sr != ss)
                ctx.record(to_string(p) + " r=" + std::to_string(r) +
                               " s=" + std::to_string(s),
                           gr, gs);
        }
        break;
    }
    case Axiom::bipolar_min_stability: {
        double a = dyadic_or_random(rng, trial);
        double b = dyadic_or_random(rng, trial / 5 + 2);
        if (a == b) b = 0.5 * a;
        double r = std::max(a, b), s = std::min(a, b);
        std::size_t pairs = pair_count(G.n);
        for (std::size_t idx = 0; idx < pairs; ++idx) {
            SignedCoalition p = pair_decode(G.n, idx);
            double gr = std::abs(G.eval(scaled(indicator(p, G.n), r)));
            double gs = std::abs(G.eval(scaled(indicator(p, G.n), s)));
            std::string witness = to_string(p) + " r=" + std::to_string(r) +
                                  " s=" + std::to_string(s);
            if (gr < gs - ctx.eps)
                ctx.record(witness + " |G(r.1)|<|G(s.1)|", gr, gs);
            else if (gr > gs + ctx.eps && std::abs(gs - s) > ctx.eps)
                ctx.record(witness + " strict increase but |G(s.1)| != s", gs, s);
        }
        break;
    }
    }
}

} // namespace

AxiomReport check_axiom(const Aggregator& G, Axiom axiom, long trials,
                        std::uint64_t seed, double eps) {
    require_axiom_scale(G, axiom);
    AxiomReport report{G.name, axiom, trials, 0, {}};
    std::vector<AxiomViolation> all;
#pragma omp parallel
    {
        std::vector<AxiomViolation> local;
#pragma omp for schedule(static) nowait
        for (long t = 0; t < trials; ++t) {
            try {
                run_trial(G, axiom, t, seed, eps, local);
            } catch (const std::exception& e) {
                local.push_back({t, std::string("exception: ") + e.what(), 0.0, 0.0});
            }
        }
#pragma omp critical(bfi_axiom_merge)
        all.insert(all.end(), local.begin(), local.end());
    }
    std::sort(all.begin(), all.end(),
              [](const AxiomViolation& a, const AxiomViolation& b) {
                  return a.trial != b.trial ? a.trial < b.trial : a.witness < b.witness;
              });
    report.total_violations = static_cast<long>(all.size());
    if (all.size() > kMaxStoredViolations) all.resize(kMaxStoredViolations);
    report.violations = std::move(all);
    return report;
}

namespace {

AxiomReport check_bundle_axiom(const Aggregator& G, Axiom a, long trials,
                               std::uint64_t seed, double eps) {
    return check_axiom(G, a, trials, seed, eps);
}

} // namespace

SuiteResult run_characterization_suite(Family family, const Carrier& carrier,
                                       Variant variant, long trials,
                                       std::uint64_t seed, double eps) {
    SuiteResult result;
    auto check = [&](const Aggregator& G, std::initializer_list<Axiom> axioms) {
        for (Axiom a : axioms)
            result.reports.push_back(check_bundle_axiom(G, a, trials, seed, eps));
    };
    switch (family) {
    case Family::choquet: {
        const auto& mu = std::get<Capacity>(carrier);
        Aggregator G = make_choquet(mu);
        check(G, {Axiom::idempotency, Axiom::comonotone_additivity});
        result.roundtrip_exact = elicit_capacity(G).table() == mu.table();
        break;
    }
    case Family::shilkret: {
        const auto& mu = std::get<Capacity>(carrier);
        Aggregator G = make_shilkret(mu);
        check(G, {Axiom::idempotency, Axiom::comonotone_maxitivity, Axiom::homogeneity});
        Aggregator Gn = make_shilkret_negative(mu);
        check(Gn, {Axiom::idempotency, Axiom::comonotone_minitivity, Axiom::homogeneity});
        result.roundtrip_exact = elicit_capacity(G).table() == mu.table();
        break;
    }
    case Family::sugeno: {
        const auto& mu = std::get<Capacity>(carrier);
        Aggregator G = make_sugeno(Measure::from_capacity(mu));
        check(G, {Axiom::idempotency, Axiom::comonotone_maxitivity, Axiom::min_stability});
        result.roundtrip_exact = elicit_capacity(G).table() == mu.table();
        break;
    }
    case Family::bipolar_choquet: {
        const auto& mb = std::get<BiCapacity>(carrier);
        Aggregator G = make_bipolar_choquet(mb);
        check(G, {Axiom::idempotency, Axiom::bipolar_comonotone_additivity});
        result.roundtrip_exact = elicit_bicapacity(G).table() == mb.table();
        break;
    }
    case Family::bipolar_shilkret: {
        const auto& mb = std::get<BiCapacity>(carrier);
        Aggregator G = make_bipolar_shilkret(mb, variant);
        Axiom maxit = variant == Variant::right
                          ? Axiom::bipolar_comonotone_maxitivity_right
                          : (variant == Variant::left
                                 ? Axiom::bipolar_comonotone_maxitivity_left
                                 : Axiom::bipolar_comonotone_maxitivity_neutral);
        check(G, {Axiom::idempotency, maxit, Axiom::homogeneity});
        result.roundtrip_exact = elicit_bicapacity(G).table() == mb.table();
        break;
    }
    case Family::bipolar_sugeno: {
        const auto& mb = std::get<BiCapacity>(carrier);
        Aggregator G = make_bipolar_sugeno(mb, variant);
        Axiom maxit = variant == Variant::right
                          ? Axiom::bipolar_comonotone_maxitivity_right
                          : (variant == Variant::left
                                 ? Axiom::bipolar_comonotone_maxitivity_left
                                 : Axiom::bipolar_comonotone_maxitivity_neutral);
        check(G, {Axiom::idempotency, maxit, Axiom::bipolar_sign_stability,
                  Axiom::bipolar_min_stability});
        result.roundtrip_exact = elicit_bicapacity(G).table() == mb.table();
        break;
    }
    }
    return result;
}

} // namespace bfi
