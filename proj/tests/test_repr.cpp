#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

#include <masspart/partition.hpp>
#include <masspart/repr.hpp>
#include <masspart/stattest.hpp>
#include <masspart/util.hpp>

#include "test_support.hpp"

using namespace masspart;
using Catch::Matchers::ContainsSubstring;

TEST_CASE("parameter mapping and validation", "[repr]") {
    const RamParams ram = pd_to_ram(PdParams{0.3, 0.7});
    REQUIRE_THAT(ram.alpha, Catch::Matchers::WithinAbs(0.3, 1e-15));
    REQUIRE_THAT(ram.a1, Catch::Matchers::WithinAbs(1.0, 1e-15));
    REQUIRE_THAT(ram.c, Catch::Matchers::WithinAbs(0.7, 1e-15));
    REQUIRE_THAT(ram.b(), Catch::Matchers::WithinAbs(1.0, 1e-15));
    REQUIRE_THAT(ram.a(3), Catch::Matchers::WithinAbs(1.6, 1e-15));

    REQUIRE_THROWS_AS((PdParams{1.0, 0.5}).validate(), std::invalid_argument);
    REQUIRE_THROWS_AS((PdParams{0.5, -0.5}).validate(), std::invalid_argument);
    REQUIRE_THROWS_AS((RamParams{-0.1, 1.0, 1.0}).validate(), std::invalid_argument);
    REQUIRE_THROWS_AS((RamParams{0.5, 0.0, 1.0}).validate(), std::invalid_argument);
    REQUIRE_NOTHROW((RamParams{1.5, 1.0, 2.0}).validate()); // alpha >= 1 is legal here
}

TEST_CASE("assumption sequences enumerate the shape pairs", "[repr]") {
    auto [a, b] = assumption_sequences(RamParams{0.5, 0.5, 0.5}, 5);
    REQUIRE(a == std::vector<double>{0.5, 1.0, 1.5, 2.0, 2.5});
    REQUIRE(b == std::vector<double>{1.0, 1.0, 1.0, 1.0, 1.0});
    REQUIRE_THAT(tail_closure_shape(RamParams{0.5, 0.5, 0.5}, 3),
                 Catch::Matchers::WithinAbs(1.5, 1e-15));
    REQUIRE_THAT(tail_closure_shape(RamParams{0.5, 0.5, 0.5}, 1),
                 Catch::Matchers::WithinAbs(0.5, 1e-15));
}

TEST_CASE("stick sampler produces valid size-biased partitions", "[repr]") {
    RngStream g = make_stream(11, 0);
    const MassPartition p = sample_ram_stick(RamParams{0.5, 0.5, 0.5}, 6, g);
    REQUIRE(p.atoms.size() == 6);
    REQUIRE(p.order == AtomOrder::size_biased);
    for (double x : p.atoms) {
        REQUIRE(x > 0.0);
        REQUIRE(x < 1.0);
    }
    REQUIRE(p.residual > 0.0);
    REQUIRE_NOTHROW(validate_unit(p, 1e-12));

    // alpha above one is legal for the generic stick family
    RngStream g2 = make_stream(11, 1);
    const MassPartition q = sample_ram_stick(RamParams{1.5, 1.0, 2.0}, 5, g2);
    REQUIRE_NOTHROW(validate_unit(q, 1e-12));

    RngStream g3 = make_stream(11, 2);
    REQUIRE_THROWS_MATCHES(sample_ram_stick(RamParams{0.5, 0.5, 0.5}, 0, g3),
                           std::invalid_argument,
                           Catch::Matchers::MessageMatches(ContainsSubstring("k >= 1")));
}

TEST_CASE("stick first factor follows beta(c, a1) even for alpha above one", "[repr]") {
    const RamParams ram{2.0, 0.7, 0.4};
    auto y1 = testsup::draw(30000, 12, [&](RngStream& g) {
        return sample_ram_stick(ram, 1, g).atoms[0];
    });
    auto r = ks_one_sample(
        std::move(y1), [&](double x) { return reg_inc_beta(ram.c, ram.a1, x); }, 1e-4,
        "stick-Y1", "");
    INFO("p=" << r.p_value);
    REQUIRE(r.passed);
}

TEST_CASE("perpetuity tail closure uses the k-th shape, not the (k+1)-th", "[repr]") {
    // Brute-force the tail after three atoms (1200 extra terms) and compare
    // against gamma(a_3, 1) = gamma(1.5, 1); the off-by-one alternative
    // gamma(a_4, 1) = gamma(2, 1) must be firmly rejected.
    const RamParams ram{0.5, 0.5, 0.5};
    auto tails = testsup::draw(20000, 13, [&](RngStream& g) {
        double prod = sample_beta(g, ram.a(3), ram.b());
        KahanAccumulator w;
        for (std::size_t j = 4; j < 4 + 1200; ++j) {
            w.add(sample_gamma(g, ram.c, 1.0) * prod);
            prod *= sample_beta(g, ram.a(j), ram.b());
        }
        return w.value();
    });
    auto pass = ks_one_sample(
        std::vector<double>(tails), [](double x) { return reg_inc_gamma(1.5, x); }, 1e-4,
        "tail-a3", "");
    INFO("vs gamma(1.5,1): D=" << pass.statistic << " p=" << pass.p_value);
    REQUIRE(pass.passed);

    auto reject = ks_one_sample(
        std::move(tails), [](double x) { return reg_inc_gamma(2.0, x); }, 1e-4, "tail-a4", "");
    INFO("vs gamma(2,1): D=" << reject.statistic << " p=" << reject.p_value);
    REQUIRE_FALSE(reject.passed);
    REQUIRE(reject.p_value < 1e-12);
}

TEST_CASE("perpetuity denominator is gamma(c + a1, 1)", "[repr]") {
    const RamParams ram{0.3, 1.0, 0.7};
    auto denoms = testsup::draw(30000, 14, [&](RngStream& g) {
        return sample_ram_perpetuity(ram, 2, g, true).denominator;
    });
    auto r = ks_one_sample(
        std::move(denoms), [&](double x) { return reg_inc_gamma(ram.c + ram.a1, x); }, 1e-4,
        "denominator", "");
    INFO("p=" << r.p_value);
    REQUIRE(r.passed);
}

TEST_CASE("perpetuity with closure matches stick atoms; without closure it truncates",
          "[repr]") {
    const RamParams ram{1.5, 1.0, 2.0}; // includes the alpha >= 1 regime
    auto stick1 = testsup::draw(30000, 15, [&](RngStream& g) {
        return sample_ram_stick(ram, 2, g).atoms[1];
    });
    auto perp1 = testsup::draw(30000, 16, [&](RngStream& g) {
        return sample_ram_perpetuity(ram, 2, g, true).partition.atoms[1];
    });
    auto r = ks_two_sample(std::move(stick1), std::move(perp1), 1e-4, "atom2", "");
    INFO("p=" << r.p_value);
    REQUIRE(r.passed);

    RngStream g = make_stream(17, 0);
    const PerpetuitySample closed = sample_ram_perpetuity(ram, 3, g, true);
    REQUIRE(closed.partition.residual > 0.0);
    REQUIRE_NOTHROW(validate_unit(closed.partition, 1e-12));
    RngStream g2 = make_stream(17, 1);
    const PerpetuitySample open = sample_ram_perpetuity(ram, 3, g2, false);
    REQUIRE(open.partition.residual == 0.0);
    REQUIRE_THAT(open.partition.total(), Catch::Matchers::WithinAbs(1.0, 1e-12));
}

TEST_CASE("tilted walk representation matches the stick law", "[repr]") {
    const PdParams pd{0.5, 1.5};
    const RamParams ram = pd_to_ram(pd);
    auto walk = testsup::draw(30000, 18, [&](RngStream& g) {
        return sample_pd_theta_biased(pd, 2, g).partition.atoms[0];
    });
    auto stick = testsup::draw(30000, 19, [&](RngStream& g) {
        return sample_ram_stick(ram, 2, g).atoms[0];
    });
    auto r = ks_two_sample(std::move(walk), std::move(stick), 1e-4, "tilted-vs-stick", "");
    INFO("p=" << r.p_value);
    REQUIRE(r.passed);

    RngStream g = make_stream(20, 0);
    const PerpetuitySample s = sample_pd_theta_biased(pd, 4, g);
    REQUIRE(s.partition.atoms.size() == 4);
    REQUIRE(s.partition.residual > 0.0);
    REQUIRE_NOTHROW(validate_unit(s.partition, 1e-12));
}

TEST_CASE("exponentially damped weights realize the theta-only family", "[repr]") {
    const double theta = 2.5;
    auto atom1 = testsup::draw(30000, 21, [&](RngStream& g) {
        return sample_pd0_exp_weights(theta, 2, g).partition.atoms[0];
    });
    auto r1 = ks_one_sample(
        std::move(atom1), [&](double x) { return reg_inc_beta(1.0, theta, x); }, 1e-4,
        "pd0-atom1", "");
    INFO("atom1 p=" << r1.p_value);
    REQUIRE(r1.passed);

    auto denom = testsup::draw(30000, 22, [&](RngStream& g) {
        return sample_pd0_exp_weights(theta, 2, g).denominator;
    });
    auto r2 = ks_one_sample(
        std::move(denom), [&](double x) { return reg_inc_gamma(1.0 + theta, x); }, 1e-4,
        "pd0-denominator", "");
    INFO("denominator p=" << r2.p_value);
    REQUIRE(r2.passed);
}

TEST_CASE("biased exponential-gap weights match the alpha=0 stick family", "[repr]") {
    const double a = 0.8, c = 1.3;
    auto biased = testsup::draw(30000, 23, [&](RngStream& g) {
        return sample_ram0_biased_exp(a, c, 2, g).partition.atoms[0];
    });
    auto stick = testsup::draw(30000, 24, [&](RngStream& g) {
        return sample_ram_stick(RamParams{0.0, a, c}, 2, g).atoms[0];
    });
    auto r = ks_two_sample(std::move(biased), std::move(stick), 1e-4, "ram0-vs-stick", "");
    INFO("p=" << r.p_value);
    REQUIRE(r.passed);

    // The weights carry the full biased-gap sum e^{-(D~_1+...+D~_n)/a}, so the
    // common beta(a,c) factor of the first gap multiplies everything and the
    // exact-closure total is gamma(a, 1) (not the leading-gap gamma(a+c, 1)
    // law of the perpetuity samplers). This pins that convention.
    auto denom = testsup::draw(30000, 25, [&](RngStream& g) {
        return sample_ram0_biased_exp(a, c, 2, g).denominator;
    });
    auto r2 = ks_one_sample(
        std::move(denom), [&](double x) { return reg_inc_gamma(a, x); }, 1e-4,
        "ram0-denominator", "");
    INFO("denominator p=" << r2.p_value);
    REQUIRE(r2.passed);
}

TEST_CASE("stable points partition: ranked output, requested point count", "[repr]") {
    RngStream g = make_stream(26, 0);
    const MassPartition p = sample_pd_stable_points(PdParams{0.4, 0.0}, 50, g);
    REQUIRE(p.order == AtomOrder::nonincreasing);
    REQUIRE(std::is_sorted(p.atoms.begin(), p.atoms.end(), std::greater<double>()));
    REQUIRE(p.residual > 0.0);
    REQUIRE_NOTHROW(validate_unit(p, 1e-9));

    RngStream g2 = make_stream(26, 1);
    REQUIRE_THROWS_MATCHES(sample_pd_stable_points(PdParams{0.4, 0.0}, 1, g2),
                           std::invalid_argument,
                           Catch::Matchers::MessageMatches(ContainsSubstring("n_points >= 2")));
    RngStream g3 = make_stream(26, 2);
    REQUIRE_THROWS_AS(sample_pd_stable_points(PdParams{0.4, 0.5}, 10, g3),
                      std::invalid_argument); // theta must be zero here

    // size-biased atom at 10^4 points reproduces beta(1-alpha, alpha)
    auto pick = testsup::draw(2000, 27, [](RngStream& gg) {
        MassPartition q = sample_pd_stable_points(PdParams{0.5, 0.0}, 10000, gg);
        return q.atoms[size_biased_pick(q, gg)];
    });
    auto r = ks_one_sample(
        std::move(pick), [](double x) { return reg_inc_beta(0.5, 0.5, x); }, 1e-4,
        "stable-size-biased", "");
    INFO("p=" << r.p_value);
    REQUIRE(r.passed);
}

TEST_CASE("decreasing-size point field: mass moments and tail formula", "[repr]") {
    const double alpha = 0.5, s = 2.0;
    // total mass (points + exact conditional mean tail) has mean alpha*s and
    // variance alpha*(1-alpha)*s
    auto mass = testsup::draw(20000, 28, [&](RngStream& g) {
        MarkedPointSet mps = sample_mvee(alpha, s, 300, g);
        KahanAccumulator acc;
        for (double x : mps.sizes) acc.add(x);
        return acc.value() + mvee_mean_tail(alpha, s, mps.cutoff);
    });
    auto r = moment_check(mass, alpha * s, std::sqrt(alpha * (1.0 - alpha) * s), "mvee-mass");
    INFO("z=" << r.z);
    REQUIRE(r.passed);

    RngStream g = make_stream(29, 0);
    MarkedPointSet mps = sample_mvee(alpha, s, 40, g);
    REQUIRE(mps.sizes.size() == 40);
    REQUIRE(mps.times.empty()); // size-only truncation; cutoff carries the walk time
    REQUIRE(std::isfinite(mps.cutoff));
    REQUIRE(mps.cutoff > 0.0);
    REQUIRE_FALSE(mps.truncation_level.empty());
    // mean tail decreases as the truncation time grows
    REQUIRE(mvee_mean_tail(alpha, s, 10.0) > mvee_mean_tail(alpha, s, 20.0));
}

TEST_CASE("size intensity tail: frozen values and Poisson count law", "[repr]") {
    auto rel = [](double got, double want) { return std::fabs(got - want) / want; };
    REQUIRE(rel(nu_vee_tail(0.5, 1.0), 0.0502545416600163) < 1e-8);
    REQUIRE(rel(nu_vee_tail(0.3, 1.0), 0.0445957587312947) < 1e-8);
    REQUIRE(rel(nu_vee_tail(0.7, 1.0), 0.0386462296532631) < 1e-8);
    REQUIRE(nu_vee_tail(0.5, 0.5) > nu_vee_tail(0.5, 1.0));
    REQUIRE(nu_vee_tail(0.5, 40.0) < 1e-15);
    REQUIRE_THROWS_MATCHES(nu_vee_tail(0.5, 0.0), std::invalid_argument,
                           Catch::Matchers::MessageMatches(ContainsSubstring("domain")));

    // number of sizes above u is Poisson with mean s * tail(u)
    const double alpha = 0.5, s = 1.5, u = 0.5;
    const double mean = s * nu_vee_tail(alpha, u);
    auto counts = testsup::draw(20000, 30, [&](RngStream& g) {
        MarkedPointSet mps = sample_mvee(alpha, s, 400, g);
        double cnt = 0;
        for (double x : mps.sizes)
            if (x > u) cnt += 1.0;
        return cnt;
    });
    auto r = moment_check(counts, mean, std::sqrt(mean), "nu-vee-count");
    INFO("z=" << r.z << " mean=" << mean);
    REQUIRE(r.passed);
}

TEST_CASE("thinned construction invariants and marginals", "[repr]") {
    const double alpha = 0.6;
    RngStream g = make_stream(31, 0);
    const ThinnedXi t = sample_xi_thinned(alpha, 64, g);
    REQUIRE(t.partition.atoms.size() == 64);
    REQUIRE(t.partition.order == AtomOrder::construction);
    REQUIRE(t.partition.atoms[0] == t.a_frac);
    REQUIRE(t.gamma_total > 0.0);
    REQUIRE(t.b_over_gamma > 0.0);
    REQUIRE_NOTHROW(validate_unit(t.partition, 1e-9));

    auto afrac = testsup::draw(20000, 32, [&](RngStream& gg) {
        return sample_xi_thinned(alpha, 600, gg).a_frac;
    });
    auto r1 = ks_one_sample(
        std::move(afrac), [&](double x) { return reg_inc_beta(1.0 - alpha, alpha, x); }, 1e-4,
        "xi-a-frac", "");
    INFO("a_frac p=" << r1.p_value);
    REQUIRE(r1.passed);

    auto total = testsup::draw(20000, 33, [&](RngStream& gg) {
        return sample_xi_thinned(alpha, 600, gg).gamma_total;
    });
    auto r2 = ks_one_sample(std::move(total), testsup::exp1_cdf, 1e-4, "xi-total", "");
    INFO("gamma_total p=" << r2.p_value);
    REQUIRE(r2.passed);

    RngStream g4 = make_stream(31, 1);
    REQUIRE_THROWS_MATCHES(sample_xi_thinned(alpha, 1, g4), std::invalid_argument,
                           Catch::Matchers::MessageMatches(ContainsSubstring("n_points >= 2")));
}

TEST_CASE("interval-gap partition: exact unit total and first-length law", "[repr]") {
    const double a = 2.5;
    RngStream g = make_stream(34, 0);
    const MassPartition p = sample_dickman_partition(a, 5, g);
    REQUIRE(p.atoms.size() == 5);
    REQUIRE_NOTHROW(validate_unit(p, 1e-12));
    REQUIRE(p.order == AtomOrder::construction);

    auto first = testsup::draw(30000, 35, [&](RngStream& gg) {
        return sample_dickman_partition(a, 1, gg).atoms[0];
    });
    // first gap is 1 - exp(-E/a): mean 1/(1+a), variance a/(a+2) - (a/(a+1))^2
    const double m = 1.0 / (1.0 + a);
    const double v = a / (a + 2.0) - std::pow(a / (a + 1.0), 2.0);
    auto r = moment_check(first, m, std::sqrt(v), "dickman-first");
    INFO("z=" << r.z);
    REQUIRE(r.passed);

    auto gaps = testsup::draw(20000, 36, [&](RngStream& gg) {
        return sample_dickman_partition(1.0, 2, gg).atoms[1];
    });
    auto expw = testsup::draw(20000, 37, [&](RngStream& gg) {
        return sample_pd0_exp_weights(1.0, 2, gg).partition.atoms[1];
    });
    auto r2 = ks_two_sample(std::move(gaps), std::move(expw), 1e-4, "dickman-vs-pd0", "");
    INFO("identity p=" << r2.p_value);
    REQUIRE(r2.passed);
}

TEST_CASE("randomized-level representation matches the stick reference", "[repr]") {
    const PdParams pd{0.5, 0.5};
    auto mixed = testsup::draw(20000, 38, [&](RngStream& g) {
        MassPartition p = sample_pd_theta_mixed_poisson(pd, 800, g);
        return p.atoms[size_biased_pick(p, g)];
    });
    auto stick = testsup::draw(20000, 39, [&](RngStream& g) {
        return sample_ram_stick(pd_to_ram(pd), 1, g).atoms[0];
    });
    auto r = ks_two_sample(std::move(mixed), std::move(stick), 1e-4, "mixed-vs-stick", "");
    INFO("p=" << r.p_value);
    REQUIRE(r.passed);

    RngStream g = make_stream(40, 0);
    const MassPartition p = sample_pd_theta_mixed_poisson(pd, 50, g);
    REQUIRE(p.order == AtomOrder::construction);
    REQUIRE_NOTHROW(validate_unit(p, 1e-9));
}

TEST_CASE("small-alpha limit approaches the theta-only law", "[repr]") {
    auto lim = testsup::draw(20000, 41, [](RngStream& g) {
        MassPartition p = sample_pd0_limit_of_mvee(1.0, 0.01, 2000, g);
        return p.atoms[size_biased_pick(p, g)];
    });
    auto ref = testsup::draw(20000, 42, [](RngStream& g) {
        return sample_ram_stick(RamParams{0.0, 1.0, 1.0}, 1, g).atoms[0];
    });
    const double d = ks_two_sample(std::move(lim), std::move(ref), 0.5, "", "").statistic;
    INFO("D=" << d);
    REQUIRE(d < 0.02);

    RngStream g = make_stream(43, 0);
    REQUIRE_THROWS_MATCHES(sample_pd0_limit_of_mvee(1.0, 0.2, 100, g), std::invalid_argument,
                           Catch::Matchers::MessageMatches(ContainsSubstring("alpha_small")));
}
