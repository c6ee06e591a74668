#pragma once

// Excursion-decomposition laws at an independent exponential time: the
// straddling excursion's age/overshoot/length, the zeros bracketing the
// time, the interval partition left behind, and the marked occupation
// fraction. Two routes are provided — a constructive one that assembles the
// quantities from subordinator pieces, and a closed-form one that draws the
// known joint law directly — so each can certify the other.

#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "masspart/partition.hpp"
#include "masspart/randkit.hpp"
#include "masspart/repr.hpp"

namespace masspart {

// Quantities attached to the excursion straddling an independent Exp(1)
// time e: l is the local time spent at zero, a the age (time since the last
// zero g), b the remaining overshoot, d the next zero, delta = a + b the
// straddling length. Identities e = g + a, d = g + delta, delta = a + b
// hold exactly; marginally e, l ~ Exp(1), a ~ gamma(1-alpha, 1),
// g ~ gamma(alpha, 1), and delta has the tilted-stable density
// (alpha/Gamma(1-alpha)) x^(-1-alpha) (1 - e^(-x)).
struct ExcursionSeptuple {
    double e = 0, l = 0, b = 0, a = 0, g = 0, d = 0, delta = 0;
};

// Constructive route: l ~ Exp(1) is the inverse-local-time level; the zeros
// before e come from the completed excursions, i.e. g is the truncated
// completed-jump sum at level l plus its exact conditional mean tail
// (approximate in that one coordinate only); a ~ gamma(1-alpha, 1) is the
// straddling piece and the overshoot factor is an independent Pareto
// U^(-1/alpha).
inline ExcursionSeptuple sample_septuple_constructive(double alpha, std::size_t n_points,
                                                      RngStream& rng) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw std::invalid_argument(
            "sample_septuple_constructive: invalid-parameter (alpha in (0,1))");
    if (n_points == 0)
        throw std::invalid_argument(
            "sample_septuple_constructive: invalid-parameter (n_points >= 1)");
    ExcursionSeptuple s;
    s.l = rng.exponential();
    s.a = sample_gamma(rng, 1.0 - alpha, 1.0);
    const double u = rng.uniform_open();
    MarkedPointSet jumps = sample_mvee(alpha, s.l, n_points, rng);
    KahanAccumulator acc;
    for (double x : jumps.sizes) acc.add(x);
    s.g = acc.value() + mvee_mean_tail(alpha, s.l, jumps.cutoff);
    const double pareto = std::exp(-std::log(u) / alpha); // U^(-1/alpha) >= 1
    s.b = s.a * (pareto - 1.0);
    s.delta = s.a * pareto;
    s.e = s.g + s.a;
    s.d = s.g + s.delta;
    return s;
}

// eta': the interval partition of [0, g] by the completed excursions,
// rescaled to a unit stick. It is the size-biased stick with factors
// beta(1-alpha, (n+1) alpha), i.e. RAM(alpha, 2 alpha, 1 - alpha).
inline MassPartition sample_eta_prime(double alpha, std::size_t k, RngStream& rng) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw std::invalid_argument("sample_eta_prime: invalid-parameter (alpha in (0,1))");
    return sample_ram_stick(RamParams{alpha, 2.0 * alpha, 1.0 - alpha}, k, rng);
}

// The same septuple normalized by e (so the time is 1): only five free
// scalars remain, plus the partition of the pre-g interval. Drawn from the
// closed joint law: Q = g/e ~ beta(alpha, 1-alpha), the overshoot factor is
// an independent Pareto, and the partition is Q times an independent eta'.
// The partition is a sub-partition: its atoms and residual sum to
// g_frac = Q, and partition total + a_frac = 1 (use that identity, not
// validate_unit, on this field).
struct ExcursionSextuple {
    double a_frac = 0, b_frac = 0, g_frac = 0, d_frac = 0, delta_frac = 0;
    MassPartition partition;
};

inline ExcursionSextuple sample_sextuple_closed(double alpha, std::size_t k_atoms,
                                                RngStream& rng) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw std::invalid_argument("sample_sextuple_closed: invalid-parameter (alpha in (0,1))");
    if (k_atoms == 0)
        throw std::invalid_argument("sample_sextuple_closed: invalid-parameter (k_atoms >= 1)");
    ExcursionSextuple s;
    const double q = sample_beta(rng, alpha, 1.0 - alpha);
    const double u = rng.uniform_open();
    const double pareto = std::exp(-std::log(u) / alpha);
    s.g_frac = q;
    s.a_frac = 1.0 - q;
    s.b_frac = (1.0 - q) * (pareto - 1.0);
    s.delta_frac = (1.0 - q) * pareto;
    s.d_frac = q + s.delta_frac;
    s.partition = sample_eta_prime(alpha, k_atoms, rng);
    for (double& atom : s.partition.atoms) atom *= q;
    s.partition.residual *= q;
    return s;
}

// Density and CDF of the straddling length delta: a size-biased-tilted
// stable jump, f(x) = (alpha/Gamma(1-alpha)) x^(-1-alpha) (1 - e^(-x)) on
// x > 0. Integrating by parts gives the closed CDF
// F(x) = P(1-alpha, x) - x^(-alpha) (1 - e^(-x)) / Gamma(1-alpha).
inline double bfry_density(double alpha, double x) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw std::invalid_argument("bfry_density: invalid-parameter (alpha in (0,1))");
    if (std::isnan(x)) throw std::invalid_argument("bfry_density: domain");
    if (x <= 0.0) return 0.0;
    return std::exp(std::log(alpha) - std::lgamma(1.0 - alpha) -
                    (1.0 + alpha) * std::log(x)) *
           (-std::expm1(-x));
}

inline double bfry_cdf(double alpha, double x) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw std::invalid_argument("bfry_cdf: invalid-parameter (alpha in (0,1))");
    if (std::isnan(x)) throw std::invalid_argument("bfry_cdf: domain");
    if (x <= 0.0) return 0.0;
    const double p = reg_inc_gamma(1.0 - alpha, x);
    const double correction =
        std::exp(-alpha * std::log(x) - std::lgamma(1.0 - alpha)) * (-std::expm1(-x));
    const double f = p - correction;
    return f < 0.0 ? 0.0 : (f > 1.0 ? 1.0 : f);
}

// Occupation by marked excursions: the straddling excursion and each interval
// excursion get independent fair Bernoulli marks eps in {0, 1}, and the
// occupation fraction is the marked mass (1 - Q) eps_1 + Q sum_j eta'_j
// eps_{j+1}, a value in [0, 1]. At alpha = 1/2 this is the arcsine law. The
// truncation error is bounded by the unassigned residual Q * r'_k, which is
// returned so callers can certify it.
struct OccupationSample {
    double fraction = 0;
    double residual = 0;
};

namespace detail {

inline OccupationSample occupation_core(double alpha, std::size_t k_fixed, double target_residual,
                                        std::size_t k_max, RngStream& rng) {
    const double q = sample_beta(rng, alpha, 1.0 - alpha);
    OccupationSample out;
    if (rng.uniform01() < 0.5) out.fraction += 1.0 - q;
    double rem = q; // unassigned excursion mass Q * r'_j
    std::size_t j = 0;
    while (true) {
        if (k_fixed > 0) {
            if (j >= k_fixed) break;
        } else {
            if (rem < target_residual) break;
            if (j >= k_max)
                throw std::runtime_error(
                    "occupation: truncation target unreachable within k_max atoms");
        }
        ++j;
        const double y =
            sample_beta(rng, 1.0 - alpha, (static_cast<double>(j) + 1.0) * alpha);
        if (rng.uniform01() < 0.5) out.fraction += rem * y;
        rem *= 1.0 - y;
    }
    out.residual = rem;
    return out;
}

} // namespace detail

// Fixed truncation depth: exactly k eta' atoms are marked.
inline OccupationSample sample_occupation_fraction(double alpha, std::size_t k, RngStream& rng) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw std::invalid_argument(
            "sample_occupation_fraction: invalid-parameter (alpha in (0,1))");
    if (k == 0)
        throw std::invalid_argument("sample_occupation_fraction: invalid-parameter (k >= 1)");
    return detail::occupation_core(alpha, k, 0.0, 0, rng);
}

// Grow the stick until the unassigned mass drops below target_residual
// (throws if k_max atoms do not suffice).
inline OccupationSample sample_occupation_fraction_adaptive(double alpha, double target_residual,
                                                            std::size_t k_max, RngStream& rng) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw std::invalid_argument(
            "sample_occupation_fraction_adaptive: invalid-parameter (alpha in (0,1))");
    if (!(target_residual > 0.0) || !std::isfinite(target_residual))
        throw std::invalid_argument(
            "sample_occupation_fraction_adaptive: invalid-parameter (target_residual > 0)");
    if (k_max == 0)
        throw std::invalid_argument(
            "sample_occupation_fraction_adaptive: invalid-parameter (k_max >= 1)");
    return detail::occupation_core(alpha, 0, target_residual, k_max, rng);
}

} // namespace masspart
