#pragma once

// Constructive samplers for the two-parameter stick-breaking family and its
// relatives. The family RAM(alpha, a1, c) is the law of the size-biased
// weights V_1 = Y_1, V_n = Y_n prod_{j<n}(1 - Y_j) with independent
// Y_n ~ beta(c, a_n), a_n = a1 + (n-1) alpha. Its Poisson-Dirichlet special
// case is PD(alpha, theta) = RAM(alpha, alpha + theta, 1 - alpha).
//
// Every sampler below realises the same laws through a different
// construction (gamma perpetuities, subordinator points, thinned Poisson
// processes, exponential gaps); agreement between them is what the test
// suite certifies. Samplers are exact unless the doc comment says
// "approximate"; approximate ones carry an explicit residual estimate.

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "masspart/partition.hpp"
#include "masspart/randkit.hpp"
#include "masspart/util.hpp"

namespace masspart {

struct RamParams {
    double alpha; // >= 0 (values >= 1 are legal here, unlike the PD case)
    double a1;    // > 0
    double c;     // > 0

    double a(std::size_t n) const { return a1 + static_cast<double>(n - 1) * alpha; }
    double b() const { return c + alpha; } // second shape of every stick factor

    void validate() const {
        if (!(alpha >= 0.0) || !(a1 > 0.0) || !(c > 0.0) || !std::isfinite(alpha) ||
            !std::isfinite(a1) || !std::isfinite(c))
            throw std::invalid_argument(
                "RamParams: invalid-parameter (need alpha >= 0, a1 > 0, c > 0)");
    }
};

struct PdParams {
    double alpha; // in [0, 1)
    double theta; // > -alpha

    void validate() const {
        if (!(alpha >= 0.0) || !(alpha < 1.0) || !(theta > -alpha) ||
            !std::isfinite(alpha) || !std::isfinite(theta))
            throw std::invalid_argument(
                "PdParams: invalid-parameter (need alpha in [0,1), theta > -alpha)");
    }
};

inline RamParams pd_to_ram(const PdParams& pd) {
    pd.validate();
    return RamParams{pd.alpha, pd.alpha + pd.theta, 1.0 - pd.alpha};
}

// The shape-pair sequences (a_j, b_j) = (a1 + (j-1) alpha, c + alpha) that
// feed the stick-sequence checker; for alpha > 0 the fitted log-log slope of
// pi_j a_j should approach 1 - (alpha + c)/alpha.
inline std::pair<std::vector<double>, std::vector<double>> assumption_sequences(
    const RamParams& ram, std::size_t n) {
    ram.validate();
    if (n == 0) throw std::invalid_argument("assumption_sequences: invalid-parameter (n >= 1)");
    std::vector<double> a(n), b(n, ram.b());
    for (std::size_t j = 0; j < n; ++j) a[j] = ram.a(j + 1);
    return {std::move(a), std::move(b)};
}

// Shape of the closure variable W that stands in for the entire unrealized
// tail of a gamma perpetuity after k stored terms: the tail equals
// Pi_k * W with W ~ gamma(a_k, 1), a_k = a1 + (k-1) alpha, independent of
// everything stored. The index is the classic off-by-one trap (a_k, not
// a_{k+1}); it is pinned by the brute-force tail test in the suite, which
// also rejects the a_{k+1} alternative outright.
inline double tail_closure_shape(const RamParams& ram, std::size_t k) {
    if (k == 0) throw std::invalid_argument("tail_closure_shape: invalid-parameter (k >= 1)");
    return ram.a(k);
}

// A partition together with the unnormalized series total that produced it
// (for exact closures the total has a known gamma law worth testing).
struct PerpetuitySample {
    MassPartition partition;
    double denominator = std::numeric_limits<double>::quiet_NaN();
};

namespace detail {

// Shared finishing step: log-scale terms -> normalized partition. Works via
// logsumexp so deep prefixes cannot underflow, and also reports the true
// (unshifted) series total.
inline PerpetuitySample finish_log_terms(std::vector<double>& log_terms, double log_tail,
                                         AtomOrder order) {
    double m = log_tail;
    for (double lt : log_terms) m = std::max(m, lt);
    if (!std::isfinite(m))
        throw std::runtime_error("perpetuity: non-finite-input (degenerate terms)");
    KahanAccumulator acc;
    for (double lt : log_terms) acc.add(std::exp(lt - m));
    const double tail_shifted =
        std::isfinite(log_tail) ? std::exp(log_tail - m) : 0.0;
    const double denom_shifted = acc.value() + tail_shifted;
    PerpetuitySample out;
    out.partition.atoms.reserve(log_terms.size());
    for (double lt : log_terms) out.partition.atoms.push_back(std::exp(lt - m) / denom_shifted);
    out.partition.residual = tail_shifted / denom_shifted;
    out.partition.order = order;
    out.denominator = std::exp(m) * denom_shifted;
    return out;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Stick-breaking (the defining construction)
// ---------------------------------------------------------------------------

// Exact size-biased prefix V_1..V_k of RAM(alpha, a1, c); the residual
// prod_{j<=k}(1 - Y_j) is the exact unallocated mass.
inline MassPartition sample_ram_stick(const RamParams& ram, std::size_t k, RngStream& g) {
    ram.validate();
    if (k == 0) throw std::invalid_argument("sample_ram_stick: invalid-parameter (k >= 1)");
    MassPartition p;
    p.atoms.reserve(k);
    double prod = 1.0;
    for (std::size_t n = 1; n <= k; ++n) {
        const double y = sample_beta(g, ram.c, ram.a(n));
        p.atoms.push_back(y * prod);
        prod *= (1.0 - y);
    }
    p.residual = prod;
    p.order = AtomOrder::size_biased;
    return p;
}

// ---------------------------------------------------------------------------
// Gamma perpetuities with exact tail closure
// ---------------------------------------------------------------------------

// Terms x_j = G_j * Pi_j with G_j ~ gamma(c, 1), Pi_j = prod_{l<j} U_l,
// U_l ~ beta(a_l, c + alpha). With tail_closure the series beyond k is
// replaced by its exact law Pi_k * W, W ~ gamma(a_k, 1), so the k stored
// atoms and the residual are jointly an exact RAM(alpha, a1, c) prefix and
// the denominator is gamma(c + a1, 1). Without closure the finite
// normalization is biased (documented; useful only for diagnostics).
inline PerpetuitySample sample_ram_perpetuity(const RamParams& ram, std::size_t k, RngStream& g,
                                              bool tail_closure = true) {
    ram.validate();
    if (k == 0) throw std::invalid_argument("sample_ram_perpetuity: invalid-parameter (k >= 1)");
    std::vector<double> log_terms(k);
    double log_pi = 0.0;
    for (std::size_t j = 1; j <= k; ++j) {
        const double gj = sample_gamma(g, ram.c, 1.0);
        log_terms[j - 1] = std::log(gj) + log_pi;
        if (j < k) log_pi += std::log(sample_beta(g, ram.a(j), ram.c + ram.alpha));
    }
    double log_tail = -std::numeric_limits<double>::infinity();
    if (tail_closure) {
        const double w = sample_gamma(g, tail_closure_shape(ram, k), 1.0);
        log_tail = std::log(w) + log_pi;
    }
    return detail::finish_log_terms(log_terms, log_tail, AtomOrder::size_biased);
}

// PD(alpha, theta) for alpha in (0, 1) from ratios of gamma sums:
// x_n = G_n * S_n^(-1/alpha) with S_n = D'_1 + D_2 + ... + D_n,
// D'_1 ~ gamma(theta/alpha + 1, 1), D_i ~ Exp(1), G_n ~ gamma(1 - alpha, 1).
// The implied stick factors U_l = (S_l / S_{l+1})^(1/alpha) ~ beta(theta +
// l*alpha, 1), so the exact closure after k terms is S_k^(-1/alpha) * W with
// W ~ gamma(theta + k*alpha, 1).
inline PerpetuitySample sample_pd_theta_biased(const PdParams& pd, std::size_t k, RngStream& g) {
    pd.validate();
    if (!(pd.alpha > 0.0))
        throw std::invalid_argument("sample_pd_theta_biased: invalid-parameter (alpha in (0,1))");
    if (k == 0) throw std::invalid_argument("sample_pd_theta_biased: invalid-parameter (k >= 1)");
    const double inv_alpha = 1.0 / pd.alpha;
    std::vector<double> log_terms(k);
    double s = sample_gamma(g, pd.theta / pd.alpha + 1.0, 1.0);
    for (std::size_t j = 1; j <= k; ++j) {
        if (j > 1) s += g.exponential();
        const double gj = sample_gamma(g, 1.0 - pd.alpha, 1.0);
        log_terms[j - 1] = std::log(gj) - inv_alpha * std::log(s);
    }
    const double w = sample_gamma(g, pd.theta + static_cast<double>(k) * pd.alpha, 1.0);
    const double log_tail = std::log(w) - inv_alpha * std::log(s);
    return detail::finish_log_terms(log_terms, log_tail, AtomOrder::size_biased);
}

// PD(0, theta) from exponentially damped weights: x_n = G_n e^(-Gam_n/theta)
// with G_n ~ Exp(1) and Gam_n a unit-rate gamma walk, i.e. stick factors
// U_n = e^(-D_{n+1}/theta) ~ beta(theta, 1). Exact closure W ~ gamma(theta, 1)
// (a_n = theta is constant at alpha = 0); the denominator is gamma(1+theta, 1).
inline PerpetuitySample sample_pd0_exp_weights(double theta, std::size_t k, RngStream& g) {
    if (!(theta > 0.0) || !std::isfinite(theta))
        throw std::invalid_argument("sample_pd0_exp_weights: invalid-parameter (theta > 0)");
    if (k == 0) throw std::invalid_argument("sample_pd0_exp_weights: invalid-parameter (k >= 1)");
    std::vector<double> log_terms(k);
    double log_pi = 0.0;
    for (std::size_t j = 1; j <= k; ++j) {
        log_terms[j - 1] = std::log(g.exponential()) + log_pi;
        if (j < k) log_pi -= g.exponential() / theta;
    }
    const double w = sample_gamma(g, theta, 1.0);
    return detail::finish_log_terms(log_terms, std::log(w) + log_pi, AtomOrder::size_biased);
}

// RAM(0, a, c) from biased exponential gaps: draws D~_i = -a log B_i with
// B_i ~ beta(a, c) and returns the normalization of G_n e^(-(D~_1+..+D~_n)/a),
// G_n ~ gamma(c, 1). Exact closure: the tail beyond k equals
// e^(-(D~_1+..+D~_k)/a) * W with W ~ gamma(a, 1).
inline PerpetuitySample sample_ram0_biased_exp(double a, double c, std::size_t k, RngStream& g) {
    if (!(a > 0.0) || !(c > 0.0) || !std::isfinite(a) || !std::isfinite(c))
        throw std::invalid_argument("sample_ram0_biased_exp: invalid-parameter (a, c > 0)");
    if (k == 0) throw std::invalid_argument("sample_ram0_biased_exp: invalid-parameter (k >= 1)");
    std::vector<double> log_terms(k);
    double dsum = 0.0;
    for (std::size_t j = 1; j <= k; ++j) {
        const double dt = -a * std::log(sample_beta(g, a, c)); // biased gap D~_j
        dsum += dt;
        const double gj = sample_gamma(g, c, 1.0);
        log_terms[j - 1] = std::log(gj) - dsum / a;
    }
    const double w = sample_gamma(g, a, 1.0);
    return detail::finish_log_terms(log_terms, std::log(w) - dsum / a, AtomOrder::size_biased);
}

// ---------------------------------------------------------------------------
// Subordinator points and thinned Poisson constructions
// ---------------------------------------------------------------------------

// PD(alpha, 0) ranked atoms from stable-subordinator points Gam_j^(-1/alpha)
// (Gam_j a unit-rate Poisson walk). Approximate: the n_points stored sizes
// are exact, the infinite remainder is replaced by its mean
// integral_{Gam_n}^inf t^(-1/alpha) dt = Gam_n^(1-1/alpha) * alpha/(1-alpha),
// carried as the residual.
inline MassPartition sample_pd_stable_points(const PdParams& pd, std::size_t n_points,
                                             RngStream& g) {
    pd.validate();
    if (!(pd.alpha > 0.0))
        throw std::invalid_argument("sample_pd_stable_points: invalid-parameter (alpha in (0,1))");
    if (pd.theta != 0.0)
        throw std::invalid_argument(
            "sample_pd_stable_points: invalid-parameter (stable points realise theta = 0)");
    if (n_points < 2)
        throw std::invalid_argument("sample_pd_stable_points: invalid-parameter (n_points >= 2)");
    const double inv_alpha = 1.0 / pd.alpha;
    std::vector<double> log_sizes(n_points);
    double gam = 0.0;
    for (std::size_t j = 0; j < n_points; ++j) {
        gam += g.exponential();
        log_sizes[j] = -inv_alpha * std::log(gam);
    }
    const double log_tail =
        (1.0 - inv_alpha) * std::log(gam) + std::log(pd.alpha / (1.0 - pd.alpha));
    auto sample = detail::finish_log_terms(log_sizes, log_tail, AtomOrder::nonincreasing);
    return sample.partition;
}

// Mean of the unrealized mass of M_s beyond a point with cumulative exponent
// gamma_n: points after gamma_n form a fresh unit-rate Poisson walk, so
// E[ sum_{i>n} G_i (s/(s+Gam_i))^(1/alpha) | Gam_n ]
//   = (1-alpha) * integral_0^inf (s/(s+gamma_n+t))^(1/alpha) dt
//   = alpha * s^(1/alpha) * (s+gamma_n)^((alpha-1)/alpha).
// This is the exact conditional mean, not a bound; it is what makes modest
// truncation depths statistically invisible.
inline double mvee_mean_tail(double alpha, double s, double gamma_n) {
    return alpha * std::exp(std::log(s) / alpha +
                            ((alpha - 1.0) / alpha) * std::log(s + gamma_n));
}

// The "completed-excursion" point process at level s > 0: atoms
// G_i * (s/(s+Gam_i))^(1/alpha) with G_i ~ gamma(1-alpha, 1) and Gam_i a
// unit-rate Poisson walk, truncated at n_points (cutoff records Gam_n).
inline MarkedPointSet sample_mvee(double alpha, double s, std::size_t n_points, RngStream& g) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw std::invalid_argument("sample_mvee: invalid-parameter (alpha in (0,1))");
    if (!(s > 0.0) || !std::isfinite(s))
        throw std::invalid_argument("sample_mvee: invalid-parameter (s > 0)");
    if (n_points == 0) throw std::invalid_argument("sample_mvee: invalid-parameter (n_points >= 1)");
    const double inv_alpha = 1.0 / alpha;
    const double log_s = std::log(s);
    MarkedPointSet mps;
    mps.sizes.resize(n_points);
    double gam = 0.0;
    for (std::size_t i = 0; i < n_points; ++i) {
        gam += g.exponential();
        const double gi = sample_gamma(g, 1.0 - alpha, 1.0);
        mps.sizes[i] = gi * std::exp(inv_alpha * (log_s - std::log(s + gam)));
    }
    mps.cutoff = gam;
    mps.truncation_level =
        "poisson walk cut at gamma_n=" + std::to_string(gam) + " after " +
        std::to_string(n_points) + " points";
    return mps;
}

// Intensity tail of the completed-excursion measure:
// nu(u, inf) = u^(-alpha) e^(-u) / Gamma(1-alpha) - Q(1-alpha, u), the
// partial-integration identity for integral_u^inf alpha/Gamma(1-alpha)
// x^(-alpha-1) e^(-x) dx.
inline double nu_vee_tail(double alpha, double u) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw std::invalid_argument("nu_vee_tail: invalid-parameter (alpha in (0,1))");
    if (!(u > 0.0) || !std::isfinite(u))
        throw std::invalid_argument("nu_vee_tail: domain (u > 0)");
    const double head = std::exp(-alpha * std::log(u) - u - std::lgamma(1.0 - alpha));
    const double q = reg_inc_gamma_upper(1.0 - alpha, u);
    const double v = head - q;
    return v < 0.0 ? 0.0 : v;
}

// One draw of the thinned decomposition at the first "long excursion" time:
//   gamma_total = A + sum of completed jumps (+ mean tail)   ~ Exp(1),
//   a_frac     = A / gamma_total, the straddling fraction    ~ beta(1-a, a),
//   b_over_gamma = A (U^(-1/alpha) - 1) / gamma_total, the overshoot part.
// The partition lists the straddling atom first, then the completed jumps,
// in construction order; the residual is the mean of the unstored jump mass.
struct ThinnedXi {
    MassPartition partition;
    double a_frac = 0.0;
    double b_over_gamma = 0.0;
    double gamma_total = 0.0;
};

inline ThinnedXi sample_xi_thinned(double alpha, std::size_t n_points, RngStream& g) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw std::invalid_argument("sample_xi_thinned: invalid-parameter (alpha in (0,1))");
    if (n_points < 2)
        throw std::invalid_argument("sample_xi_thinned: invalid-parameter (n_points >= 2)");
    const double t = g.exponential();            // first long-excursion time
    const double a_part = sample_gamma(g, 1.0 - alpha, 1.0); // straddling piece
    const double u = g.uniform_open();
    // n_points counts the partition's atoms: the straddling one plus
    // n_points - 1 completed jumps.
    MarkedPointSet jumps = sample_mvee(alpha, t, n_points - 1, g);
    KahanAccumulator acc;
    for (double s : jumps.sizes) acc.add(s);
    const double tail = mvee_mean_tail(alpha, t, jumps.cutoff);
    const double gamma_total = a_part + acc.value() + tail;

    ThinnedXi out;
    out.gamma_total = gamma_total;
    out.a_frac = a_part / gamma_total;
    out.b_over_gamma = a_part * std::expm1(-std::log(u) / alpha) / gamma_total;
    out.partition.atoms.reserve(1 + jumps.sizes.size());
    out.partition.atoms.push_back(a_part / gamma_total);
    for (double s : jumps.sizes) out.partition.atoms.push_back(s / gamma_total);
    out.partition.residual = tail / gamma_total;
    out.partition.order = AtomOrder::construction;
    return out;
}

// PD(0, a) as consecutive gaps of e^(-Gam_n/a): atoms
// e^(-Gam_{n-1}/a) - e^(-Gam_n/a); exact, construction order, residual
// e^(-Gam_k/a) exactly.
inline MassPartition sample_dickman_partition(double a, std::size_t k, RngStream& g) {
    if (!(a > 0.0) || !std::isfinite(a))
        throw std::invalid_argument("sample_dickman_partition: invalid-parameter (a > 0)");
    if (k == 0) throw std::invalid_argument("sample_dickman_partition: invalid-parameter (k >= 1)");
    MassPartition p;
    p.atoms.reserve(k);
    double prev = 1.0; // e^(-Gam_0 / a)
    for (std::size_t n = 1; n <= k; ++n) {
        const double gap = -std::expm1(-g.exponential() / a); // 1 - e^(-D_n/a)
        p.atoms.push_back(prev * gap);
        prev *= 1.0 - gap;
    }
    p.residual = prev;
    p.order = AtomOrder::construction;
    return p;
}

// PD(alpha, theta), theta > 0, as a mixed level: normalize the completed
// jumps at the random level D~ ~ gamma(theta/alpha, 1). Approximate with the
// mean-tail residual estimate, construction order.
inline MassPartition sample_pd_theta_mixed_poisson(const PdParams& pd, std::size_t n_points,
                                                   RngStream& g) {
    pd.validate();
    if (!(pd.alpha > 0.0) || !(pd.theta > 0.0))
        throw std::invalid_argument(
            "sample_pd_theta_mixed_poisson: invalid-parameter (alpha in (0,1), theta > 0)");
    if (n_points == 0)
        throw std::invalid_argument("sample_pd_theta_mixed_poisson: invalid-parameter (n_points >= 1)");
    const double level = sample_gamma(g, pd.theta / pd.alpha, 1.0);
    MarkedPointSet jumps = sample_mvee(pd.alpha, level, n_points, g);
    KahanAccumulator acc;
    for (double s : jumps.sizes) acc.add(s);
    const double tail = mvee_mean_tail(pd.alpha, level, jumps.cutoff);
    const double denom = acc.value() + tail;
    MassPartition p;
    p.atoms.reserve(jumps.sizes.size());
    for (double s : jumps.sizes) p.atoms.push_back(s / denom);
    p.residual = tail / denom;
    p.order = AtomOrder::construction;
    return p;
}

// Small-alpha limit artifact: the same construction at the deterministic
// level s = theta/alpha converges to PD(0, theta) as alpha -> 0. Restricted
// to 0 < alpha <= 0.05 because that is the regime where the limit is the
// point; approximate, construction order.
inline MassPartition sample_pd0_limit_of_mvee(double theta, double alpha_small,
                                              std::size_t n_points, RngStream& g) {
    if (!(alpha_small > 0.0) || !(alpha_small <= 0.05))
        throw std::invalid_argument(
            "sample_pd0_limit_of_mvee: invalid-parameter (alpha_small in (0, 0.05])");
    if (!(theta > 0.0) || !std::isfinite(theta))
        throw std::invalid_argument("sample_pd0_limit_of_mvee: invalid-parameter (theta > 0)");
    if (n_points == 0)
        throw std::invalid_argument("sample_pd0_limit_of_mvee: invalid-parameter (n_points >= 1)");
    const double level = theta / alpha_small;
    MarkedPointSet jumps = sample_mvee(alpha_small, level, n_points, g);
    KahanAccumulator acc;
    for (double s : jumps.sizes) acc.add(s);
    const double tail = mvee_mean_tail(alpha_small, level, jumps.cutoff);
    const double denom = acc.value() + tail;
    MassPartition p;
    p.atoms.reserve(jumps.sizes.size());
    for (double s : jumps.sizes) p.atoms.push_back(s / denom);
    p.residual = tail / denom;
    p.order = AtomOrder::construction;
    return p;
}

} // namespace masspart
