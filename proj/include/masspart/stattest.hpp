#pragma once

// Goodness-of-fit and diagnostic machinery used to certify the samplers:
// one- and two-sample Kolmogorov–Smirnov tests with asymptotic p-values,
// a z-score moment check, and a finite-range checker for the growth/decay
// conditions a regime-switching stick sequence must satisfy.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "masspart/randkit.hpp"
#include "masspart/util.hpp"

namespace masspart {

// Result of one KS comparison. For one-sample tests n2 == 0. seed_record is
// an opaque provenance string ("seed=... stream=...") so a failing report
// can be replayed exactly.
struct KsReport {
    std::string test_name;
    double statistic = 0.0;
    std::size_t n1 = 0;
    std::size_t n2 = 0;
    double p_value = 1.0;
    bool passed = false;
    std::string seed_record;
};

namespace detail {

inline void require_significance(double significance) {
    if (!(significance > 0.0) || !(significance < 1.0))
        throw std::invalid_argument("ks: invalid-parameter (significance in (0,1))");
}

} // namespace detail

// D_n = sup_x |F_n(x) - F(x)| against a caller-supplied CDF, evaluated with
// both one-sided gaps at every distinct sample value (ties collapse to one
// jump). p-value is the asymptotic law of sqrt(n) D_n. The CDF is
// spot-checked for monotonicity and range on the sample grid.
template <class Cdf>
KsReport ks_one_sample(std::vector<double> samples, Cdf&& cdf, double significance,
                       std::string test_name = "", std::string seed_record = "") {
    detail::require_significance(significance);
    const std::size_t n = samples.size();
    if (n < 50) throw std::invalid_argument("ks_one_sample: too-few-samples (need n >= 50)");
    std::sort(samples.begin(), samples.end());
    const double dn = static_cast<double>(n);
    double d = 0.0;
    double prev_f = -1e-12;
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && samples[j + 1] == samples[i]) ++j; // run of ties [i, j]
        double f = cdf(samples[i]);
        if (std::isnan(f) || f < -1e-12 || f > 1.0 + 1e-12)
            throw std::invalid_argument("ks_one_sample: non-monotone-cdf (value outside [0,1])");
        if (f < prev_f - 1e-12)
            throw std::invalid_argument("ks_one_sample: non-monotone-cdf");
        prev_f = f;
        f = std::min(1.0, std::max(0.0, f));
        d = std::max(d, f - static_cast<double>(i) / dn);
        d = std::max(d, static_cast<double>(j + 1) / dn - f);
        i = j + 1;
    }
    KsReport r;
    r.test_name = std::move(test_name);
    r.statistic = d;
    r.n1 = n;
    r.n2 = 0;
    r.p_value = kolmogorov_sf(std::sqrt(dn) * d);
    r.passed = r.p_value >= significance;
    r.seed_record = std::move(seed_record);
    return r;
}

// Two-sample KS: D = sup |F_1 - F_2| via a merge scan that steps through
// every tie group in one move; p-value uses the effective size
// n1 n2 / (n1 + n2).
inline KsReport ks_two_sample(std::vector<double> s1, std::vector<double> s2, double significance,
                              std::string test_name = "", std::string seed_record = "") {
    detail::require_significance(significance);
    const std::size_t n1 = s1.size(), n2 = s2.size();
    if (n1 < 50 || n2 < 50)
        throw std::invalid_argument("ks_two_sample: too-few-samples (need n1, n2 >= 50)");
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    const double d1 = static_cast<double>(n1), d2 = static_cast<double>(n2);
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < n1 || j < n2) {
        const double x = (i < n1 && (j >= n2 || s1[i] <= s2[j])) ? s1[i] : s2[j];
        while (i < n1 && s1[i] == x) ++i;
        while (j < n2 && s2[j] == x) ++j;
        d = std::max(d, std::fabs(static_cast<double>(i) / d1 - static_cast<double>(j) / d2));
    }
    KsReport r;
    r.test_name = std::move(test_name);
    r.statistic = d;
    r.n1 = n1;
    r.n2 = n2;
    const double n_eff = d1 * d2 / (d1 + d2);
    r.p_value = kolmogorov_sf(std::sqrt(n_eff) * d);
    r.passed = r.p_value >= significance;
    r.seed_record = std::move(seed_record);
    return r;
}

// Coarse z-score check of a sample mean against a known mean/sd. Deliberate
// wide gate (|z| <= 5): it exists to catch gross construction errors, not to
// replace the KS tests.
struct MomentReport {
    std::string test_name;
    double sample_mean = 0.0;
    double expected_mean = 0.0;
    double expected_sd = 0.0;
    double z = 0.0;
    std::size_t n = 0;
    bool passed = false;
};

inline MomentReport moment_check(const std::vector<double>& samples, double expected_mean,
                                 double expected_sd, std::string test_name = "") {
    if (samples.size() < 100)
        throw std::invalid_argument("moment_check: too-few-samples (need n >= 100)");
    if (!(expected_sd > 0.0) || !std::isfinite(expected_sd))
        throw std::invalid_argument("moment_check: invalid-parameter (expected_sd > 0)");
    MomentReport r;
    r.test_name = std::move(test_name);
    r.n = samples.size();
    r.sample_mean = neumaier_sum(samples) / static_cast<double>(samples.size());
    r.expected_mean = expected_mean;
    r.expected_sd = expected_sd;
    r.z = (r.sample_mean - expected_mean) /
          (expected_sd / std::sqrt(static_cast<double>(samples.size())));
    r.passed = std::fabs(r.z) <= 5.0;
    return r;
}

// Finite-range diagnostics for a stick sequence given by shape pairs
// (a_j, b_j) (stick factor Y_j ~ beta(b_j, a_j), survival mean
// a_j/(a_j+b_j)):
//   (i)  a_j + b_j - a_{j+1} > 0 for every checked j   (exact over range)
//   (ii) partial sum of pi_{j+1} (a_j + b_j - a_{j+1}) (finite snapshot)
//   (iii) the sequence pi_j a_j, with a fitted log-log trend
// where pi_j = prod_{i<j} a_i/(a_i + b_i). Conditions (ii)/(iii) concern
// infinite limits, so only diagnostics are reported — never a convergence
// verdict. pi_a_checkpoints holds geometrically spaced indices j (always
// including 1 and n_checked) with the matching pi_j a_j values.
struct Assumption1Report {
    std::size_t n_checked = 0;
    bool cond_i_ok = false;
    double partial_sum_ii = 0.0;
    std::vector<std::size_t> pi_a_checkpoints;
    std::vector<double> pi_a_iii;
    double trend_exponent = 0.0;
    double trend_residual = 0.0;
};

inline Assumption1Report check_assumption1(const std::vector<double>& a_seq,
                                           const std::vector<double>& b_seq) {
    const std::size_t n = a_seq.size();
    if (n != b_seq.size())
        throw std::invalid_argument("check_assumption1: length-mismatch");
    if (n < 10)
        throw std::invalid_argument("check_assumption1: too-few-samples (need length >= 10)");
    for (std::size_t j = 0; j < n; ++j)
        if (!(a_seq[j] > 0.0) || !(b_seq[j] > 0.0) || !std::isfinite(a_seq[j]) ||
            !std::isfinite(b_seq[j]))
            throw std::invalid_argument("check_assumption1: nonpositive-entry");

    Assumption1Report r;
    r.n_checked = n;
    r.cond_i_ok = true;
    double log_pi = 0.0; // log pi_j, pi_1 = 1
    KahanAccumulator sum_ii;
    std::vector<double> log_j, log_pia;
    log_j.reserve(n);
    log_pia.reserve(n);
    std::size_t next_checkpoint = 1;
    for (std::size_t j = 1; j <= n; ++j) {
        const double a = a_seq[j - 1], b = b_seq[j - 1];
        const double pia = std::exp(log_pi) * a;
        log_j.push_back(std::log(static_cast<double>(j)));
        log_pia.push_back(log_pi + std::log(a));
        if (j == next_checkpoint || j == n) {
            r.pi_a_checkpoints.push_back(j);
            r.pi_a_iii.push_back(pia);
            while (next_checkpoint <= j) next_checkpoint *= 2;
        }
        const double log_pi_next = log_pi + std::log(a) - std::log(a + b);
        if (j < n) {
            const double gap = a + b - a_seq[j];
            if (!(gap > 0.0)) r.cond_i_ok = false;
            sum_ii.add(std::exp(log_pi_next) * gap);
        }
        log_pi = log_pi_next;
    }
    r.partial_sum_ii = sum_ii.value();

    // Least-squares slope of log(pi_j a_j) on log j over the full range.
    const double m = static_cast<double>(n);
    double sx = 0, sy = 0;
    for (std::size_t t = 0; t < n; ++t) { sx += log_j[t]; sy += log_pia[t]; }
    const double mx = sx / m, my = sy / m;
    double sxx = 0, sxy = 0;
    for (std::size_t t = 0; t < n; ++t) {
        sxx += (log_j[t] - mx) * (log_j[t] - mx);
        sxy += (log_j[t] - mx) * (log_pia[t] - my);
    }
    r.trend_exponent = sxx > 0.0 ? sxy / sxx : 0.0;
    double ss = 0;
    for (std::size_t t = 0; t < n; ++t) {
        const double e = log_pia[t] - (my + r.trend_exponent * (log_j[t] - mx));
        ss += e * e;
    }
    r.trend_residual = std::sqrt(ss / m);
    return r;
}

} // namespace masspart
