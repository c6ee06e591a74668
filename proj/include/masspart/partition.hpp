#pragma once

// Mass partitions and marked point sets: the common currency of every
// sampler in this library. A MassPartition is a finite prefix of a ranked or
// size-biased sequence of atom weights plus the residual mass beyond the
// prefix; exact samplers produce residuals with known law, truncated ones
// carry a documented estimate. atoms are strictly positive and
// sum(atoms) + residual = 1 within 1e-9 for every sampler output (scaled
// sub-partitions, e.g. an excursion partition conditioned to a fraction of
// the time axis, state their total explicitly via total()).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "masspart/randkit.hpp"
#include "masspart/util.hpp"

namespace masspart {

enum class AtomOrder { construction, size_biased, nonincreasing };

inline const char* to_string(AtomOrder o) {
    switch (o) {
        case AtomOrder::construction: return "construction";
        case AtomOrder::size_biased: return "size_biased";
        case AtomOrder::nonincreasing: return "nonincreasing";
    }
    return "construction";
}

inline AtomOrder atom_order_from_string(const std::string& s) {
    if (s == "construction") return AtomOrder::construction;
    if (s == "size_biased") return AtomOrder::size_biased;
    if (s == "nonincreasing") return AtomOrder::nonincreasing;
    throw std::invalid_argument("atom_order_from_string: unknown order tag '" + s + "'");
}

struct MassPartition {
    std::vector<double> atoms;
    double residual = 0.0;
    AtomOrder order = AtomOrder::construction;

    double total() const { return neumaier_sum(atoms) + residual; }
};

// Checks the unit-mass contract shared by all sampler outputs.
inline void validate_unit(const MassPartition& p, double tol = 1e-9) {
    if (p.atoms.empty()) throw std::invalid_argument("mass partition: empty-input");
    for (double a : p.atoms)
        if (!(a > 0.0) || !std::isfinite(a))
            throw std::invalid_argument("mass partition: non-finite-input (atoms must be positive)");
    if (!(p.residual >= 0.0) || !std::isfinite(p.residual))
        throw std::invalid_argument("mass partition: non-finite-input (residual must be >= 0)");
    if (std::abs(p.total() - 1.0) > tol)
        throw std::invalid_argument("mass partition: total out of tolerance");
}

// A realisation of a point process carrying sizes (and optionally times);
// truncation_level documents where the realisation was cut.
struct MarkedPointSet {
    std::vector<double> sizes;
    std::vector<double> times; // empty for size-only point sets
    double cutoff = std::numeric_limits<double>::quiet_NaN();
    std::string truncation_level;
};

// Normalizes sizes into a construction-ordered partition with zero residual.
inline MassPartition normalize(const MarkedPointSet& mps) {
    if (mps.sizes.empty()) throw std::invalid_argument("normalize: empty-input");
    for (double s : mps.sizes)
        if (!std::isfinite(s) || !(s > 0.0))
            throw std::invalid_argument("normalize: non-finite-input (sizes must be positive and finite)");
    const double total = neumaier_sum(mps.sizes);
    MassPartition p;
    p.atoms.reserve(mps.sizes.size());
    for (double s : mps.sizes) p.atoms.push_back(s / total);
    p.residual = 0.0;
    p.order = AtomOrder::construction;
    return p;
}

inline MassPartition sort_nonincreasing(const MassPartition& p) {
    MassPartition out = p;
    std::sort(out.atoms.begin(), out.atoms.end(), std::greater<double>());
    out.order = AtomOrder::nonincreasing;
    return out;
}

// Drops the residual and rescales the stored atoms to unit mass. This is
// explicit, caller-opted conditioning on the stored prefix: the result is
// exact only when the residual was already negligible, and comparisons made
// through it inherit an O(residual) truncation bias.
inline MassPartition renormalized_prefix(const MassPartition& p) {
    if (p.atoms.empty()) throw std::invalid_argument("renormalized_prefix: empty-input");
    const double mass = neumaier_sum(p.atoms);
    if (!(mass > 0.0)) throw std::invalid_argument("renormalized_prefix: non-finite-input");
    MassPartition out;
    out.atoms.reserve(p.atoms.size());
    for (double a : p.atoms) out.atoms.push_back(a / mass);
    out.residual = 0.0;
    out.order = p.order;
    return out;
}

// One size-biased pick among the stored atoms (probability proportional to
// weight). For residual > 0 this is the pick conditioned on landing in the
// stored prefix; the strict whole-partition contract lives in
// size_biased_permutation below.
inline std::size_t size_biased_pick(const MassPartition& p, RngStream& g) {
    if (p.atoms.empty()) throw std::invalid_argument("size_biased_pick: empty-input");
    const double mass = neumaier_sum(p.atoms);
    const double u = g.uniform01() * mass;
    double cum = 0.0;
    for (std::size_t i = 0; i + 1 < p.atoms.size(); ++i) {
        cum += p.atoms[i];
        if (u < cum) return i;
    }
    return p.atoms.size() - 1;
}

// Full size-biased permutation by cumulative-sum inversion with a shrinking
// total (O(k^2), fine at k <= 1e4). Refuses partitions that are materially
// truncated: a size-biased reshuffle of a prefix is not a size-biased
// permutation of the underlying partition.
inline MassPartition size_biased_permutation(const MassPartition& p, RngStream& g) {
    if (p.atoms.empty()) throw std::invalid_argument("size_biased_permutation: empty-input");
    if (!(p.residual < 1e-9))
        throw std::invalid_argument("size_biased_permutation: residual-too-large "
                                    "(need residual < 1e-9; see renormalized_prefix)");
    std::vector<double> pool = p.atoms;
    MassPartition out;
    out.atoms.reserve(pool.size());
    double total = neumaier_sum(pool);
    while (!pool.empty()) {
        const double u = g.uniform01() * total;
        double cum = 0.0;
        std::size_t pick = pool.size() - 1;
        for (std::size_t i = 0; i + 1 < pool.size(); ++i) {
            cum += pool[i];
            if (u < cum) {
                pick = i;
                break;
            }
        }
        const double chosen = pool[pick];
        out.atoms.push_back(chosen);
        total -= chosen;
        pool[pick] = pool.back(); // swap-remove keeps the multiset bitwise intact
        pool.pop_back();
        if (total < 0.0) total = 0.0;
    }
    out.residual = p.residual;
    out.order = AtomOrder::size_biased;
    return out;
}

} // namespace masspart
