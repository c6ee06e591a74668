#pragma once

// Serialization: plot-ready CSV for replica matrices (wide format, one
// replica per row, full round-trip precision) and stable-schema JSON for
// partitions and test reports. File-shape errors surface as
// std::runtime_error with an "io-error" prefix so the CLI can map them to
// its I/O exit code.

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "masspart/excursion.hpp"
#include "masspart/partition.hpp"
#include "masspart/stattest.hpp"
#include "masspart/version.hpp"

namespace masspart {

// Shortest exact decimal: %.17g always round-trips an IEEE double.
inline std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// One comment line carried at the top of every CSV artifact, e.g.
//   # masspart v0.1.0 representation=ram-stick params=alpha=0.5,... seed=42
inline std::string csv_banner(const std::string& detail) {
    return "# masspart v" MASSPART_VERSION " " + detail;
}

// Single-partition long format: one atom per row (index, weight, order tag);
// the residual travels in the header comment.
inline void write_partition_csv(std::ostream& os, const MassPartition& p) {
    os << csv_banner(std::string("order=") + to_string(p.order) +
                     " residual=" + format_double(p.residual))
       << '\n';
    os << "index,weight,order\n";
    for (std::size_t i = 0; i < p.atoms.size(); ++i)
        os << i << ',' << format_double(p.atoms[i]) << ',' << to_string(p.order) << '\n';
}

inline void write_partitions_csv(std::ostream& os, const std::string& banner_detail,
                                 const std::vector<MassPartition>& replicas) {
    os << csv_banner(banner_detail) << '\n';
    std::size_t k = 0;
    for (const auto& p : replicas) k = std::max(k, p.atoms.size());
    os << "replica";
    for (std::size_t j = 1; j <= k; ++j) os << ",atom_" << j;
    os << ",residual\n";
    for (std::size_t i = 0; i < replicas.size(); ++i) {
        os << i;
        for (std::size_t j = 0; j < k; ++j)
            os << ',' << (j < replicas[i].atoms.size() ? format_double(replicas[i].atoms[j]) : "");
        os << ',' << format_double(replicas[i].residual) << '\n';
    }
}

inline void write_septuples_csv(std::ostream& os, const std::string& banner_detail,
                                const std::vector<ExcursionSeptuple>& replicas) {
    os << csv_banner(banner_detail) << '\n';
    os << "replica,e,l,b,a,g,d,delta\n";
    for (std::size_t i = 0; i < replicas.size(); ++i) {
        const auto& s = replicas[i];
        os << i << ',' << format_double(s.e) << ',' << format_double(s.l) << ','
           << format_double(s.b) << ',' << format_double(s.a) << ',' << format_double(s.g) << ','
           << format_double(s.d) << ',' << format_double(s.delta) << '\n';
    }
}

inline void write_sextuples_csv(std::ostream& os, const std::string& banner_detail,
                                const std::vector<ExcursionSextuple>& replicas) {
    os << csv_banner(banner_detail) << '\n';
    std::size_t k = 0;
    for (const auto& s : replicas) k = std::max(k, s.partition.atoms.size());
    os << "replica,a_frac,b_frac,g_frac,d_frac,delta_frac";
    for (std::size_t j = 1; j <= k; ++j) os << ",atom_" << j;
    os << ",residual\n";
    for (std::size_t i = 0; i < replicas.size(); ++i) {
        const auto& s = replicas[i];
        os << i << ',' << format_double(s.a_frac) << ',' << format_double(s.b_frac) << ','
           << format_double(s.g_frac) << ',' << format_double(s.d_frac) << ','
           << format_double(s.delta_frac);
        for (std::size_t j = 0; j < k; ++j)
            os << ',' << (j < s.partition.atoms.size() ? format_double(s.partition.atoms[j]) : "");
        os << ',' << format_double(s.partition.residual) << '\n';
    }
}

inline void write_occupations_csv(std::ostream& os, const std::string& banner_detail,
                                  const std::vector<OccupationSample>& replicas) {
    os << csv_banner(banner_detail) << '\n';
    os << "replica,fraction,residual\n";
    for (std::size_t i = 0; i < replicas.size(); ++i)
        os << i << ',' << format_double(replicas[i].fraction) << ','
           << format_double(replicas[i].residual) << '\n';
}

// --- JSON ------------------------------------------------------------------

inline nlohmann::json to_json(const MassPartition& p) {
    return nlohmann::json{
        {"atoms", p.atoms}, {"residual", p.residual}, {"order", to_string(p.order)}};
}

inline MassPartition partition_from_json(const nlohmann::json& j) {
    try {
        MassPartition p;
        p.atoms = j.at("atoms").get<std::vector<double>>();
        p.residual = j.at("residual").get<double>();
        p.order = atom_order_from_string(j.at("order").get<std::string>());
        return p;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("io-error: bad partition JSON: ") + e.what());
    }
}

inline nlohmann::json to_json(const ExcursionSeptuple& s) {
    return nlohmann::json{{"e", s.e}, {"l", s.l}, {"b", s.b},        {"a", s.a},
                          {"g", s.g}, {"d", s.d}, {"delta", s.delta}};
}

inline nlohmann::json to_json(const ExcursionSextuple& s) {
    return nlohmann::json{{"a_frac", s.a_frac},         {"b_frac", s.b_frac},
                          {"g_frac", s.g_frac},         {"d_frac", s.d_frac},
                          {"delta_frac", s.delta_frac}, {"partition", to_json(s.partition)}};
}

inline nlohmann::json to_json(const OccupationSample& s) {
    return nlohmann::json{{"fraction", s.fraction}, {"residual", s.residual}};
}

inline nlohmann::json to_json(const KsReport& r) {
    return nlohmann::json{{"test_name", r.test_name}, {"statistic", r.statistic},
                          {"p_value", r.p_value},     {"n1", r.n1},
                          {"n2", r.n2},               {"passed", r.passed},
                          {"seed_record", r.seed_record}};
}

inline nlohmann::json to_json(const MomentReport& r) {
    return nlohmann::json{{"test_name", r.test_name},
                          {"sample_mean", r.sample_mean},
                          {"expected_mean", r.expected_mean},
                          {"expected_sd", r.expected_sd},
                          {"z", r.z},
                          {"n", r.n},
                          {"passed", r.passed}};
}

inline nlohmann::json to_json(const Assumption1Report& r) {
    return nlohmann::json{{"n_checked", r.n_checked},
                          {"cond_i_ok", r.cond_i_ok},
                          {"partial_sum_ii", r.partial_sum_ii},
                          {"pi_a_checkpoints", r.pi_a_checkpoints},
                          {"pi_a_iii", r.pi_a_iii},
                          {"trend_exponent", r.trend_exponent},
                          {"trend_residual", r.trend_residual}};
}

inline nlohmann::json partitions_to_json(const std::string& representation,
                                         const nlohmann::json& params, std::uint64_t seed,
                                         const std::vector<MassPartition>& replicas) {
    nlohmann::json reps = nlohmann::json::array();
    for (const auto& p : replicas) reps.push_back(to_json(p));
    return nlohmann::json{{"version", MASSPART_VERSION},
                          {"representation", representation},
                          {"params", params},
                          {"seed", seed},
                          {"n", replicas.size()},
                          {"replicas", std::move(reps)}};
}

// Two-column numeric input (a_j, b_j) for the stick-sequence checker.
// Accepts comma- or whitespace-separated values; '#' comments and a single
// non-numeric header row are skipped.
inline std::pair<std::vector<double>, std::vector<double>> read_ab_columns(std::istream& is) {
    std::vector<double> a, b;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::string t = line;
        for (char& ch : t)
            if (ch == ',' || ch == '\t' || ch == ';') ch = ' ';
        std::istringstream ls(t);
        std::string f1, f2;
        if (!(ls >> f1) || f1[0] == '#') continue;
        if (!(ls >> f2))
            throw std::runtime_error("io-error: line " + std::to_string(lineno) +
                                     ": need two columns (a, b)");
        try {
            std::size_t pos1 = 0, pos2 = 0;
            const double av = std::stod(f1, &pos1);
            const double bv = std::stod(f2, &pos2);
            if (pos1 != f1.size() || pos2 != f2.size()) throw std::invalid_argument("trailing");
            a.push_back(av);
            b.push_back(bv);
        } catch (const std::exception&) {
            if (a.empty() && lineno <= 2) continue; // header row
            throw std::runtime_error("io-error: line " + std::to_string(lineno) +
                                     ": non-numeric value");
        }
    }
    if (a.empty()) throw std::runtime_error("io-error: empty-input (no numeric rows)");
    return {std::move(a), std::move(b)};
}

} // namespace masspart
