#pragma once

// Command-line front end. Every subcommand is a thin, deterministic wrapper
// over the library: replicas are assigned fixed stream indices, so output is
// byte-identical for any --workers value and any machine.
//
// Exit codes: 0 success / statistical pass, 1 statistical failure,
// 2 usage or parameter error, 3 I/O error.
//
// Seed precedence: --seed flag, then the MASSPART_SEED environment variable
// (decimal or 0x-prefixed hex), then the built-in default 0xC0FFEE.

#include <cerrno>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "masspart/excursion.hpp"
#include "masspart/io.hpp"
#include "masspart/partition.hpp"
#include "masspart/randkit.hpp"
#include "masspart/repr.hpp"
#include "masspart/stattest.hpp"
#include "masspart/suite.hpp"
#include "masspart/util.hpp"
#include "masspart/version.hpp"

namespace masspart {

// Resolved run-wide settings shared by all subcommands.
struct RunConfig {
    std::uint64_t master_seed = 0xC0FFEE;
    std::size_t replicas = 1000;
    std::size_t workers = default_workers();
    double significance = 1e-3;
    std::string output_format = "csv";
    std::string output_path; // empty = stdout
};

namespace cli_detail {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::uint64_t resolve_seed(bool flag_set, std::uint64_t flag_value) {
    if (flag_set) return flag_value;
    if (const char* env = std::getenv("MASSPART_SEED")) {
        errno = 0;
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 0);
        if (errno != 0 || end == env || *end != '\0')
            throw UsageError(std::string("MASSPART_SEED is not a valid integer: '") + env + "'");
        return static_cast<std::uint64_t>(v);
    }
    return 0xC0FFEEull;
}

// Stream-index namespaces. The suite owns groups 1..10; plain `sample`,
// `excursion` and `arcsine` use the bare replica index (group 0); `equiv`
// uses two dedicated groups so its columns never alias anything else.
constexpr std::uint64_t kEquivStreamA = 100;
constexpr std::uint64_t kEquivStreamB = 101;

class OutputTarget {
  public:
    explicit OutputTarget(const std::string& path) : path_(path) {
        if (!path_.empty()) {
            file_.open(path_, std::ios::binary | std::ios::trunc);
            if (!file_)
                throw std::runtime_error("io-error: cannot open output file '" + path_ + "'");
        }
    }
    std::ostream& stream() { return path_.empty() ? std::cout : file_; }
    void finish() {
        stream().flush();
        if (!stream())
            throw std::runtime_error("io-error: write failed" +
                                     (path_.empty() ? std::string() : " ('" + path_ + "')"));
    }

  private:
    std::string path_;
    std::ofstream file_;
};

struct Params {
    std::optional<double> alpha, a1, c, theta;
};

inline double need(const std::optional<double>& v, const char* flag, const std::string& rep) {
    if (!v) throw UsageError("representation '" + rep + "' requires " + flag);
    return *v;
}

inline const std::vector<std::string>& representation_names() {
    static const std::vector<std::string> names = {
        "ram-stick",  "ram-perpetuity",  "pd-stable", "pd-theta-biased", "pd0-exp",
        "ram0-biased-exp", "dickman", "pd-mixed",  "xi-thinned",      "eta-prime"};
    return names;
}

// Builds the per-replica partition sampler for a named representation; all
// parameter validation happens here, before any worker thread starts. For
// point-process representations (pd-stable, pd-mixed, xi-thinned) the -k
// flag counts generated points rather than exact leading atoms.
inline std::function<MassPartition(RngStream&)> partition_sampler(const std::string& rep,
                                                                  const Params& pr,
                                                                  std::size_t k) {
    if (k < 1) throw UsageError("-k must be >= 1");
    if (rep == "ram-stick" || rep == "ram-perpetuity") {
        const RamParams ram{need(pr.alpha, "--alpha", rep), need(pr.a1, "--a1", rep),
                            need(pr.c, "--c", rep)};
        ram.validate();
        if (rep == "ram-stick")
            return [ram, k](RngStream& g) { return sample_ram_stick(ram, k, g); };
        return [ram, k](RngStream& g) {
            return sample_ram_perpetuity(ram, k, g, true).partition;
        };
    }
    if (rep == "pd-stable") {
        if (pr.theta && *pr.theta != 0.0)
            throw UsageError("pd-stable exists only at theta = 0; drop --theta or pass 0");
        const PdParams pd{need(pr.alpha, "--alpha", rep), 0.0};
        pd.validate();
        if (k < 2) throw UsageError("pd-stable requires -k >= 2 points");
        return [pd, k](RngStream& g) { return sample_pd_stable_points(pd, k, g); };
    }
    if (rep == "pd-theta-biased") {
        const PdParams pd{need(pr.alpha, "--alpha", rep), need(pr.theta, "--theta", rep)};
        pd.validate();
        return [pd, k](RngStream& g) { return sample_pd_theta_biased(pd, k, g).partition; };
    }
    if (rep == "pd0-exp") {
        const double theta = need(pr.theta, "--theta", rep);
        return [theta, k](RngStream& g) { return sample_pd0_exp_weights(theta, k, g).partition; };
    }
    if (rep == "ram0-biased-exp") {
        const double a = need(pr.a1, "--a1", rep);
        const double c = need(pr.c, "--c", rep);
        return [a, c, k](RngStream& g) { return sample_ram0_biased_exp(a, c, k, g).partition; };
    }
    if (rep == "dickman") {
        const double a = need(pr.a1, "--a1", rep);
        return [a, k](RngStream& g) { return sample_dickman_partition(a, k, g); };
    }
    if (rep == "pd-mixed") {
        const PdParams pd{need(pr.alpha, "--alpha", rep), need(pr.theta, "--theta", rep)};
        pd.validate();
        return [pd, k](RngStream& g) { return sample_pd_theta_mixed_poisson(pd, k, g); };
    }
    if (rep == "xi-thinned") {
        const double alpha = need(pr.alpha, "--alpha", rep);
        if (k < 2) throw UsageError("xi-thinned requires -k >= 2 points");
        return [alpha, k](RngStream& g) { return sample_xi_thinned(alpha, k, g).partition; };
    }
    if (rep == "eta-prime") {
        const double alpha = need(pr.alpha, "--alpha", rep);
        return [alpha, k](RngStream& g) { return sample_eta_prime(alpha, k, g); };
    }
    std::string known;
    for (const auto& n : representation_names()) known += (known.empty() ? "" : ", ") + n;
    throw UsageError("unknown representation '" + rep + "' (expected one of: " + known + ")");
}

inline std::string params_csv(const Params& pr, std::size_t k) {
    std::string s;
    auto put = [&s](const char* name, double v) {
        if (!s.empty()) s += ',';
        s += name;
        s += '=';
        s += format_double(v);
    };
    if (pr.alpha) put("alpha", *pr.alpha);
    if (pr.a1) put("a1", *pr.a1);
    if (pr.c) put("c", *pr.c);
    if (pr.theta) put("theta", *pr.theta);
    if (!s.empty()) s += ',';
    s += "k=" + std::to_string(k);
    return s;
}

inline nlohmann::json params_json(const Params& pr, std::size_t k) {
    nlohmann::json j = nlohmann::json::object();
    if (pr.alpha) j["alpha"] = *pr.alpha;
    if (pr.a1) j["a1"] = *pr.a1;
    if (pr.c) j["c"] = *pr.c;
    if (pr.theta) j["theta"] = *pr.theta;
    j["k"] = k;
    return j;
}

inline std::string banner_detail(const std::string& command, const std::string& sub,
                                 const Params& pr, std::size_t k, const RunConfig& cfg) {
    std::string s = "command=" + command;
    if (!sub.empty()) s += " " + sub;
    s += " params=" + params_csv(pr, k);
    s += " seed=" + detail::hex_seed(cfg.master_seed);
    s += " n=" + std::to_string(cfg.replicas);
    return s;
}

inline int cmd_sample(const std::string& rep, const Params& pr, std::size_t k,
                      const RunConfig& cfg) {
    auto fn = partition_sampler(rep, pr, k);
    std::vector<MassPartition> out(cfg.replicas);
    parallel_for_indexed(cfg.replicas, static_cast<unsigned>(cfg.workers), [&](std::size_t i) {
        RngStream g = make_stream(cfg.master_seed, i);
        out[i] = fn(g);
    });
    OutputTarget target(cfg.output_path);
    if (cfg.output_format == "json")
        target.stream() << partitions_to_json(rep, params_json(pr, k), cfg.master_seed, out)
                               .dump(2)
                        << '\n';
    else
        write_partitions_csv(target.stream(),
                             banner_detail("sample", "representation=" + rep, pr, k, cfg), out);
    target.finish();
    return 0;
}

inline int cmd_equiv(const std::string& rep_a, const std::string& rep_b,
                     const std::string& component, const Params& pr, std::size_t k,
                     const RunConfig& cfg) {
    if (component == "atom2" && k < 2) throw UsageError("--component atom2 requires -k >= 2");
    auto fa = partition_sampler(rep_a, pr, k);
    auto fb = partition_sampler(rep_b, pr, k);
    auto extract = [&component](const MassPartition& p) {
        if (component == "atom1") return p.atoms.at(0);
        if (component == "atom2") return p.atoms.at(1);
        return p.total();
    };
    std::vector<double> xa(cfg.replicas), xb(cfg.replicas);
    parallel_for_indexed(cfg.replicas, static_cast<unsigned>(cfg.workers), [&](std::size_t i) {
        RngStream ga = make_stream(cfg.master_seed, suite_stream_index(kEquivStreamA, 0, i));
        xa[i] = extract(fa(ga));
        RngStream gb = make_stream(cfg.master_seed, suite_stream_index(kEquivStreamB, 0, i));
        xb[i] = extract(fb(gb));
    });
    KsReport r = ks_two_sample(std::move(xa), std::move(xb), cfg.significance,
                               "equiv/" + rep_a + "-vs-" + rep_b + "/" + component,
                               "seed=" + detail::hex_seed(cfg.master_seed) +
                                   " n=" + std::to_string(cfg.replicas));
    OutputTarget target(cfg.output_path);
    target.stream() << to_json(r).dump(2) << '\n';
    target.finish();
    std::cerr << r.test_name << ": D=" << format_double(r.statistic)
              << " p=" << format_double(r.p_value) << " -> " << (r.passed ? "PASS" : "FAIL")
              << '\n';
    return r.passed ? 0 : 1;
}

inline int cmd_excursion(const std::string& form, const Params& pr, std::size_t k_flag,
                         const RunConfig& cfg) {
    const double alpha = need(pr.alpha, "--alpha", "excursion");
    OutputTarget target(cfg.output_path);
    if (form == "constructive") {
        const std::size_t n_points = k_flag > 0 ? k_flag : 1000;
        std::vector<ExcursionSeptuple> out(cfg.replicas);
        parallel_for_indexed(cfg.replicas, static_cast<unsigned>(cfg.workers),
                             [&](std::size_t i) {
                                 RngStream g = make_stream(cfg.master_seed, i);
                                 out[i] = sample_septuple_constructive(alpha, n_points, g);
                             });
        if (cfg.output_format == "json") {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& s : out) arr.push_back(to_json(s));
            nlohmann::json j{{"version", MASSPART_VERSION}, {"command", "excursion"},
                             {"form", form},                {"alpha", alpha},
                             {"n_points", n_points},        {"seed", cfg.master_seed},
                             {"n", cfg.replicas},           {"replicas", std::move(arr)}};
            target.stream() << j.dump(2) << '\n';
        } else {
            write_septuples_csv(target.stream(),
                                banner_detail("excursion", "form=" + form, pr, n_points, cfg),
                                out);
        }
    } else { // "closed" (guarded by the option validator)
        const std::size_t k_atoms = k_flag > 0 ? k_flag : 16;
        std::vector<ExcursionSextuple> out(cfg.replicas);
        parallel_for_indexed(cfg.replicas, static_cast<unsigned>(cfg.workers),
                             [&](std::size_t i) {
                                 RngStream g = make_stream(cfg.master_seed, i);
                                 out[i] = sample_sextuple_closed(alpha, k_atoms, g);
                             });
        if (cfg.output_format == "json") {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& s : out) arr.push_back(to_json(s));
            nlohmann::json j{{"version", MASSPART_VERSION}, {"command", "excursion"},
                             {"form", form},                {"alpha", alpha},
                             {"k_atoms", k_atoms},          {"seed", cfg.master_seed},
                             {"n", cfg.replicas},           {"replicas", std::move(arr)}};
            target.stream() << j.dump(2) << '\n';
        } else {
            write_sextuples_csv(target.stream(),
                                banner_detail("excursion", "form=" + form, pr, k_atoms, cfg),
                                out);
        }
    }
    target.finish();
    return 0;
}

inline int cmd_arcsine(const Params& pr, std::size_t k_flag, const RunConfig& cfg) {
    const double alpha = pr.alpha ? *pr.alpha : 0.5;
    const double target_residual = 1e-4;
    const std::size_t k_max = 2000000;
    std::vector<OccupationSample> out(cfg.replicas);
    parallel_for_indexed(cfg.replicas, static_cast<unsigned>(cfg.workers), [&](std::size_t i) {
        RngStream g = make_stream(cfg.master_seed, i);
        out[i] = k_flag > 0
                     ? sample_occupation_fraction(alpha, k_flag, g)
                     : sample_occupation_fraction_adaptive(alpha, target_residual, k_max, g);
    });
    OutputTarget target(cfg.output_path);
    const std::string mode =
        k_flag > 0 ? "k=" + std::to_string(k_flag)
                   : "adaptive,target=" + format_double(target_residual);
    if (cfg.output_format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& s : out) arr.push_back(to_json(s));
        nlohmann::json j{{"version", MASSPART_VERSION}, {"command", "arcsine"},
                         {"alpha", alpha},              {"mode", mode},
                         {"seed", cfg.master_seed},     {"n", cfg.replicas},
                         {"replicas", std::move(arr)}};
        target.stream() << j.dump(2) << '\n';
    } else {
        Params p2;
        p2.alpha = alpha;
        write_occupations_csv(target.stream(),
                              banner_detail("arcsine", "mode=" + mode, p2, k_flag, cfg), out);
    }
    target.finish();
    return 0;
}

inline int cmd_check_assumption(const Params& pr, std::size_t k_terms, const RunConfig& cfg) {
    std::vector<double> a, b;
    nlohmann::json j;
    if (pr.alpha || pr.a1 || pr.c) {
        const RamParams ram{need(pr.alpha, "--alpha", "check-assumption"),
                            need(pr.a1, "--a1", "check-assumption"),
                            need(pr.c, "--c", "check-assumption")};
        ram.validate();
        const std::size_t terms = k_terms > 0 ? k_terms : 10000;
        auto seqs = assumption_sequences(ram, terms);
        a = std::move(seqs.first);
        b = std::move(seqs.second);
        if (ram.alpha > 0.0)
            j["reference_trend_exponent"] = 1.0 - (ram.alpha + ram.c) / ram.alpha;
        j["source"] = "generated";
    } else {
        auto cols = read_ab_columns(std::cin);
        a = std::move(cols.first);
        b = std::move(cols.second);
        j["source"] = "stdin";
    }
    const Assumption1Report rep = check_assumption1(a, b);
    nlohmann::json body = to_json(rep);
    body["version"] = MASSPART_VERSION;
    for (auto& [key, val] : j.items()) body[key] = val;
    OutputTarget target(cfg.output_path);
    target.stream() << body.dump(2) << '\n';
    target.finish();
    return 0;
}

inline int cmd_suite(const RunConfig& cfg, bool significance_set, int group) {
    SuiteConfig sc;
    sc.master_seed = cfg.master_seed;
    sc.replicas = cfg.replicas;
    sc.workers = cfg.workers;
    sc.significance_override = significance_set ? cfg.significance : 0.0;
    sc.group = group;
    const SuiteReport rep = run_suite(sc);
    for (const auto& g : rep.groups) {
        std::fprintf(stderr, "group %2d [%s]: %s (%zu tests, %.1fs, budget %.0fs)\n", g.id,
                     g.title.c_str(), g.passed() ? "PASS" : "FAIL", g.tests.size(), g.seconds,
                     g.budget_seconds);
        for (const auto& t : g.tests)
            if (!t.passed)
                std::fprintf(stderr, "  FAIL %s: statistic=%.6g p=%.6g gate=%.6g [%s]\n",
                             t.name.c_str(), t.statistic, t.p_value, t.gate,
                             t.seed_record.c_str());
        if (!g.within_budget)
            std::fprintf(stderr, "  FAIL runtime: %.1fs exceeds budget %.0fs\n", g.seconds,
                         g.budget_seconds);
    }
    OutputTarget target(cfg.output_path);
    target.stream() << to_json(rep, true).dump(2) << '\n';
    target.finish();
    return rep.all_passed ? 0 : 1;
}

// Shared flag block; every subcommand carries the same surface so scripts
// can move between commands without relearning options.
struct FlagSet {
    double alpha = 0, a1 = 0, c = 0, theta = 0;
    long long k = 0;
    long long n = 1000;
    std::uint64_t seed = 0xC0FFEE;
    long long workers = static_cast<long long>(default_workers());
    double significance = 1e-3;
    std::string format = "csv";
    std::string out;
    CLI::Option *alpha_opt = nullptr, *a1_opt = nullptr, *c_opt = nullptr, *theta_opt = nullptr,
                *seed_opt = nullptr, *sig_opt = nullptr;

    Params params() const {
        Params p;
        if (alpha_opt->count()) p.alpha = alpha;
        if (a1_opt->count()) p.a1 = a1;
        if (c_opt->count()) p.c = c;
        if (theta_opt->count()) p.theta = theta;
        return p;
    }
    RunConfig config() const {
        RunConfig cfg;
        cfg.master_seed = resolve_seed(seed_opt->count() > 0, seed);
        cfg.replicas = static_cast<std::size_t>(n);
        cfg.workers = static_cast<std::size_t>(workers);
        cfg.significance = significance;
        cfg.output_format = format;
        cfg.output_path = out;
        return cfg;
    }
};

inline void add_common(CLI::App* sub, FlagSet& fs, const char* format_default,
                       long long n_default, long long k_default, double sig_default) {
    fs.format = format_default;
    fs.n = n_default;
    fs.k = k_default;
    fs.significance = sig_default;
    fs.alpha_opt = sub->add_option("--alpha", fs.alpha, "family index alpha");
    fs.a1_opt = sub->add_option(
        "--a1", fs.a1, "first stick shape a1 (doubles as 'a' for ram0-biased-exp and dickman)");
    fs.c_opt = sub->add_option("--c", fs.c, "stick shape c");
    fs.theta_opt = sub->add_option("--theta", fs.theta, "tilt parameter theta");
    sub->add_option("-k,--atoms", fs.k, "atoms or generated points per replica")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("-n,--replicas", fs.n, "number of replicas")->check(CLI::PositiveNumber);
    fs.seed_opt = sub->add_option("--seed", fs.seed, "master seed (overrides MASSPART_SEED)");
    sub->add_option("--workers", fs.workers, "worker thread count (never affects output bytes)")
        ->check(CLI::PositiveNumber);
    fs.sig_opt = sub->add_option("--significance", fs.significance, "p-value gate");
    sub->add_option("--format", fs.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", fs.out, "output path (default: stdout)");
}

inline void require_json(const FlagSet& fs, const char* command) {
    if (fs.format != "json")
        throw UsageError(std::string(command) + " writes a JSON report; --format csv is not available");
}

} // namespace cli_detail

inline int run_cli(int argc, const char* const* argv) {
    using namespace cli_detail;
    CLI::App app{"masspart: constructive samplers and seeded statistical certification for "
                 "stick-breaking mass partitions, their point-process representations, and "
                 "excursion-interval laws"};
    app.set_version_flag("--version", MASSPART_VERSION);
    app.require_subcommand(1);

    FlagSet fs_sample, fs_equiv, fs_exc, fs_arc, fs_chk, fs_suite;
    std::string rep, rep_a, rep_b;
    std::string component = "atom1";
    std::string form = "constructive";
    int group = 0;

    CLI::App* sub_sample =
        app.add_subcommand("sample", "draw replica partitions from one representation");
    sub_sample->add_option("representation", rep, "representation name")->required();
    add_common(sub_sample, fs_sample, "csv", 1000, 16, 1e-3);

    CLI::App* sub_equiv = app.add_subcommand(
        "equiv", "two-sample KS comparison of a component across two representations");
    sub_equiv->add_option("representation_a", rep_a, "first representation")->required();
    sub_equiv->add_option("representation_b", rep_b, "second representation")->required();
    sub_equiv->add_option("--component", component, "compared component")
        ->check(CLI::IsMember({"atom1", "atom2", "total"}));
    add_common(sub_equiv, fs_equiv, "json", 100000, 16, 1e-3);

    CLI::App* sub_exc =
        app.add_subcommand("excursion", "draw excursion interval tuples around a fixed time");
    sub_exc->add_option("--form", form, "constructive (septuple) or closed (sextuple)")
        ->check(CLI::IsMember({"constructive", "closed"}));
    add_common(sub_exc, fs_exc, "csv", 1000, 0, 1e-3);

    CLI::App* sub_arc = app.add_subcommand(
        "arcsine", "draw marked occupation fractions (adaptive depth unless -k is given)");
    add_common(sub_arc, fs_arc, "csv", 1000, 0, 1e-3);

    CLI::App* sub_chk = app.add_subcommand(
        "check-assumption",
        "stick-sequence diagnostics: generated from --alpha/--a1/--c or read as two-column "
        "CSV from stdin; reports quantities only, never a convergence verdict");
    add_common(sub_chk, fs_chk, "json", 1000, 10000, 1e-3);

    CLI::App* sub_suite =
        app.add_subcommand("suite", "run the seeded certification groups and emit a JSON report");
    sub_suite->add_option("--group", group, "run a single group (1-10); 0 = all")
        ->check(CLI::Range(0, 10));
    add_common(sub_suite, fs_suite, "json", 100000, 0, 0.0);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (sub_sample->parsed())
            return cmd_sample(rep, fs_sample.params(), static_cast<std::size_t>(fs_sample.k),
                              fs_sample.config());
        if (sub_equiv->parsed()) {
            require_json(fs_equiv, "equiv");
            return cmd_equiv(rep_a, rep_b, component, fs_equiv.params(),
                             static_cast<std::size_t>(fs_equiv.k), fs_equiv.config());
        }
        if (sub_exc->parsed())
            return cmd_excursion(form, fs_exc.params(), static_cast<std::size_t>(fs_exc.k),
                                 fs_exc.config());
        if (sub_arc->parsed())
            return cmd_arcsine(fs_arc.params(), static_cast<std::size_t>(fs_arc.k),
                               fs_arc.config());
        if (sub_chk->parsed()) {
            require_json(fs_chk, "check-assumption");
            return cmd_check_assumption(fs_chk.params(), static_cast<std::size_t>(fs_chk.k),
                                        fs_chk.config());
        }
        if (sub_suite->parsed()) {
            require_json(fs_suite, "suite");
            return cmd_suite(fs_suite.config(), fs_suite.sig_opt->count() > 0, group);
        }
        std::cerr << "no subcommand selected\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "parameter error: " << e.what() << '\n';
        return 2;
    } catch (const std::runtime_error& e) {
        const std::string what = e.what();
        std::cerr << "error: " << what << '\n';
        return what.rfind("io-error", 0) == 0 ? 3 : 2;
    }
}

// Convenience overload for in-process invocation (tests): args exclude the
// program name.
inline int run_cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("masspart");
    for (const auto& a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data());
}

} // namespace masspart
