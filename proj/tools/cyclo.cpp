#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cyclo/criteria.hpp"
#include "cyclo/report.hpp"
#include "cyclo/scan.hpp"

// Exit codes: 0 the check ran and reported holds or fails, 2 it was skipped,
// 1 a computation refused its inputs, 64 bad usage.

namespace {

using namespace cyclo;

constexpr int kExitUsage = 64;

struct Options {
    std::string check_name;
    u64 p = 0;
    u64 n = 0;
    u64 a = 0;
    u64 b = 0;
    long chi = -1;
    int norm_bound = 10;
    int jobs = 1;
    std::string range;
    std::string checks = "all";
    std::string format = "json";
    bool timings = false;
};

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (const char c : s) {
        if (c == ',') {
            if (!cur.empty())
                out.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    if (!cur.empty())
        out.push_back(cur);
    return out;
}

std::optional<std::pair<u64, u64>> parse_range(const std::string& s) {
    const auto dots = s.find("..");
    if (dots == std::string::npos)
        return std::nullopt;
    try {
        size_t used = 0;
        const u64 lo = std::stoull(s.substr(0, dots), &used);
        if (used != dots)
            return std::nullopt;
        const std::string rest = s.substr(dots + 2);
        const u64 hi = std::stoull(rest, &used);
        if (used != rest.size())
            return std::nullopt;
        return std::make_pair(lo, hi);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

int env_jobs() {
    const char* env = std::getenv("CYCLO_JOBS");
    if (!env)
        return 1;
    try {
        const int j = std::stoi(env);
        return j >= 1 ? j : 1;
    } catch (const std::exception&) {
        return 1;
    }
}

void emit(const CheckReport& r, const Options& opt, std::optional<double> ms) {
    if (!opt.timings)
        ms = std::nullopt;
    if (opt.format == "csv")
        std::cout << csv_header() << "\n" << to_csv_row(r, ms) << "\n";
    else
        std::cout << to_json_line(r, ms) << "\n";
}

int cmd_check(const Options& opt, const CLI::App& sub) {
    ScanConfig cfg;
    cfg.p = opt.p;
    cfg.norm_bound = opt.norm_bound;
    cfg.chi_exponent = opt.chi;

    CheckReport r;
    const auto t0 = std::chrono::steady_clock::now();
    if (opt.check_name == "ab") {
        if (sub.count("--a") == 0 || sub.count("--b") == 0) {
            std::cerr << "check ab needs --a and --b\n";
            return kExitUsage;
        }
        r = check_ab(opt.p, opt.a, opt.b);
        if (sub.count("--n") > 0 && r.N != opt.n) {
            std::cerr << "check ab: --n " << opt.n << " does not match (a^p+b^p)/(a+b)"
                      << (r.N ? " = " + std::to_string(r.N) : "") << "\n";
            return kExitUsage;
        }
    } else {
        if (sub.count("--n") == 0) {
            std::cerr << "check " << opt.check_name << " needs --n\n";
            return kExitUsage;
        }
        const ModCtx ctx = make_ctx(opt.p, opt.n);
        const DLog dlog(ctx);
        r = run_check(opt.check_name, ctx, dlog, cfg);
    }
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
    emit(r, opt, ms);
    return r.verdict == Verdict::skipped ? 2 : 0;
}

int cmd_scan(const Options& opt) {
    const auto range = parse_range(opt.range);
    if (!range) {
        std::cerr << "--range wants LO..HI\n";
        return kExitUsage;
    }
    ScanConfig cfg;
    cfg.p = opt.p;
    cfg.lo = range->first;
    cfg.hi = range->second;
    cfg.checks = split_commas(opt.checks);
    cfg.jobs = opt.jobs;
    cfg.format = opt.format == "csv" ? OutputFormat::csv : OutputFormat::json;
    cfg.norm_bound = opt.norm_bound;
    cfg.chi_exponent = opt.chi;
    cfg.timings = opt.timings;
    if (cfg.checks.empty()) {
        std::cerr << "--checks wants a comma list or 'all'\n";
        return kExitUsage;
    }
    try {
        expand_checks(cfg.checks, cfg.p); // reject unknown names before work
    } catch (const RangeError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
    run_scan(cfg, [](const std::string& chunk) {
        std::cout << chunk;
        std::cout.flush();
    });
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    Options opt;
    opt.jobs = env_jobs();

    CLI::App app{"congruence checks attached to the fields Q((N)^(1/p))"};
    app.require_subcommand(1);

    const std::vector<std::string> check_names = {"ce", "ab",     "thmP",     "gamma",
                                                  "p5", "bounds", "powerlog", "si"};

    CLI::App* check = app.add_subcommand("check", "run one check at one modulus");
    check->add_option("name", opt.check_name, "which check")
        ->required()
        ->check(CLI::IsMember(check_names));
    check->add_option("--p", opt.p, "the prime p")->required();
    check->add_option("--n", opt.n, "the modulus N (derived from a, b for ab)");
    check->add_option("--a", opt.a, "a for the ab check");
    check->add_option("--b", opt.b, "b for the ab check");
    check->add_option("--chi", opt.chi, "character exponent: chi = omega^this")->capture_default_str();
    check->add_option("--norm-bound", opt.norm_bound, "coefficient bound for the norm search")->capture_default_str();
    check->add_option("--format", opt.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    check->add_flag("--timings", opt.timings, "attach wall time to each line");

    CLI::App* scan = app.add_subcommand("scan", "sweep N over a range");
    scan->add_option("--p", opt.p, "the prime p")->required();
    scan->add_option("--range", opt.range, "LO..HI for N")->required();
    scan->add_option("--checks", opt.checks, "comma list of checks, or 'all'")->capture_default_str();
    scan->add_option("--jobs", opt.jobs, "worker threads (CYCLO_JOBS also read)")->capture_default_str();
    scan->add_option("--chi", opt.chi, "character exponent: chi = omega^this")->capture_default_str();
    scan->add_option("--norm-bound", opt.norm_bound, "coefficient bound for the norm search")->capture_default_str();
    scan->add_option("--format", opt.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    scan->add_flag("--timings", opt.timings, "attach wall time to each line");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (check->parsed())
            return cmd_check(opt, *check);
        return cmd_scan(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
