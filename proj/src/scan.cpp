#include "cyclo/scan.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <mutex>
#include <thread>

#include <gmpxx.h>

#include "cyclo/report.hpp"

namespace cyclo {

namespace {

using clock_type = std::chrono::steady_clock;

double ms_since(clock_type::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

std::string serialize(const ScanConfig& cfg, const CheckReport& r, double ms) {
    const auto msopt = cfg.timings ? std::optional<double>(ms) : std::nullopt;
    return (cfg.format == OutputFormat::csv ? to_csv_row(r, msopt)
                                            : to_json_line(r, msopt)) +
           '\n';
}

// (a^p + b^p) / (a + b), exactly
mpz_class ab_quotient(u64 p, u64 a, u64 b) {
    const mpz_class A = static_cast<unsigned long>(a);
    const mpz_class B = static_cast<unsigned long>(b);
    mpz_class S, T;
    mpz_pow_ui(S.get_mpz_t(), A.get_mpz_t(), static_cast<unsigned long>(p));
    mpz_pow_ui(T.get_mpz_t(), B.get_mpz_t(), static_cast<unsigned long>(p));
    S += T;
    return S / (A + B);
}

// lines for one modulus, in the expanded check order
std::string render_modulus(const ScanConfig& cfg,
                           const std::vector<std::string>& checks, u64 N) {
    const ModCtx ctx = make_ctx(cfg.p, N);
    const DLog dlog(ctx);
    const bool ab_explicit =
        std::find(cfg.checks.begin(), cfg.checks.end(), "ab") != cfg.checks.end();

    std::string out;
    for (const auto& name : checks) {
        if (name == "ab") {
            bool found = false;
            for (u64 a = 2; a <= 12; ++a) {
                for (u64 b = 1; b < a; ++b) {
                    if (ab_quotient(cfg.p, a, b) != static_cast<unsigned long>(N))
                        continue;
                    found = true;
                    const auto t0 = clock_type::now();
                    CheckReport r;
                    try {
                        r = check_ab(cfg.p, a, b);
                    } catch (const std::exception& e) {
                        r = CheckReport{};
                        r.check = "ab";
                        r.p = cfg.p;
                        r.N = N;
                        r.verdict = Verdict::skipped;
                        r.skip_reason = std::string("error: ") + e.what();
                    }
                    out += serialize(cfg, r, ms_since(t0));
                }
            }
            if (!found && ab_explicit) {
                CheckReport r;
                r.check = "ab";
                r.p = ctx.p;
                r.N = ctx.N;
                r.nu = ctx.nu;
                r.g = ctx.g;
                r.verdict = Verdict::skipped;
                r.skip_reason = "not_applicable: no generating pair with a, b <= 12";
                out += serialize(cfg, r, 0.0);
            }
            continue;
        }

        const auto t0 = clock_type::now();
        CheckReport r;
        try {
            r = run_check(name, ctx, dlog, cfg);
        } catch (const std::exception& e) {
            r = CheckReport{};
            r.check = name;
            r.p = ctx.p;
            r.N = ctx.N;
            r.nu = ctx.nu;
            r.g = ctx.g;
            r.verdict = Verdict::skipped;
            r.skip_reason = std::string("error: ") + e.what();
        }
        out += serialize(cfg, r, ms_since(t0));
    }
    return out;
}

} // namespace

const std::vector<std::string>& scan_check_names() {
    static const std::vector<std::string> names = {
        "ce", "si", "powerlog", "bounds", "gamma", "thmP", "p5", "ab"};
    return names;
}

std::vector<std::string> expand_checks(const std::vector<std::string>& req, u64 p) {
    std::vector<std::string> out;
    const auto add = [&](const std::string& n) {
        if (std::find(out.begin(), out.end(), n) == out.end())
            out.push_back(n);
    };
    for (const auto& name : req) {
        if (name == "all") {
            for (const char* n : {"ce", "si", "powerlog", "bounds", "gamma", "thmP"})
                add(n);
            if (p == 5)
                add("p5");
            add("ab");
        } else {
            const auto& known = scan_check_names();
            if (std::find(known.begin(), known.end(), name) == known.end())
                throw RangeError("unknown check: " + name);
            add(name);
        }
    }
    if (out.empty())
        throw RangeError("no checks requested");
    return out;
}

CheckReport run_check(const std::string& name, const ModCtx& ctx,
                      const DLog& dlog, const ScanConfig& cfg) {
    if (name == "ce")
        return check_ce(ctx, dlog);
    if (name == "si")
        return check_si(ctx, dlog);
    if (name == "powerlog")
        return check_power_log(ctx, dlog, static_cast<int>(ctx.p) - 1);
    if (name == "bounds")
        return rank_bounds(ctx, dlog);
    if (name == "gamma")
        return check_prop_gamma(ctx, dlog, CharOmegaPower(ctx.p, cfg.chi_exponent));
    if (name == "thmP")
        return check_thm_p(ctx, dlog, CharOmegaPower(ctx.p, cfg.chi_exponent),
                           cfg.norm_bound);
    if (name == "p5")
        return check_p5(ctx, dlog, cfg.norm_bound);
    throw RangeError("unknown check: " + name);
}

std::vector<u64> scan_moduli(u64 p, u64 lo, u64 hi) {
    std::vector<u64> out;
    if (hi < 2 || lo > hi)
        return out;
    // N = kp + 1, k >= 1
    u64 k = lo <= p + 1 ? 1 : (lo - 2) / p + 1;
    for (u64 N = k * p + 1; N <= hi; N += p)
        if (is_prime(N))
            out.push_back(N);
    return out;
}

void run_scan(const ScanConfig& cfg,
              const std::function<void(const std::string&)>& sink) {
    if (cfg.p < 5 || !is_prime(cfg.p))
        throw NotPrimeError("scan: p must be a prime >= 5");
    const std::vector<std::string> checks = expand_checks(cfg.checks, cfg.p);
    const std::vector<u64> moduli = scan_moduli(cfg.p, cfg.lo, cfg.hi);

    if (cfg.format == OutputFormat::csv)
        sink(csv_header() + "\n");

    const int jobs = std::max(1, cfg.jobs);
    if (jobs == 1 || moduli.size() < 2) {
        for (const u64 N : moduli)
            sink(render_modulus(cfg, checks, N));
        return;
    }

    std::vector<std::string> slot(moduli.size());
    std::vector<char> done(moduli.size(), 0);
    std::mutex m;
    std::condition_variable cv;
    std::atomic<size_t> next{0};

    const auto work = [&] {
        for (;;) {
            const size_t idx = next.fetch_add(1);
            if (idx >= moduli.size())
                return;
            std::string chunk = render_modulus(cfg, checks, moduli[idx]);
            {
                const std::lock_guard<std::mutex> lk(m);
                slot[idx] = std::move(chunk);
                done[idx] = 1;
            }
            cv.notify_all();
        }
    };

    std::vector<std::thread> pool;
    const size_t nthreads = std::min<size_t>(jobs, moduli.size());
    pool.reserve(nthreads);
    for (size_t t = 0; t < nthreads; ++t)
        pool.emplace_back(work);

    // flush finished moduli strictly in order; workers run ahead as they like
    {
        std::unique_lock<std::mutex> lk(m);
        for (size_t flushed = 0; flushed < moduli.size(); ++flushed) {
            cv.wait(lk, [&] { return done[flushed] != 0; });
            const std::string chunk = std::move(slot[flushed]);
            lk.unlock();
            sink(chunk);
            lk.lock();
        }
    }
    for (auto& th : pool)
        th.join();
}

} // namespace cyclo
