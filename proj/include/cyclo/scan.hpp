#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cyclo/criteria.hpp"

// Sweeps a range of moduli N = 1 (mod p) and emits one serialized report per
// (N, check). Workers own whole moduli and a single writer flushes finished
// moduli in ascending order, so the byte stream is independent of the job
// count (timings excepted: measured durations are whatever they are).

namespace cyclo {

enum class OutputFormat { json, csv };

struct ScanConfig {
    u64 p = 5;
    u64 lo = 0; // N runs over primes in [lo, hi] with N = 1 mod p
    u64 hi = 0;
    std::vector<std::string> checks{"all"};
    int jobs = 1;
    OutputFormat format = OutputFormat::json;
    int norm_bound = 10;
    long chi_exponent = -1; // chi = omega^this for gamma and thmP
    bool timings = false;
};

// every check name scan understands
const std::vector<std::string>& scan_check_names();

// Expand the request, mapping "all" to the canonical order. "all" includes
// p5 only at p = 5 and puts ab last; ab lines only appear for moduli that
// some pair a, b <= 12 generates. Unknown names throw RangeError.
std::vector<std::string> expand_checks(const std::vector<std::string>& req, u64 p);

// dispatch one named check on a prepared context ("ab" is not dispatchable
// here; it does not take a context)
CheckReport run_check(const std::string& name, const ModCtx& ctx,
                      const DLog& dlog, const ScanConfig& cfg);

// primes N = 1 (mod p) in [lo, hi], ascending
std::vector<u64> scan_moduli(u64 p, u64 lo, u64 hi);

// Runs the sweep, handing each finished chunk of output (the lines of one
// modulus, newline-terminated) to sink in ascending-N order. A check that
// throws becomes a skipped line carrying the error text and the scan goes on.
void run_scan(const ScanConfig& cfg,
              const std::function<void(const std::string&)>& sink);

} // namespace cyclo
