#include "rosary/containment.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "rosary/kernels.hpp"
#include "rosary/table.hpp"

namespace rosary {

std::string engine_name(Engine e) {
    switch (e) {
        case Engine::naive: return "naive";
        case Engine::nexttable: return "nexttable";
        case Engine::simd: return "simd";
        case Engine::automatic: return "auto";
    }
    return "auto";
}

std::optional<Engine> parse_engine(std::string_view name) {
    if (name == "naive") return Engine::naive;
    if (name == "nexttable") return Engine::nexttable;
    if (name == "simd") return Engine::simd;
    if (name == "auto" || name == "automatic") return Engine::automatic;
    return std::nullopt;
}

Engine resolve_engine(Engine e) {
    const bool simd_ok = available_match_kernels().size() > 1;
    switch (e) {
        case Engine::naive: return Engine::naive;
        case Engine::nexttable: return Engine::nexttable;
        case Engine::simd:
        case Engine::automatic: return simd_ok ? Engine::simd : Engine::nexttable;
    }
    return Engine::nexttable;
}

bool string_contains(const std::vector<int>& text, const std::vector<int>& pattern) {
    std::size_t k = 0;
    for (int v : text) {
        if (k < pattern.size() && v == pattern[k]) ++k;
        if (k == pattern.size()) return true;
    }
    return k == pattern.size();
}

namespace {

void check_pattern_alphabet(const Cycle& c, const std::vector<int>& pattern) {
    for (int v : pattern)
        if (v < 1 || v > c.degree)
            throw std::invalid_argument("pattern value " + std::to_string(v) +
                                        " outside the cycle's alphabet");
}

// Reference engine: per-start greedy scan over the rotated reading.
int find_start_naive(const Cycle& c, const std::vector<int>& pattern) {
    const std::size_t r = c.length();
    for (std::size_t j = 0; j < r; ++j) {
        std::size_t k = 0;
        for (std::size_t i = 0; i < r && k < pattern.size(); ++i)
            if (c.values[(j + i) % r] == pattern[k]) ++k;
        if (k == pattern.size()) return static_cast<int>(j);
    }
    return -1;
}

const MatchKernel& kernel_for(Engine resolved) {
    if (resolved == Engine::simd)
        return *available_match_kernels().back();
    return scalar_match_kernel();
}

int default_threads() {
    if (const char* env = std::getenv("ROSARY_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

}  // namespace

ContainmentVerdict cycle_contains(const Cycle& c, const std::vector<int>& pattern,
                                  Engine engine) {
    check_pattern_alphabet(c, pattern);
    ContainmentVerdict v;
    if (pattern.empty()) {
        v.contained = true;
        v.start = 0;
        return v;
    }
    int j;
    const Engine resolved = resolve_engine(engine);
    if (resolved == Engine::naive) {
        j = find_start_naive(c, pattern);
    } else {
        const StepTable t = StepTable::for_cycle(c);
        j = kernel_for(resolved).find_start(t, pattern.data(),
                                            static_cast<int>(pattern.size()));
    }
    if (j >= 0) {
        v.contained = true;
        v.start = static_cast<std::size_t>(j);
    }
    return v;
}

ContainmentVerdict cyclic_contains(const Cycle& c, const Cycle& a, Engine engine) {
    check_pattern_alphabet(c, a.values);
    const Engine resolved = resolve_engine(engine);

    // One table serves every rotation of the pattern.
    std::optional<StepTable> table;
    if (resolved != Engine::naive)
        table.emplace(StepTable::for_cycle(c));

    std::vector<int> pat(a.values);
    for (std::size_t t = 0; t < a.length(); ++t) {
        if (t > 0)
            std::rotate(pat.begin(), pat.begin() + 1, pat.end());
        int j;
        if (resolved == Engine::naive)
            j = find_start_naive(c, pat);
        else
            j = kernel_for(resolved).find_start(*table, pat.data(),
                                                static_cast<int>(pat.size()));
        if (j >= 0) {
            ContainmentVerdict v;
            v.contained = true;
            v.start = static_cast<std::size_t>(j);
            v.rotation = t;
            return v;
        }
    }
    return {};
}

std::uint64_t factorial(int n) {
    if (n < 0 || n > 20)
        throw std::invalid_argument("factorial argument outside [0, 20]");
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

std::vector<int> permutation_at_rank(int n, std::uint64_t rank) {
    if (n < 1)
        throw std::invalid_argument("degree must be positive");
    if (rank >= factorial(n))
        throw std::invalid_argument("rank out of range");
    std::vector<int> pool;
    for (int i = 1; i <= n; ++i) pool.push_back(i);
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n));
    std::uint64_t f = factorial(n);
    for (int left = n; left >= 1; --left) {
        f /= static_cast<std::uint64_t>(left);
        const std::size_t idx = static_cast<std::size_t>(rank / f);
        rank %= f;
        out.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return out;
}

namespace {

struct WorkerResult {
    std::uint64_t checked = 0;
    std::uint64_t missing_total = 0;
    std::vector<std::vector<int>> missing;
};

// Scans the lexicographic permutation range [lo, hi).
WorkerResult scan_range(const Cycle& c, int n, std::uint64_t lo, std::uint64_t hi,
                        Engine resolved, const StepTable* table, std::size_t witness_cap,
                        bool early_exit) {
    WorkerResult res;
    if (lo >= hi) return res;
    const MatchKernel* kernel = resolved == Engine::naive ? nullptr : &kernel_for(resolved);
    std::vector<int> perm = permutation_at_rank(n, lo);
    for (std::uint64_t rank = lo; rank < hi; ++rank) {
        bool hit;
        if (kernel)
            hit = kernel->find_start(*table, perm.data(), n) >= 0;
        else
            hit = find_start_naive(c, perm) >= 0;
        ++res.checked;
        if (!hit) {
            ++res.missing_total;
            if (res.missing.size() < witness_cap)
                res.missing.push_back(perm);
            if (early_exit) break;
        }
        std::next_permutation(perm.begin(), perm.end());
    }
    return res;
}

}  // namespace

RosaryReport verify_rosary(const Cycle& c, int n, const VerifyConfig& config) {
    if (n < 1)
        throw std::invalid_argument("degree must be positive");
    if (n > config.degree_cap)
        throw std::invalid_argument(
            "degree " + std::to_string(n) + " exceeds the cap of " +
            std::to_string(config.degree_cap) + "; this enumeration would check " +
            (n <= 20 ? std::to_string(factorial(n)) : std::string("more than 2^61")) +
            " permutations (raise the cap explicitly to proceed)");
    for (int v : c.values)
        if (v > n)
            throw std::invalid_argument("cycle value " + std::to_string(v) +
                                        " exceeds the degree under test");

    const auto t0 = std::chrono::steady_clock::now();
    const Engine resolved = resolve_engine(config.engine);
    std::optional<StepTable> table;
    if (resolved != Engine::naive)
        table.emplace(StepTable::for_cycle(c));

    const std::uint64_t total = factorial(n);
    int threads = config.threads > 0 ? config.threads : default_threads();
    if (static_cast<std::uint64_t>(threads) > total)
        threads = static_cast<int>(total);

    std::vector<WorkerResult> parts(static_cast<std::size_t>(threads));
    const StepTable* tbl = table ? &*table : nullptr;
    if (threads == 1) {
        parts[0] = scan_range(c, n, 0, total, resolved, tbl, config.witness_cap,
                              config.early_exit);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int w = 0; w < threads; ++w) {
            const std::uint64_t lo = total * static_cast<std::uint64_t>(w) /
                                     static_cast<std::uint64_t>(threads);
            const std::uint64_t hi = total * static_cast<std::uint64_t>(w + 1) /
                                     static_cast<std::uint64_t>(threads);
            pool.emplace_back([&, w, lo, hi] {
                parts[static_cast<std::size_t>(w)] =
                    scan_range(c, n, lo, hi, resolved, tbl, config.witness_cap,
                               config.early_exit);
            });
        }
        for (auto& th : pool) th.join();
    }

    RosaryReport report;
    report.n = n;
    report.length = c.length();
    report.engine = engine_name(resolved);
    report.threads = threads;
    // ranges are in lexicographic order, so concatenation keeps witnesses sorted
    for (const auto& part : parts) {
        report.checked += part.checked;
        report.missing_total += part.missing_total;
        for (const auto& w : part.missing)
            if (report.missing.size() < config.witness_cap)
                report.missing.push_back(w);
    }
    report.is_rosary = report.missing_total == 0 && report.checked == total;
    const auto t1 = std::chrono::steady_clock::now();
    report.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return report;
}

bool is_rosary(const Cycle& c, int n) {
    VerifyConfig cfg;
    cfg.early_exit = true;
    return verify_rosary(c, n, cfg).is_rosary;
}

namespace {

// Depth-first walk of the permutation tree with greedy table positions. A
// prefix that cannot be matched greedily rules out all its completions, and
// visiting symbols in ascending order makes the first failure the
// lexicographically first missing permutation.
bool walk_permutations(const StepTable& t, int n, std::vector<int>& prefix,
                       std::uint32_t used, std::int32_t pos, std::uint64_t& checked,
                       std::optional<std::vector<int>>& missing) {
    if (prefix.size() == static_cast<std::size_t>(n)) {
        ++checked;
        return true;
    }
    for (int v = 1; v <= n; ++v) {
        if (used & (std::uint32_t{1} << v)) continue;
        const std::int32_t np = t.step(v, pos);
        prefix.push_back(v);
        if (np == t.fail()) {
            missing = prefix;
            for (int w = 1; w <= n; ++w)
                if (w != v && !(used & (std::uint32_t{1} << w))) missing->push_back(w);
            return false;
        }
        if (!walk_permutations(t, n, prefix, used | (std::uint32_t{1} << v), np, checked,
                               missing))
            return false;
        prefix.pop_back();
    }
    return true;
}

}  // namespace

StringCheckResult string_contains_all_permutations(const std::vector<int>& s, int n,
                                                   int degree_cap) {
    if (n < 1)
        throw std::invalid_argument("degree must be positive");
    if (n > degree_cap)
        throw std::invalid_argument("degree " + std::to_string(n) +
                                    " exceeds the cap of " + std::to_string(degree_cap));
    for (int v : s)
        if (v < 1 || v > n)
            throw std::invalid_argument("string value outside [1, n]");

    StringCheckResult res;
    const StepTable t = StepTable::for_string(s, n);
    std::vector<int> prefix;
    prefix.reserve(static_cast<std::size_t>(n));
    std::optional<std::vector<int>> missing;
    res.all_contained = walk_permutations(t, n, prefix, 0, 0, res.checked, missing);
    if (missing)
        res.missing = std::move(*missing);
    return res;
}

}  // namespace rosary
