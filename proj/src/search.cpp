#include "rosary/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <memory>
#include <set>
#include <stdexcept>
#include <thread>

#include "rosary/constructions.hpp"
#include "rosary/kernels.hpp"

namespace rosary {

namespace {

// Deterministic across platforms, unlike std::shuffle.
struct SplitRng {
    std::uint64_t s;
    explicit SplitRng(std::uint64_t seed) : s(seed) {}
    std::uint64_t next() {
        s += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

std::vector<std::vector<int>> build_sample(int n, std::size_t size, std::uint64_t seed) {
    std::vector<std::vector<int>> sample;
    if (n <= 12 && factorial(n) <= size) {
        std::vector<int> p;
        for (int v = 1; v <= n; ++v) p.push_back(v);
        do sample.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
        return sample;
    }
    SplitRng rng(seed);
    std::set<std::vector<int>> seen;
    std::vector<int> p;
    for (int v = 1; v <= n; ++v) p.push_back(v);
    while (sample.size() < size) {
        for (std::size_t i = p.size() - 1; i > 0; --i)
            std::swap(p[i], p[rng.next() % (i + 1)]);
        if (seen.insert(p).second)
            sample.push_back(p);
    }
    return sample;
}

// Greedy match states of every tracked permutation against every window
// start of the growing candidate. Row j holds, per lane, how far lane's
// permutation has matched into candidate[j..depth). The expected-symbol
// mirror lets the advance kernel work on bytes; 0 marks a finished lane
// (no alphabet symbol is 0).
class Screen {
public:
    Screen(const std::vector<std::vector<int>>& sample, int n, std::size_t L)
        : n_(n),
          lanes_(static_cast<int>(sample.size())),
          stride_(sample.size()),
          kernel_(&dispatched_screen_kernel()) {
        perm_.assign(static_cast<std::size_t>(lanes_) * static_cast<std::size_t>(n), 0);
        for (int s = 0; s < lanes_; ++s)
            for (int k = 0; k < n; ++k)
                perm_[idx(s, k)] = static_cast<std::uint8_t>(sample[static_cast<std::size_t>(s)][static_cast<std::size_t>(k)]);
        state_.assign(L * stride_, 0);
        expected_.assign(L * stride_, 0);
        for (std::size_t row = 0; row < L; ++row)
            for (int s = 0; s < lanes_; ++s)
                expected_[row * stride_ + static_cast<std::size_t>(s)] = perm_[idx(s, 0)];
        trail_.resize(L + 1);
    }

    int lanes() const { return lanes_; }

    // Applies candidate[depth] = symbol to rows 0..depth.
    void push(std::size_t depth, int symbol) {
        auto& log = trail_[depth];
        log.clear();
        const auto sym = static_cast<std::uint8_t>(symbol);
        for (std::size_t row = 0; row <= depth; ++row) {
            std::uint8_t* st = state_.data() + row * stride_;
            std::uint8_t* ex = expected_.data() + row * stride_;
            const std::uint64_t hits = kernel_->advance(ex, st, lanes_, sym);
            if (!hits) continue;
            log.emplace_back(row, hits);
            for (std::uint64_t m = hits; m;) {
                const int s = __builtin_ctzll(m);
                m &= m - 1;
                const std::uint8_t ns = st[s];
                ex[s] = ns < n_ ? perm_[idx(s, ns)] : 0;
            }
        }
    }

    void pop(std::size_t depth) {
        for (const auto& [row, hits] : trail_[depth]) {
            std::uint8_t* st = state_.data() + row * stride_;
            std::uint8_t* ex = expected_.data() + row * stride_;
            for (std::uint64_t m = hits; m;) {
                const int s = __builtin_ctzll(m);
                m &= m - 1;
                ex[s] = perm_[idx(s, --st[s])];
            }
        }
        trail_[depth].clear();
    }

    // True when lane's permutation cannot be contained in any completion of
    // candidate[0..depth) to length L: every window start fails even with
    // the unwritten portion treated as wildcards. Exact at a full-length
    // candidate.
    bool lane_dead(int lane, const int* candidate, std::size_t depth, std::size_t L) const {
        const std::size_t R = L - depth;
        const std::size_t n = static_cast<std::size_t>(n_);
        if (R >= n) return false;

        const std::uint8_t* pperm = perm_.data() + idx(lane, 0);
        for (std::size_t j = 0; j < depth; ++j) {
            const std::size_t t1 = state_[j * stride_ + static_cast<std::size_t>(lane)];
            if (t1 + R >= n) return false;
            if (t1 + R + j < n) continue;  // wrap too short to finish
            std::size_t t = t1 + R;
            for (std::size_t i = 0; i < j && t < n; ++i)
                if (candidate[i] == pperm[t]) ++t;
            if (t == n) return false;
        }

        // Starts inside the unwritten region see (front wildcards, the whole
        // written prefix, back wildcards) with the two budgets summing to R.
        const std::size_t tmax = std::min(R, n);
        for (std::size_t t = 0; t <= tmax; ++t) {
            std::size_t g = 0;
            for (std::size_t i = 0; i < depth && t + g < n; ++i)
                if (candidate[i] == pperm[t + g]) ++g;
            if (t + g >= n || g + R >= n) return false;
        }
        return true;
    }

    int first_dead(const int* candidate, std::size_t depth, std::size_t L) const {
        for (int s = 0; s < lanes_; ++s)
            if (lane_dead(s, candidate, depth, L)) return s;
        return -1;
    }

private:
    std::size_t idx(int lane, int k) const {
        return static_cast<std::size_t>(lane) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(k);
    }

    int n_;
    int lanes_;
    std::size_t stride_;
    const ScreenKernel* kernel_;
    std::vector<std::uint8_t> perm_;
    std::vector<std::uint8_t> state_;
    std::vector<std::uint8_t> expected_;
    std::vector<std::vector<std::pair<std::size_t, std::uint64_t>>> trail_;
};

struct TaskCounters {
    std::uint64_t nodes = 0;
    std::uint64_t leaves = 0;
    std::uint64_t screened_out = 0;
    std::uint64_t verified = 0;
    bool stopped = false;  // budget cut this task short
};

struct TaskContext {
    const SearchConfig* cfg;
    std::size_t L;
    std::uint64_t node_quota;  // 0 = unlimited
    std::chrono::steady_clock::time_point deadline;
    bool has_deadline;

    std::vector<int> buf;
    std::vector<char> used_count;  // occurrences per value
    int missing_values;
    std::unique_ptr<Screen> screen;
    std::vector<Cycle> found;
    TaskCounters counters;

    bool out_of_budget() {
        if (node_quota && counters.nodes >= node_quota) return true;
        if (has_deadline && (counters.nodes & 1023u) == 0 &&
            std::chrono::steady_clock::now() >= deadline)
            return true;
        return false;
    }
};

void verify_candidate(TaskContext& t) {
    ++t.counters.leaves;
    if (t.screen) {
        if (t.screen->first_dead(t.buf.data(), t.L, t.L) >= 0) {
            ++t.counters.screened_out;
            return;
        }
    }
    ++t.counters.verified;
    VerifyConfig vc;
    vc.engine = t.cfg->engine;
    vc.threads = 1;
    vc.early_exit = true;
    vc.degree_cap = t.cfg->n;
    const Cycle cand = make_cycle(t.buf, t.cfg->n);
    if (verify_rosary(cand, t.cfg->n, vc).is_rosary)
        t.found.push_back(cand);
}

void dfs(TaskContext& t, std::size_t depth) {
    if (t.counters.stopped || t.found.size() >= t.cfg->max_results) return;
    if (depth == t.L) {
        verify_candidate(t);
        return;
    }
    const int n = t.cfg->n;
    const int prev = t.buf[depth - 1];
    const std::size_t remaining = t.L - depth;
    for (int v = 1; v <= n; ++v) {
        if (v == prev) continue;
        if (depth + 1 == t.L && v == t.buf[0]) continue;  // wrap duplicate
        const bool fresh = t.used_count[static_cast<std::size_t>(v)] == 0;
        if (static_cast<std::size_t>(t.missing_values - (fresh ? 1 : 0)) + 1 > remaining)
            continue;  // cannot cover the alphabet any more

        t.buf[depth] = v;
        ++t.used_count[static_cast<std::size_t>(v)];
        if (fresh) --t.missing_values;
        ++t.counters.nodes;
        if (t.screen) t.screen->push(depth, v);

        bool pruned = false;
        if (t.screen && depth + 1 < t.L) {
            if (t.screen->first_dead(t.buf.data(), depth + 1, t.L) >= 0) {
                ++t.counters.screened_out;
                pruned = true;
            }
        }
        if (!pruned) {
            if (t.out_of_budget())
                t.counters.stopped = true;
            else
                dfs(t, depth + 1);
        }

        if (t.screen) t.screen->pop(depth);
        if (fresh) ++t.missing_values;
        --t.used_count[static_cast<std::size_t>(v)];
        if (t.counters.stopped) return;
    }
}

}  // namespace

SearchOutcome search_rosaries(const SearchConfig& config) {
    const auto t0 = std::chrono::steady_clock::now();
    const int n = config.n;
    if (n < 2)
        throw std::invalid_argument("search needs degree >= 2");
    if (config.target_length < static_cast<std::size_t>(n))
        throw std::invalid_argument("target length below the degree cannot cover the alphabet");

    std::vector<int> prefix = config.prefix;
    if (prefix.empty())
        for (int v = 1; v <= n; ++v) prefix.push_back(v);
    for (int v : prefix)
        if (v < 1 || v > n)
            throw std::invalid_argument("prefix value outside [1, n]");
    if (prefix.size() > config.target_length)
        throw std::invalid_argument("prefix longer than the target length");

    const std::size_t L = config.target_length;
    const std::size_t depth0 = prefix.size();

    std::vector<std::vector<int>> sample;
    if (config.use_screen) {
        std::size_t want = std::min<std::size_t>(config.sample_size, 64);
        if (want == 0) want = 1;
        sample = build_sample(n, want, config.seed);
    }

    // One task per admissible symbol in the first free slot; tasks are
    // independent DFS runs merged in symbol order, so the outcome does not
    // depend on the thread count. A node budget is split evenly.
    struct TaskSeed {
        int symbol;  // -1: the prefix is already a full candidate
    };
    std::vector<TaskSeed> seeds;
    if (depth0 == L) {
        seeds.push_back({-1});
    } else {
        const int prev = prefix.back();
        for (int v = 1; v <= n; ++v) {
            if (v == prev) continue;
            if (depth0 + 1 == L && v == prefix[0]) continue;
            seeds.push_back({v});
        }
    }

    const auto deadline =
        t0 + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                 std::chrono::duration<double>(config.time_budget_s));

    std::vector<TaskContext> tasks(seeds.size());
    auto init_task = [&](std::size_t i) {
        TaskContext& t = tasks[i];
        t.cfg = &config;
        t.L = L;
        t.node_quota = config.node_budget
                           ? std::max<std::uint64_t>(1, config.node_budget / seeds.size())
                           : 0;
        t.has_deadline = config.time_budget_s > 0;
        t.deadline = deadline;
        t.buf.assign(L, 0);
        std::copy(prefix.begin(), prefix.end(), t.buf.begin());
        t.used_count.assign(static_cast<std::size_t>(n) + 1, 0);
        for (std::size_t k = 0; k < depth0; ++k) ++t.used_count[static_cast<std::size_t>(t.buf[k])];
        t.missing_values = 0;
        for (int v = 1; v <= n; ++v)
            if (!t.used_count[static_cast<std::size_t>(v)]) ++t.missing_values;
        if (config.use_screen) {
            t.screen = std::make_unique<Screen>(sample, n, L);
            for (std::size_t k = 0; k < depth0; ++k) t.screen->push(k, t.buf[k]);
        }
    };

    auto run_task = [&](std::size_t i) {
        TaskContext& t = tasks[i];
        const TaskSeed seed = seeds[i];
        if (seed.symbol < 0) {
            if (t.missing_values == 0 && (L < 2 || t.buf[L - 1] != t.buf[0]) &&
                [&] {
                    for (std::size_t k = 0; k + 1 < L; ++k)
                        if (t.buf[k] == t.buf[k + 1]) return false;
                    return true;
                }())
                verify_candidate(t);
            return;
        }
        const int v = seed.symbol;
        const bool fresh = t.used_count[static_cast<std::size_t>(v)] == 0;
        t.buf[depth0] = v;
        ++t.used_count[static_cast<std::size_t>(v)];
        if (fresh) --t.missing_values;
        ++t.counters.nodes;
        if (static_cast<std::size_t>(t.missing_values) > L - depth0 - 1) return;
        if (t.screen) {
            t.screen->push(depth0, v);
            if (depth0 + 1 < L &&
                t.screen->first_dead(t.buf.data(), depth0 + 1, L) >= 0) {
                ++t.counters.screened_out;
                return;
            }
        }
        if (depth0 + 1 == L)
            verify_candidate(t);
        else
            dfs(t, depth0 + 1);
    };

    int threads = config.threads > 0 ? config.threads : 1;
    if (static_cast<std::size_t>(threads) > seeds.size())
        threads = static_cast<int>(seeds.size());

    for (std::size_t i = 0; i < seeds.size(); ++i) init_task(i);
    if (threads <= 1) {
        for (std::size_t i = 0; i < seeds.size(); ++i) run_task(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < threads; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < tasks.size();
                     i = next.fetch_add(1))
                    run_task(i);
            });
        for (auto& th : pool) th.join();
    }

    SearchOutcome out;
    for (auto& t : tasks) {
        out.nodes += t.counters.nodes;
        out.leaves += t.counters.leaves;
        out.screened_out += t.counters.screened_out;
        out.verified += t.counters.verified;
        for (auto& c : t.found)
            if (out.found.size() < config.max_results)
                out.found.push_back(std::move(c));
    }
    const bool any_stopped =
        std::any_of(tasks.begin(), tasks.end(),
                    [](const TaskContext& t) { return t.counters.stopped; });
    const bool capped =
        std::any_of(tasks.begin(), tasks.end(), [&](const TaskContext& t) {
            return t.found.size() >= config.max_results;
        });
    out.exhausted = !any_stopped && !capped;
    out.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

namespace {

std::vector<int> first_occurrence_pattern(const std::vector<int>& seq, int degree) {
    std::vector<int> map(static_cast<std::size_t>(degree) + 1, 0);
    std::vector<int> out;
    out.reserve(seq.size());
    int next = 0;
    for (int v : seq) {
        if (!map[static_cast<std::size_t>(v)]) map[static_cast<std::size_t>(v)] = ++next;
        out.push_back(map[static_cast<std::size_t>(v)]);
    }
    return out;
}

}  // namespace

Cycle canonical_form(const Cycle& c) {
    const std::size_t r = c.length();
    std::vector<int> best;
    std::vector<int> probe;
    probe.reserve(r);
    for (int dir = 0; dir < 2; ++dir) {
        for (std::size_t start = 0; start < r; ++start) {
            probe.clear();
            for (std::size_t i = 0; i < r; ++i) {
                const std::size_t k = dir == 0 ? (start + i) % r : (start + r - i % r) % r;
                probe.push_back(c.values[k]);
            }
            std::vector<int> pat = first_occurrence_pattern(probe, c.degree);
            if (best.empty() || pat < best) best = std::move(pat);
        }
    }
    return Cycle{std::move(best), c.degree};
}

ExactResult exact_r(int n, bool allow_slow) {
    if (n < 2)
        throw std::invalid_argument("exact search needs degree >= 2");
    const int cap = allow_slow ? 5 : 4;
    if (n > cap)
        throw std::invalid_argument(
            "exact search for degree " + std::to_string(n) +
            " exceeds the cap of " + std::to_string(cap) +
            (allow_slow ? "" : " (pass the slow flag for degree 5)"));

    const std::size_t hard_stop = naive_rosary(n).length();
    ExactResult res;
    res.n = n;

    std::vector<int> buf;
    for (std::size_t L = static_cast<std::size_t>(n); L <= hard_stop; ++L) {
        buf.assign(L, 0);
        buf[0] = 1;
        std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
        used[1] = 1;
        int missing = n - 1;
        std::optional<Cycle> witness;

        // canonical representatives start with 1 and have no cyclically
        // adjacent duplicates; at the minimal length that loses nothing
        auto rec = [&](auto&& self, std::size_t depth) -> bool {
            if (depth == L) {
                const Cycle cand = make_cycle(buf, n);
                if (!std::equal(buf.begin(), buf.end(),
                                canonical_form(cand).values.begin()))
                    return false;
                ++res.candidates;
                VerifyConfig vc;
                vc.early_exit = true;
                vc.threads = 1;
                if (verify_rosary(cand, n, vc).is_rosary) {
                    witness = cand;
                    return true;
                }
                return false;
            }
            for (int v = 1; v <= n; ++v) {
                if (v == buf[depth - 1]) continue;
                if (depth + 1 == L && v == 1) continue;
                const bool fresh = !used[static_cast<std::size_t>(v)];
                if (static_cast<std::size_t>(missing - (fresh ? 1 : 0)) > L - depth - 1)
                    continue;
                buf[depth] = v;
                ++used[static_cast<std::size_t>(v)];
                if (fresh) --missing;
                const bool hit = self(self, depth + 1);
                if (fresh) ++missing;
                --used[static_cast<std::size_t>(v)];
                if (hit) return true;
            }
            return false;
        };

        if (L >= 2 && rec(rec, 1)) {
            res.length = L;
            res.witness = *witness;
            return res;
        }
    }
    throw std::logic_error("exact search overran the naive construction bound");
}

}  // namespace rosary
