#include "rosary/lemmas.hpp"

#include <stdexcept>

namespace rosary {

namespace {

void check_query(const LambdaDecomposition& ld, std::size_t K, std::size_t M) {
    if (K < 1 || K > ld.ones)
        throw std::invalid_argument("window width K must lie in [1, x]");
    if (M < 1)
        throw std::invalid_argument("M must be at least 1");
}

void append_run(std::vector<int>& out, int a, int b, std::size_t k = 1) {
    for (std::size_t rep = 0; rep < k; ++rep) {
        if (a <= b)
            for (int v = a; v <= b; ++v) out.push_back(v);
        else
            for (int v = a; v >= b; --v) out.push_back(v);
    }
}

}  // namespace

std::optional<std::size_t> window_predicate(const LambdaDecomposition& ld,
                                            std::size_t K, std::size_t M) {
    check_query(ld, K, M);
    const std::size_t x = ld.ones;
    // threshold y - M + 1, evaluated without unsigned underflow
    for (std::size_t i = 0; i < x; ++i) {
        std::size_t sum = 0;
        for (std::size_t t = 1; t <= K; ++t)
            sum += ld.lambdas[(i + t) % x];
        if (sum + M >= ld.zeros + 1)
            return i;
    }
    return std::nullopt;
}

Cycle window_predicate_target(int n, std::size_t K, std::size_t M) {
    if (n < 2)
        throw std::invalid_argument("target needs degree >= 2");
    if (K < 1 || M < 1)
        throw std::invalid_argument("K and M must be at least 1");
    std::vector<int> v;
    append_run(v, 1, n, M - 1);
    append_run(v, 1, n - 1);
    append_run(v, n, 1, K - 1);
    append_run(v, n, 2);
    return make_cycle(std::move(v), n);
}

std::vector<std::size_t> lucky_indices(const Permutation& p, const LuckyQuery& q) {
    const LambdaDecomposition ld = lambda_decomposition(code_of_cycle(p.as_cycle()));
    check_query(ld, q.K, q.M);
    if (q.N < 1)
        throw std::invalid_argument("N must be at least 1");

    const std::size_t x = ld.ones;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < x; ++i) {
        std::size_t sum = 0;
        for (std::size_t t = 1; t <= q.K; ++t)
            sum += ld.lambdas[(i + t) % x];
        if (sum + q.M < ld.zeros)  // window sum >= y - M
            continue;
        if (part_block_end(p, ld, i) <= static_cast<int>(q.N))
            out.push_back(i);
    }
    return out;
}

Cycle lucky_target(int n, std::size_t M, std::size_t N, std::size_t K) {
    if (n < 2)
        throw std::invalid_argument("target needs degree >= 2");
    if (K < 1 || N < 1 || N > static_cast<std::size_t>(n))
        throw std::invalid_argument("need K >= 1 and N in [1, n]");
    std::vector<int> v;
    append_run(v, 1, n, M);
    append_run(v, 1, static_cast<int>(N));
    append_run(v, n, 1, K);
    return make_cycle(std::move(v), n);
}

int part_block_end(const Permutation& p, const LambdaDecomposition& ld, std::size_t i) {
    if (i >= ld.ones)
        throw std::invalid_argument("part index out of range");
    const std::size_t n = p.size();
    // code position of part i's 1-bit: anchor plus the preceding parts' extents
    std::size_t q = ld.anchor;
    for (std::size_t t = 0; t < i; ++t)
        q += 1 + ld.lambdas[t];
    // the part's decreasing block covers elements q+1 .. q+lambda_i+1
    return p.values[(q + ld.lambdas[i] + 1) % n];
}

LemmaCheck check_window_predicate(const Permutation& p, std::size_t K, std::size_t M,
                                  Engine engine) {
    LemmaCheck ck;
    const LambdaDecomposition ld = lambda_decomposition(code_of_cycle(p.as_cycle()));
    if (K < 1 || K > ld.ones)
        return ck;  // out of the predicate's domain
    ck.applicable = true;
    ck.target = window_predicate_target(static_cast<int>(p.size()), K, M);
    ck.index = window_predicate(ld, K, M);
    ck.fired = ck.index.has_value();
    if (ck.fired) {
        ck.confirmed = cyclic_contains(ck.target, p.as_cycle(), engine).contained;
        ck.consistent = ck.confirmed;
    }
    return ck;
}

LemmaCheck check_lucky(const Permutation& p, const LuckyQuery& q, Engine engine) {
    LemmaCheck ck;
    const LambdaDecomposition ld = lambda_decomposition(code_of_cycle(p.as_cycle()));
    if (q.K < 1 || q.K > ld.ones)
        return ck;
    ck.applicable = true;
    ck.target = lucky_target(static_cast<int>(p.size()), q.M, q.N, q.K);
    const auto lucky = lucky_indices(p, q);
    ck.fired = !lucky.empty();
    if (ck.fired) {
        ck.index = lucky.front();
        ck.confirmed = cyclic_contains(ck.target, p.as_cycle(), engine).contained;
        ck.consistent = ck.confirmed;
    }
    return ck;
}

}  // namespace rosary
