#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rosary/code.hpp"
#include "rosary/containment.hpp"
#include "rosary/seq.hpp"

namespace rosary {

// Window predicate over the cyclic lambda vector: the smallest 0-based index
// i such that lambdas[i+1] + ... + lambdas[i+K] (indices mod x) >= y - M + 1.
// Requires 1 <= K <= x and M >= 1. Note the window starts after i.
std::optional<std::size_t> window_predicate(const LambdaDecomposition& ld,
                                            std::size_t K, std::size_t M);

// The target cycle (1..n)^{M-1} (1..n-1) (n..1)^{K-1} (n..2) whose one-loop
// readings absorb any permutation-cycle satisfying the window predicate.
Cycle window_predicate_target(int n, std::size_t K, std::size_t M);

struct LuckyQuery {
    std::size_t K = 1;
    std::size_t M = 1;
    std::size_t N = 1;  // value ceiling
};

// The 0-based indices i that are (K,M,N)-lucky for the permutation-cycle p:
// the K-window after i sums to at least y - M (one less than the window
// predicate's threshold) and the last element of the maximal decreasing
// block belonging to part i — the value p[q_i + lambda_i + 1] where q_i is
// the code position of the i-th 1-bit — is at most N. That element is the
// block's minimum and can never be n for a permutation-cycle, so N = n-1
// already admits every block end. Requires 1 <= K <= x, M >= 1, N >= 1.
std::vector<std::size_t> lucky_indices(const Permutation& p, const LuckyQuery& q);

// The target cycle (1..n)^M (1..N) (n..1)^K for lucky permutations (M may
// be 0 here).
Cycle lucky_target(int n, std::size_t M, std::size_t N, std::size_t K);

// The value tested by the lucky ceiling: the end of 0-based part i's maximal
// decreasing block.
int part_block_end(const Permutation& p, const LambdaDecomposition& ld, std::size_t i);

// One predicate evaluation cross-checked against the containment it
// promises. `consistent` is fired -> confirmed; a fired-but-unconfirmed
// record would witness a defect in the predicate, the target, or the
// matcher.
struct LemmaCheck {
    bool applicable = false;  // K <= x held, predicate evaluated
    bool fired = false;
    std::optional<std::size_t> index;  // first firing / first lucky index
    Cycle target;
    bool confirmed = false;  // cyclic containment verified against target
    bool consistent = true;
};

LemmaCheck check_window_predicate(const Permutation& p, std::size_t K, std::size_t M,
                                  Engine engine = Engine::automatic);
LemmaCheck check_lucky(const Permutation& p, const LuckyQuery& q,
                       Engine engine = Engine::automatic);

}  // namespace rosary
