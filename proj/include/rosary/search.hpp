#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rosary/containment.hpp"
#include "rosary/seq.hpp"

namespace rosary {

struct SearchConfig {
    int n = 0;
    std::size_t target_length = 0;
    std::vector<int> prefix;       // empty = identity (1..n)
    std::uint64_t seed = 1;        // screen sample selection
    std::size_t sample_size = 64;  // tracked permutations in the screen
    bool use_screen = true;
    std::size_t max_results = 16;
    std::uint64_t node_budget = 0;  // 0 = unlimited
    double time_budget_s = 0.0;     // 0 = unlimited
    int threads = 1;
    Engine engine = Engine::automatic;
};

struct SearchOutcome {
    std::vector<Cycle> found;      // verified rosaries, in discovery order
    std::uint64_t nodes = 0;       // DFS symbol placements
    std::uint64_t leaves = 0;      // complete candidates reached
    std::uint64_t screened_out = 0;
    std::uint64_t verified = 0;    // full verifications run
    bool exhausted = false;        // constrained space fully explored
    double elapsed_s = 0.0;
};

// Depth-first completion of the prefix to cycles of exactly target_length.
// Branching skips symbols equal to the previous element, the wrap pair
// (last == first) is excluded, and branches that cannot reach full alphabet
// coverage are cut; any rosary lost to these rules has a cyclically
// adjacent duplicate and therefore a shorter rosary inside it, so the
// search still decides "is there a rosary this short".
//
// A deterministic sample of permutations is tracked greedily during the
// descent; a branch is pruned only when some tracked permutation provably
// cannot be contained in any completion (wildcard-optimistic bound), so no
// candidate that verifies is ever lost. Survivors of the screen get the
// full n! verification.
//
// Results are deterministic for a fixed config, including across thread
// counts: top-level branches are split by first free symbol and merged in
// symbol order.
SearchOutcome search_rosaries(const SearchConfig& config);

// The lexicographically least string among every rotation and reflection of
// c, each relabeled by first occurrence (the first element becomes 1, the
// next new value 2, ...). Orbits of the rotate/relabel/reverse group share
// a canonical form, and verify_rosary is invariant on orbits.
Cycle canonical_form(const Cycle& c);

struct ExactResult {
    int n = 0;
    std::size_t length = 0;   // least L admitting a rosary of degree n
    Cycle witness;            // lexicographically least canonical witness
    std::uint64_t candidates = 0;
};

// Minimal rosary length by exhaustive canonical-form enumeration in
// increasing L. Enumeration is restricted to cyclically duplicate-free
// candidates, which is lossless at the minimal length. degree_cap guards
// the combinatorial blowup (n = 5 is already minutes of work; pass
// allow_slow to go beyond the default cap of 4).
ExactResult exact_r(int n, bool allow_slow = false);

}  // namespace rosary
