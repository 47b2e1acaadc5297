#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rosary/seq.hpp"

namespace rosary {

// Matching engine selection. All engines implement the same contract and are
// required (and tested) to agree verdict-for-verdict, including the leftmost
// start index.
//
//   naive      per-start greedy scan over the rotated cycle, the reference
//   nexttable  greedy walk of a next-occurrence table over the doubled text
//   simd       the nexttable walk over 8 start positions per instruction;
//              falls back to nexttable when the host lacks the vector unit
//   automatic  simd when available, else nexttable
enum class Engine {
    naive,
    nexttable,
    simd,
    automatic,
};

std::string engine_name(Engine e);                  // resolved name for reports
std::optional<Engine> parse_engine(std::string_view name);
Engine resolve_engine(Engine e);                    // automatic/simd -> what actually runs

// Greedy leftmost subsequence test on plain strings.
bool string_contains(const std::vector<int>& text, const std::vector<int>& pattern);

// One-loop containment: the pattern is contained iff for some 0-based start
// j it is a subsequence of the exactly-r-element linearization c_j, c_{j+1},
// ..., c_{j+r-1}. The reported start is the smallest such j.
struct ContainmentVerdict {
    bool contained = false;
    std::optional<std::size_t> start;     // leftmost witness
    std::optional<std::size_t> rotation;  // set by cyclic_contains
};

// Requires every pattern value in [1, c.degree]. The pattern is an arbitrary
// value sequence; permutations are the interesting case.
ContainmentVerdict cycle_contains(const Cycle& c, const std::vector<int>& pattern,
                                  Engine engine = Engine::automatic);

// True iff some rotation of a is contained in c; reports the smallest
// rotation offset that works and its leftmost start. This is the weaker,
// lemma-style notion: it does not by itself certify anything about other
// rotations (though see the rotation-invariance property test).
ContainmentVerdict cyclic_contains(const Cycle& c, const Cycle& a,
                                   Engine engine = Engine::automatic);

// --- full verification ------------------------------------------------------

struct VerifyConfig {
    Engine engine = Engine::automatic;
    int threads = 0;               // 0 = default (env override, else hardware)
    std::size_t witness_cap = 16;  // missing permutations retained in the report
    bool early_exit = false;       // stop each worker at its first miss
    int degree_cap = 10;           // refuse n! enumerations beyond this n
};

// Outcome of checking every permutation of {1..n} against a cycle.
// `missing` holds the lexicographically first witnesses (up to the cap);
// missing_total is always the exact count. Under early_exit, checked and
// missing_total only cover what was scanned before workers stopped.
struct RosaryReport {
    int n = 0;
    std::size_t length = 0;
    bool is_rosary = false;
    std::uint64_t checked = 0;
    std::uint64_t missing_total = 0;
    std::vector<std::vector<int>> missing;
    double elapsed_ms = 0.0;
    std::string engine;
    int threads = 1;
};

// Decides whether c is a rosary of degree n by enumerating all n!
// permutation strings in lexicographic order. Work is split into contiguous
// lexicographic ranges; the merged report is identical for any worker count
// (early_exit aside, where `checked` depends on the split).
RosaryReport verify_rosary(const Cycle& c, int n, const VerifyConfig& config = {});

// Convenience wrapper.
bool is_rosary(const Cycle& c, int n);

// All-permutations test for plain strings (the superstring side of the
// doubling bound). Returns the lexicographically first missing permutation
// if any.
struct StringCheckResult {
    bool all_contained = false;
    std::uint64_t checked = 0;
    std::optional<std::vector<int>> missing;
};

StringCheckResult string_contains_all_permutations(const std::vector<int>& s, int n,
                                                   int degree_cap = 10);

// Rank-based helpers for splitting the lexicographic enumeration.
std::uint64_t factorial(int n);
std::vector<int> permutation_at_rank(int n, std::uint64_t rank);

}  // namespace rosary
