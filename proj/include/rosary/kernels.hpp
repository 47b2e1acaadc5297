#pragma once

#include <cstdint>
#include <vector>

#include "rosary/table.hpp"

namespace rosary {

// Hot loops exist in a scalar reference build and, where the host supports
// it, a vector build. The active variant is picked once at startup from CPU
// feature bits; every variant must produce bit-identical results (the kernel
// test suite drives them against each other on the same inputs).

// Finds the smallest start j in [0, t.window()) such that the pattern is a
// subsequence of the one-loop window of the doubled-text table t starting at
// j. Returns -1 when no start works.
using FindStartFn = int (*)(const StepTable& t, const int* pattern, int len);

struct MatchKernel {
    const char* name;
    FindStartFn find_start;
};

// Advances one step of the search screen: lanes hold one byte per tracked
// pattern; each lane whose expected byte equals `symbol` has its state
// incremented, and the caller refreshes those expected bytes afterwards.
// Returns a bitmask of the lanes that advanced (lane i -> bit i).
using ScreenAdvanceFn = std::uint64_t (*)(const std::uint8_t* expected,
                                          std::uint8_t* state,
                                          int lanes,
                                          std::uint8_t symbol);

struct ScreenKernel {
    const char* name;
    ScreenAdvanceFn advance;
};

const MatchKernel& scalar_match_kernel();
const ScreenKernel& scalar_screen_kernel();

// The preferred kernels for this host (vector variant when available,
// otherwise the scalar reference).
const MatchKernel& dispatched_match_kernel();
const ScreenKernel& dispatched_screen_kernel();

// All variants compiled into this binary and usable on this host, scalar
// reference first.
std::vector<const MatchKernel*> available_match_kernels();
std::vector<const ScreenKernel*> available_screen_kernels();

namespace detail {
// Defined in the vector translation unit on x86-64 builds; null elsewhere.
const MatchKernel* avx2_match_kernel();
const ScreenKernel* avx2_screen_kernel();
bool cpu_has_avx2();
}  // namespace detail

}  // namespace rosary
