#pragma once

#include <cstdint>
#include <vector>

#include "rosary/seq.hpp"

namespace rosary {

// The ascent/descent code of a sequence. Bit i is 1 iff the element after
// position i is >= the element at position i ("ties are ascents"). A cyclic
// code of a length-r cycle has r bits (the last one compares the final
// element with the first); a string code of a length-r string has r-1.
struct Code {
    std::vector<std::uint8_t> bits;
    bool cyclic = false;

    std::size_t ones() const;
    std::size_t zeros() const;
};

// Requires length >= 2.
Code code_of_cycle(const Cycle& c);
Code code_of_string(const std::vector<int>& s);

// The gap decomposition of a cyclic code: writing the code from its anchor
// (the first 1-bit in the stored rotation) as 1 0^{lambda_1} 1 0^{lambda_2}
// ... 1 0^{lambda_x}, lambdas[i] counts the zeros after the (i+1)-th 1-bit.
// ones = x, zeros = y, and the lambdas sum to y.
struct LambdaDecomposition {
    std::size_t ones = 0;       // x
    std::size_t zeros = 0;      // y
    std::size_t anchor = 0;     // 0-based index of the first 1-bit
    std::vector<std::size_t> lambdas;
};

// Requires a cyclic code with at least one 1-bit.
LambdaDecomposition lambda_decomposition(const Code& code);

// A maximal monotone run of a cycle, by 0-based start index and element
// count. Extent may wrap past the stored end.
struct Block {
    std::size_t start = 0;
    std::size_t length = 0;
};

// Maximal increasing and decreasing blocks of a cycle, each listed in
// cycle-position order of their start.
//
// A maximal decreasing block is a run a_j > a_{j+1} > ... > a_{j+k} that
// cannot be extended on either side; equivalently, one block per 1-bit of
// the cyclic code, starting at the element right after that ascent and
// spanning the following run of 0-bits. Single-element blocks are real:
// an element with ascents on both sides is a decreasing block of length 1.
// Dually for increasing blocks (one per 0-bit). So for a permutation-cycle
// there are exactly x decreasing and y increasing blocks, and the decreasing
// block lengths are exactly {lambda_i + 1}.
//
// Every element belongs to exactly one block of each kind; adjacent blocks
// of opposite kinds overlap in their shared boundary element.
//
// A constant cycle (all-ones code) is a single increasing block.
struct BlockDecomposition {
    std::vector<Block> increasing;
    std::vector<Block> decreasing;
};

// Requires length >= 2.
BlockDecomposition maximal_blocks(const Cycle& c);

// The element values of a block, in run order.
std::vector<int> block_values(const Cycle& c, const Block& b);

// Counts of maximal monotone runs of the sequence read as a string (no
// wrap): runs of consecutive ascent edges and of consecutive descent edges.
// Unlike the cyclic convention these do not count singleton blocks, so a
// plot of the sequence shows exactly these segments.
struct StringRunCounts {
    std::size_t increasing = 0;
    std::size_t decreasing = 0;
};

StringRunCounts string_run_counts(const std::vector<int>& s);

}  // namespace rosary
