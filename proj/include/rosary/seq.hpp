#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rosary {

// A cyclic sequence over the alphabet {1..degree}. The element order is the
// clockwise reading; values[0] is just the stored anchor, two cycles that are
// rotations of each other are equal as cycles (see rotation_equal).
//
// Repeats are allowed. Length-1 cycles are representable as data but rejected
// by the structural operations (code, blocks), which need at least two
// elements to compare.
struct Cycle {
    std::vector<int> values;
    int degree = 0;  // alphabet size n; every value lies in [1, degree]

    std::size_t length() const { return values.size(); }
};

// A permutation of {1..n}, stored one-line: values[i] is the image of i+1 in
// the usual reading, i.e. simply the sequence a_1..a_n. Construction checks
// bijectivity.
struct Permutation {
    std::vector<int> values;

    std::size_t size() const { return values.size(); }
    Cycle as_cycle() const;
};

// Validating constructors. Throw std::invalid_argument on bad input.
Cycle make_cycle(std::vector<int> values, int degree);
Cycle make_cycle(std::vector<int> values);  // degree = max value
Permutation make_permutation(std::vector<int> values);

// The cycle that starts at 0-based index `start` of c (taken mod the length,
// indexing being cyclic). rotate(c, 0) == c.
Cycle rotate(const Cycle& c, std::size_t start);

// Applies sigma to every element: value v becomes sigma[v-1].
// sigma must be a permutation of {1..c.degree}.
Cycle relabel(const Cycle& c, const Permutation& sigma);

// Reverses the reading direction (the stored anchor element stays first).
Cycle reverse(const Cycle& c);

// True iff a and b have the same degree and their value lists are cyclic
// rotations of each other.
bool rotation_equal(const Cycle& a, const Cycle& b);

// --- text format ------------------------------------------------------------
//
// One sequence per line, comma-separated 1-based values. '#' starts a comment
// running to end of line; blank lines are skipped. Whitespace around values
// is tolerated on input and never produced on output.

std::vector<std::vector<int>> parse_sequences(std::istream& in);
std::vector<std::vector<int>> parse_sequences(std::string_view text);

// Parses a single comma-separated value list ("1,2,3"). Throws on anything
// that is not a plain list of positive integers.
std::vector<int> parse_value_list(std::string_view text);

std::string format_sequence(const std::vector<int>& values);

}  // namespace rosary
