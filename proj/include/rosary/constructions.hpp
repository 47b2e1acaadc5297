#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rosary/seq.hpp"

namespace rosary {

// The folklore rosary 1 (2..n)^{n-2} 2 of length n^2 - 3n + 4.
// naive_rosary(2) is the 2-cycle (1,2); n < 2 throws std::invalid_argument.
Cycle naive_rosary(int n);

// Even-degree template, length n^2/2:
//   n = 4k:    (1..n)^k (1, n, n-1, ..., 2)^k
//   n = 4k+2:  (1..n)^{k+1} (1, n, n-1, ..., 2)^k
// Requires even n >= 4.
Cycle even_degree_rosary(int n);

// Odd-degree template, length below n^2/2 + n/4 - 1:
//   n = 4k+1:  (1..n)^k (1..3k)   (n..1)^{k-1} (n..2)   length 2kn + 3k - 1
//   n = 4k+3:  (1..n)^k (1..3k+2) (n..1)^k     (n..2)   length (2k+1)n + 3k + 1
// Requires odd n >= 5. Zero-repetition factors are empty (k=1 for n=5).
Cycle odd_degree_rosary(int n);

// Named fixed sequences: the four hand-drawn rosaries of degrees 2..5
// ("fig1-n2".."fig1-n5"), the degree-6 length-17 rosary ("fig2-n6") and ten
// more of the same length ("list-n6-01".."list-n6-10"), a degree-8 length-31
// rosary ("n8-31"), and the two long cycles used by the counterexample
// analysis ("cx-n21", "cx-n33"). Unknown keys throw std::invalid_argument.
Cycle catalog(std::string_view key);
std::vector<std::string> catalog_keys();

// FNV-1a over the canonical text serialization of every catalog entry, in
// key order. Embedded in --version so golden tests catch data drift.
std::uint64_t catalog_checksum();

// A pattern/cycle pair for which containment is claimed to fail.
// which = "n21": degree-21 permutation vs the length-221 cycle cx-n21
//       = "n33": degree-33 permutation vs the length-544 cycle cx-n33
struct CounterexampleInstance {
    std::string name;
    Permutation pattern;
    Cycle cycle;
};

CounterexampleInstance counterexample_instance(std::string_view which);

// Known length bounds per degree. Absent fields do not apply to that degree.
struct BoundsRow {
    int n = 0;
    std::uint64_t naive_length = 0;
    std::optional<std::uint64_t> theorem_length;
    std::optional<std::uint64_t> catalog_length;  // best verified catalog rosary
    double conjecture_target = 0.0;               // n^2 / 2
    std::optional<double> odd_bound;              // n^2/2 + n/4 - 1, odd n only
};

// Rows for every n in [2, n_max].
std::vector<BoundsRow> bounds_table(int n_max);

}  // namespace rosary
