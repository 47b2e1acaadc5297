#include "rosary/constructions.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace rosary {

namespace {

// Appends the run a..b (ascending when a <= b, else descending), k times.
void append_run(std::vector<int>& out, int a, int b, int k = 1) {
    for (int rep = 0; rep < k; ++rep) {
        if (a <= b)
            for (int v = a; v <= b; ++v) out.push_back(v);
        else
            for (int v = a; v >= b; --v) out.push_back(v);
    }
}

Cycle run_cycle(int degree, std::vector<int> values) {
    return make_cycle(std::move(values), degree);
}

const std::map<std::string, Cycle, std::less<>>& catalog_map() {
    static const std::map<std::string, Cycle, std::less<>> entries = [] {
        std::map<std::string, Cycle, std::less<>> m;
        m.emplace("fig1-n2", run_cycle(2, {1, 2}));
        m.emplace("fig1-n3", run_cycle(3, {1, 2, 1, 3}));
        m.emplace("fig1-n4", run_cycle(4, {1, 2, 3, 4, 1, 4, 3, 2}));
        m.emplace("fig1-n5", run_cycle(5, {1, 2, 3, 4, 5, 4, 3, 2, 1, 5, 4, 5}));
        m.emplace("fig2-n6", run_cycle(6, {1, 2, 3, 4, 5, 6, 1, 3, 4, 5, 6, 2, 1, 6, 5, 4, 3}));
        m.emplace("list-n6-01", run_cycle(6, {1, 2, 3, 4, 5, 6, 1, 2, 1, 5, 6, 4, 3, 1, 2, 6, 5}));
        m.emplace("list-n6-02", run_cycle(6, {1, 2, 3, 4, 5, 6, 1, 2, 3, 5, 6, 4, 3, 2, 1, 6, 5}));
        m.emplace("list-n6-03", run_cycle(6, {1, 2, 3, 4, 5, 6, 1, 2, 4, 5, 6, 3, 1, 2, 6, 5, 4}));
        m.emplace("list-n6-04", run_cycle(6, {1, 2, 3, 4, 5, 6, 1, 3, 2, 5, 4, 3, 2, 1, 6, 4, 5}));
        m.emplace("list-n6-05", run_cycle(6, {1, 2, 3, 4, 5, 6, 1, 3, 4, 2, 1, 6, 5, 4, 3, 5, 6}));
        m.emplace("list-n6-06", run_cycle(6, {1, 2, 3, 4, 5, 6, 1, 3, 5, 6, 4, 2, 1, 6, 5, 4, 3}));
        m.emplace("list-n6-07", run_cycle(6, {1, 2, 3, 4, 5, 6, 1, 3, 6, 5, 4, 2, 1, 6, 5, 4, 3}));
        m.emplace("list-n6-08", run_cycle(6, {1, 2, 3, 4, 5, 6, 1, 4, 3, 2, 1, 6, 5, 2, 3, 4, 6}));
        m.emplace("list-n6-09", run_cycle(6, {1, 2, 3, 4, 5, 6, 1, 4, 5, 3, 2, 1, 6, 2, 3, 5, 4}));
        m.emplace("list-n6-10", run_cycle(6, {1, 2, 3, 4, 5, 6, 1, 5, 4, 3, 6, 2, 1, 6, 3, 4, 5}));
        m.emplace("n8-31",
                  run_cycle(8, {1, 2, 3, 4, 5, 6, 7, 8, 1, 2, 3, 4, 5, 6, 7, 8, 6, 5, 4,
                                3, 2, 1, 7, 6, 5, 4, 3, 2, 1, 8, 7}));
        {
            // (1..21)^5 (1..12) (21..1)^4 (21..2), length 221
            std::vector<int> v;
            append_run(v, 1, 21, 5);
            append_run(v, 1, 12);
            append_run(v, 21, 1, 4);
            append_run(v, 21, 2);
            m.emplace("cx-n21", run_cycle(21, std::move(v)));
        }
        {
            // (1..33)^8 (1..17) (33..1)^7 (33..2), length 544
            std::vector<int> v;
            append_run(v, 1, 33, 8);
            append_run(v, 1, 17);
            append_run(v, 33, 1, 7);
            append_run(v, 33, 2);
            m.emplace("cx-n33", run_cycle(33, std::move(v)));
        }
        return m;
    }();
    return entries;
}

}  // namespace

Cycle naive_rosary(int n) {
    if (n < 2)
        throw std::invalid_argument("naive rosary needs degree >= 2");
    if (n == 2)
        return run_cycle(2, {1, 2});
    std::vector<int> v{1};
    append_run(v, 2, n, n - 2);
    v.push_back(2);
    return make_cycle(std::move(v), n);
}

Cycle even_degree_rosary(int n) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("even-degree template needs n = 4k or n = 4k+2 with n >= 4");
    std::vector<int> v;
    if (n % 4 == 0) {
        const int k = n / 4;
        append_run(v, 1, n, k);
        for (int rep = 0; rep < k; ++rep) {
            v.push_back(1);
            append_run(v, n, 2);
        }
    } else {
        const int k = (n - 2) / 4;
        append_run(v, 1, n, k + 1);
        for (int rep = 0; rep < k; ++rep) {
            v.push_back(1);
            append_run(v, n, 2);
        }
    }
    return make_cycle(std::move(v), n);
}

Cycle odd_degree_rosary(int n) {
    if (n < 5 || n % 2 != 1)
        throw std::invalid_argument("odd-degree template needs n = 4k+1 or n = 4k+3 with n >= 5");
    std::vector<int> v;
    if (n % 4 == 1) {
        const int k = n / 4;
        append_run(v, 1, n, k);
        append_run(v, 1, 3 * k);
        append_run(v, n, 1, k - 1);
        append_run(v, n, 2);
    } else {
        const int k = (n - 3) / 4;
        append_run(v, 1, n, k);
        append_run(v, 1, 3 * k + 2);
        append_run(v, n, 1, k);
        append_run(v, n, 2);
    }
    return make_cycle(std::move(v), n);
}

Cycle catalog(std::string_view key) {
    const auto& m = catalog_map();
    const auto it = m.find(key);
    if (it == m.end())
        throw std::invalid_argument("unknown catalog key '" + std::string(key) + "'");
    return it->second;
}

std::vector<std::string> catalog_keys() {
    std::vector<std::string> keys;
    for (const auto& [k, v] : catalog_map()) keys.push_back(k);
    return keys;
}

std::uint64_t catalog_checksum() {
    std::uint64_t h = 14695981039346656037ull;
    auto mix = [&h](std::string_view s) {
        for (char ch : s) {
            h ^= static_cast<unsigned char>(ch);
            h *= 1099511628211ull;
        }
    };
    for (const auto& [key, cycle] : catalog_map()) {
        mix(key);
        mix(":");
        mix(format_sequence(cycle.values));
        mix("\n");
    }
    return h;
}

CounterexampleInstance counterexample_instance(std::string_view which) {
    if (which == "n21") {
        return CounterexampleInstance{
            "n21",
            make_permutation({1, 5, 4, 3, 18, 17, 19, 20, 21, 6, 9, 8, 7, 12, 11, 10, 13,
                              14, 15, 16, 2}),
            catalog("cx-n21")};
    }
    if (which == "n33") {
        return CounterexampleInstance{
            "n33",
            make_permutation({1,  5,  4,  3,  2,  7,  6,  11, 10, 9,  8,  18, 19, 20, 21,
                              22, 23, 14, 13, 12, 25, 24, 26, 17, 16, 15, 28, 27, 29, 30,
                              31, 32, 33}),
            catalog("cx-n33")};
    }
    throw std::invalid_argument("unknown counterexample '" + std::string(which) +
                                "' (expected n21 or n33)");
}

std::vector<BoundsRow> bounds_table(int n_max) {
    if (n_max < 2)
        throw std::invalid_argument("bounds table needs n_max >= 2");
    // best verified catalog rosary per degree
    static const std::map<int, std::uint64_t> catalog_best{
        {2, 2}, {3, 4}, {4, 8}, {5, 12}, {6, 17}, {8, 31}};

    std::vector<BoundsRow> rows;
    for (int n = 2; n <= n_max; ++n) {
        BoundsRow row;
        row.n = n;
        row.naive_length =
            n == 2 ? 2
                   : static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n) -
                         3 * static_cast<std::uint64_t>(n) + 4;
        const auto nn = static_cast<double>(n);
        row.conjecture_target = nn * nn / 2.0;
        if (n % 2 == 0 && n >= 4) {
            row.theorem_length = static_cast<std::uint64_t>(n) *
                                 static_cast<std::uint64_t>(n) / 2;
        } else if (n % 2 == 1 && n >= 5) {
            const std::uint64_t k = static_cast<std::uint64_t>(n) / 4;
            row.theorem_length = n % 4 == 1 ? 8 * k * k + 5 * k - 1
                                            : 8 * k * k + 13 * k + 4;
        }
        if (n % 2 == 1)
            row.odd_bound = nn * nn / 2.0 + nn / 4.0 - 1.0;
        if (const auto it = catalog_best.find(n); it != catalog_best.end())
            row.catalog_length = it->second;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace rosary
