#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdint>
#include <fstream>
#include <set>

#include "doctest.h"
#include "rosary/constructions.hpp"
#include "rosary/containment.hpp"

using namespace rosary;

namespace {

std::vector<int> vec(std::initializer_list<int> v) { return std::vector<int>(v); }

constexpr std::uint64_t kCatalogChecksum = 0xa1cc6a5f2424fe66ull;

}  // namespace

TEST_CASE("naive template expands exactly") {
    CHECK(naive_rosary(2).values == vec({1, 2}));
    CHECK(naive_rosary(3).values == vec({1, 2, 3, 2}));
    CHECK(naive_rosary(4).values == vec({1, 2, 3, 4, 2, 3, 4, 2}));
    CHECK(naive_rosary(5).values == vec({1, 2, 3, 4, 5, 2, 3, 4, 5, 2, 3, 4, 5, 2}));
    for (int n = 2; n <= 12; ++n)
        CHECK(naive_rosary(n).length() ==
              (n == 2 ? 2u : static_cast<std::size_t>(n) * n - 3u * n + 4u));
    CHECK_THROWS_AS(naive_rosary(1), std::invalid_argument);
}

TEST_CASE("even-degree template expands exactly") {
    CHECK(even_degree_rosary(4).values == vec({1, 2, 3, 4, 1, 4, 3, 2}));
    CHECK(even_degree_rosary(6).values ==
          vec({1, 2, 3, 4, 5, 6, 1, 2, 3, 4, 5, 6, 1, 6, 5, 4, 3, 2}));
    for (int n = 4; n <= 12; n += 2)
        CHECK(even_degree_rosary(n).length() == static_cast<std::size_t>(n) * n / 2);
    CHECK_THROWS_AS(even_degree_rosary(5), std::invalid_argument);
    CHECK_THROWS_AS(even_degree_rosary(2), std::invalid_argument);
}

TEST_CASE("odd-degree template expands exactly") {
    // n = 4k+1, k=1: one full climb, a climb to 3k, no full descents, n..2
    CHECK(odd_degree_rosary(5).values == vec({1, 2, 3, 4, 5, 1, 2, 3, 5, 4, 3, 2}));
    CHECK(odd_degree_rosary(5).length() == 12);
    CHECK(odd_degree_rosary(7).length() == 25);
    CHECK(odd_degree_rosary(9).length() == 41);
    CHECK(odd_degree_rosary(11).length() == 62);
    CHECK(odd_degree_rosary(13).length() == 86);
    CHECK_THROWS_AS(odd_degree_rosary(3), std::invalid_argument);
    CHECK_THROWS_AS(odd_degree_rosary(6), std::invalid_argument);
}

TEST_CASE("small template instances really are rosaries") {
    CHECK(verify_rosary(naive_rosary(4), 4, {}).is_rosary);
    CHECK(verify_rosary(naive_rosary(5), 5, {}).is_rosary);
    CHECK(verify_rosary(even_degree_rosary(4), 4, {}).is_rosary);
    CHECK(verify_rosary(even_degree_rosary(6), 6, {}).is_rosary);
    CHECK(verify_rosary(odd_degree_rosary(5), 5, {}).is_rosary);
}

TEST_CASE("catalog holds the eighteen named cycles") {
    const auto keys = catalog_keys();
    REQUIRE(keys.size() == 18);
    CHECK(std::is_sorted(keys.begin(), keys.end()));
    const std::set<std::string> expected{
        "cx-n21",     "cx-n33",     "fig1-n2",    "fig1-n3",    "fig1-n4",
        "fig1-n5",    "fig2-n6",    "list-n6-01", "list-n6-02", "list-n6-03",
        "list-n6-04", "list-n6-05", "list-n6-06", "list-n6-07", "list-n6-08",
        "list-n6-09", "list-n6-10", "n8-31"};
    CHECK(std::set<std::string>(keys.begin(), keys.end()) == expected);
    CHECK_THROWS_AS(catalog("no-such-key"), std::invalid_argument);
}

TEST_CASE("catalog fixed values") {
    CHECK(catalog("fig1-n2").values == vec({1, 2}));
    CHECK(catalog("fig1-n3").values == vec({1, 2, 1, 3}));
    CHECK(catalog("fig1-n4").values == vec({1, 2, 3, 4, 1, 4, 3, 2}));
    CHECK(catalog("fig1-n5").values == vec({1, 2, 3, 4, 5, 4, 3, 2, 1, 5, 4, 5}));
    CHECK(catalog("fig1-n5").length() == 12);
    CHECK(catalog("fig2-n6").values ==
          vec({1, 2, 3, 4, 5, 6, 1, 3, 4, 5, 6, 2, 1, 6, 5, 4, 3}));
    for (int i = 1; i <= 10; ++i) {
        const std::string key = "list-n6-" + std::string(i < 10 ? "0" : "") + std::to_string(i);
        const Cycle c = catalog(key);
        CHECK(c.degree == 6);
        CHECK(c.length() == 17);
    }
    CHECK(catalog("n8-31").values ==
          vec({1, 2, 3, 4, 5, 6, 7, 8, 1, 2, 3, 4, 5, 6, 7, 8, 6, 5, 4, 3, 2, 1, 7, 6,
               5, 4, 3, 2, 1, 8, 7}));
    CHECK(catalog("cx-n21").length() == 221);
    CHECK(catalog("cx-n21").degree == 21);
    CHECK(catalog("cx-n33").length() == 544);
    CHECK(catalog("cx-n33").degree == 33);

    // the eleven degree-6 length-17 entries are pairwise distinct even as cycles
    std::vector<Cycle> six;
    six.push_back(catalog("fig2-n6"));
    for (int i = 1; i <= 10; ++i)
        six.push_back(catalog("list-n6-" + std::string(i < 10 ? "0" : "") + std::to_string(i)));
    for (std::size_t a = 0; a < six.size(); ++a)
        for (std::size_t b = a + 1; b < six.size(); ++b)
            CHECK_FALSE(rotation_equal(six[a], six[b]));
}

TEST_CASE("catalog checksum is stable") {
    CHECK(catalog_checksum() == kCatalogChecksum);
}

TEST_CASE("catalog data file matches the compiled catalog") {
    std::ifstream in(ROSARY_CATALOG_FILE);
    REQUIRE(in.good());
    const auto seqs = parse_sequences(in);
    const auto keys = catalog_keys();
    REQUIRE(seqs.size() == keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i)
        CHECK(seqs[i] == catalog(keys[i]).values);
}

TEST_CASE("counterexample instances are well-formed") {
    const auto n21 = counterexample_instance("n21");
    CHECK(n21.name == "n21");
    CHECK(n21.pattern.size() == 21);
    CHECK(n21.cycle.length() == 221);
    CHECK(rotation_equal(n21.cycle, catalog("cx-n21")));
    CHECK(n21.pattern.values[0] == 1);
    CHECK(n21.pattern.values[1] == 5);

    const auto n33 = counterexample_instance("n33");
    CHECK(n33.pattern.size() == 33);
    CHECK(n33.cycle.length() == 544);
    CHECK(rotation_equal(n33.cycle, catalog("cx-n33")));

    CHECK_THROWS_AS(counterexample_instance("n99"), std::invalid_argument);
}

TEST_CASE("bounds table rows") {
    const auto rows = bounds_table(21);
    REQUIRE(rows.size() == 20);  // n = 2..21
    const auto& r6 = rows[4];
    CHECK(r6.n == 6);
    CHECK(r6.naive_length == 22);
    CHECK(r6.theorem_length == 18);
    CHECK(r6.catalog_length == 17);
    CHECK(r6.conjecture_target == doctest::Approx(18.0));
    CHECK_FALSE(r6.odd_bound.has_value());

    const auto& r21 = rows[19];
    CHECK(r21.n == 21);
    CHECK(r21.theorem_length == 224);
    CHECK(*r21.odd_bound == doctest::Approx(21.0 * 21.0 / 2 + 21.0 / 4 - 1));

    const auto& r2 = rows[0];
    CHECK(r2.n == 2);
    CHECK(r2.naive_length == 2);
    CHECK_FALSE(r2.theorem_length.has_value());
    CHECK(r2.catalog_length == 2);

    const auto& r3 = rows[1];
    CHECK_FALSE(r3.theorem_length.has_value());  // no odd template below 5
    CHECK(r3.catalog_length == 4);
}

TEST_CASE("odd template beats the even-degree bound for every odd degree up to 101") {
    for (const auto& row : bounds_table(101)) {
        if (row.n % 2 == 0 || row.n < 5) continue;
        REQUIRE(row.theorem_length.has_value());
        REQUIRE(row.odd_bound.has_value());
        CHECK(static_cast<double>(*row.theorem_length) < *row.odd_bound);
        CHECK(odd_degree_rosary(row.n).length() == *row.theorem_length);
    }
}
