#include "rosary/seq.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace rosary {

namespace {

void check_values(const std::vector<int>& values, int degree) {
    if (degree < 1)
        throw std::invalid_argument("cycle degree must be at least 1");
    if (values.empty())
        throw std::invalid_argument("cycle must not be empty");
    for (int v : values)
        if (v < 1 || v > degree)
            throw std::invalid_argument("cycle value " + std::to_string(v) +
                                        " outside alphabet [1, " + std::to_string(degree) + "]");
}

}  // namespace

Cycle make_cycle(std::vector<int> values, int degree) {
    check_values(values, degree);
    return Cycle{std::move(values), degree};
}

Cycle make_cycle(std::vector<int> values) {
    if (values.empty())
        throw std::invalid_argument("cycle must not be empty");
    int degree = *std::max_element(values.begin(), values.end());
    return make_cycle(std::move(values), degree);
}

Permutation make_permutation(std::vector<int> values) {
    if (values.empty())
        throw std::invalid_argument("permutation must not be empty");
    std::vector<char> seen(values.size() + 1, 0);
    for (int v : values) {
        if (v < 1 || v > static_cast<int>(values.size()))
            throw std::invalid_argument("permutation value " + std::to_string(v) +
                                        " outside [1, " + std::to_string(values.size()) + "]");
        if (seen[v]++)
            throw std::invalid_argument("permutation repeats value " + std::to_string(v));
    }
    return Permutation{std::move(values)};
}

Cycle Permutation::as_cycle() const {
    return Cycle{values, static_cast<int>(values.size())};
}

Cycle rotate(const Cycle& c, std::size_t start) {
    const std::size_t r = c.length();
    start %= r;  // cyclic indexing
    std::vector<int> out;
    out.reserve(r);
    out.insert(out.end(), c.values.begin() + static_cast<std::ptrdiff_t>(start), c.values.end());
    out.insert(out.end(), c.values.begin(), c.values.begin() + static_cast<std::ptrdiff_t>(start));
    return Cycle{std::move(out), c.degree};
}

Cycle relabel(const Cycle& c, const Permutation& sigma) {
    if (static_cast<int>(sigma.size()) != c.degree)
        throw std::invalid_argument("relabeling must permute the cycle's full alphabet");
    std::vector<int> out;
    out.reserve(c.length());
    for (int v : c.values)
        out.push_back(sigma.values[static_cast<std::size_t>(v) - 1]);
    return Cycle{std::move(out), c.degree};
}

Cycle reverse(const Cycle& c) {
    std::vector<int> out;
    out.reserve(c.length());
    out.push_back(c.values.front());
    out.insert(out.end(), c.values.rbegin(), c.values.rend() - 1);
    return Cycle{std::move(out), c.degree};
}

bool rotation_equal(const Cycle& a, const Cycle& b) {
    if (a.degree != b.degree || a.length() != b.length())
        return false;
    // b occurs in a+a iff the value lists are rotations of each other
    std::vector<int> doubled(a.values);
    doubled.insert(doubled.end(), a.values.begin(), a.values.end());
    return std::search(doubled.begin(), doubled.end(), b.values.begin(), b.values.end()) !=
           doubled.end();
}

std::vector<int> parse_value_list(std::string_view text) {
    std::vector<int> out;
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto skip_ws = [&] {
        while (i < n && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    skip_ws();
    while (i < n) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw std::invalid_argument("expected a value at position " + std::to_string(i));
        long v = 0;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + (text[i] - '0');
            if (v > 1'000'000)
                throw std::invalid_argument("value out of range");
            ++i;
        }
        if (v < 1)
            throw std::invalid_argument("values are 1-based, got 0");
        out.push_back(static_cast<int>(v));
        skip_ws();
        if (i == n) break;
        if (text[i] != ',')
            throw std::invalid_argument(std::string("expected ',' but found '") + text[i] + "'");
        ++i;
        skip_ws();
        if (i == n)
            throw std::invalid_argument("trailing comma");
    }
    if (out.empty())
        throw std::invalid_argument("empty value list");
    return out;
}

std::vector<std::vector<int>> parse_sequences(std::istream& in) {
    std::vector<std::vector<int>> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        std::size_t b = line.find_last_not_of(" \t\r");
        try {
            out.push_back(parse_value_list(std::string_view(line).substr(a, b - a + 1)));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

std::vector<std::vector<int>> parse_sequences(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_sequences(in);
}

std::string format_sequence(const std::vector<int>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values[i]);
    }
    return out;
}

}  // namespace rosary
