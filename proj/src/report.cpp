#include "rosary/report.hpp"

#include <sstream>

#include "rosary/constructions.hpp"

namespace rosary {

namespace {

nlohmann::json sequence_json(const std::vector<int>& values) {
    return nlohmann::json(values);
}

}  // namespace

nlohmann::json to_json(const RosaryReport& r) {
    nlohmann::json j;
    j["n"] = r.n;
    j["length"] = r.length;
    j["is_rosary"] = r.is_rosary;
    j["checked"] = r.checked;
    j["missing_total"] = r.missing_total;
    nlohmann::json missing = nlohmann::json::array();
    for (const auto& p : r.missing) missing.push_back(sequence_json(p));
    j["missing"] = std::move(missing);
    j["elapsed_ms"] = r.elapsed_ms;
    j["engine"] = r.engine;
    j["threads"] = r.threads;
    return j;
}

nlohmann::json to_json(const ContainmentVerdict& v) {
    nlohmann::json j;
    j["contained"] = v.contained;
    if (v.start)
        j["start"] = *v.start + 1;
    else
        j["start"] = nullptr;
    if (v.rotation)
        j["rotation"] = *v.rotation + 1;
    else
        j["rotation"] = nullptr;
    return j;
}

nlohmann::json to_json(const LambdaDecomposition& ld) {
    nlohmann::json j;
    j["x"] = ld.ones;
    j["y"] = ld.zeros;
    j["anchor"] = ld.anchor + 1;
    j["lambdas"] = nlohmann::json(ld.lambdas);
    return j;
}

nlohmann::json to_json(const BlockDecomposition& bd, const Cycle& c) {
    nlohmann::json j;
    auto render = [&](const std::vector<Block>& blocks) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& b : blocks) {
            nlohmann::json item;
            item["start"] = b.start + 1;
            item["values"] = sequence_json(block_values(c, b));
            arr.push_back(std::move(item));
        }
        return arr;
    };
    j["increasing"] = render(bd.increasing);
    j["decreasing"] = render(bd.decreasing);
    j["increasing_count"] = bd.increasing.size();
    j["decreasing_count"] = bd.decreasing.size();
    const StringRunCounts rc = string_run_counts(c.values);
    j["string_increasing_runs"] = rc.increasing;
    j["string_decreasing_runs"] = rc.decreasing;
    return j;
}

nlohmann::json to_json(const LemmaCheck& ck) {
    nlohmann::json j;
    j["applicable"] = ck.applicable;
    j["fired"] = ck.fired;
    if (ck.fired)
        j["index"] = *ck.index + 1;
    else
        j["index"] = nullptr;
    if (!ck.target.values.empty())
        j["target"] = sequence_json(ck.target.values);
    else
        j["target"] = nullptr;
    j["confirmed"] = ck.confirmed;
    j["consistent"] = ck.consistent;
    return j;
}

nlohmann::json to_json(const SearchOutcome& s) {
    nlohmann::json j;
    nlohmann::json found = nlohmann::json::array();
    for (const auto& c : s.found) found.push_back(sequence_json(c.values));
    j["found"] = std::move(found);
    j["nodes"] = s.nodes;
    j["leaves"] = s.leaves;
    j["screened_out"] = s.screened_out;
    j["verified"] = s.verified;
    j["exhausted"] = s.exhausted;
    j["elapsed_s"] = s.elapsed_s;
    return j;
}

std::string version_string() {
    std::ostringstream os;
    os << "rosary 0.1.0 (catalog " << std::hex << catalog_checksum() << ")";
    return os.str();
}

}  // namespace rosary
