// Command-line frontend: construct, verify, contains, cyclic-contains,
// blocks, code, search, exact, table, lemma, counterexample, string-check.
//
// Exit codes: 0 the checked claim holds, 1 a well-formed negative,
// 2 usage or input error. Human-readable text on stdout by default;
// --json replaces the whole stdout payload; diagnostics go to stderr.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "rosary/constructions.hpp"
#include "rosary/containment.hpp"
#include "rosary/lemmas.hpp"
#include "rosary/report.hpp"
#include "rosary/search.hpp"

namespace {

using namespace rosary;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Shared report envelope for --json payloads.
nlohmann::json envelope(const std::string& command, nlohmann::json inputs,
                        nlohmann::json result, double elapsed_ms) {
    nlohmann::json j;
    j["command"] = command;
    j["inputs"] = std::move(inputs);
    j["result"] = std::move(result);
    j["version"] = version_string();
    j["elapsed_ms"] = elapsed_ms;
    return j;
}

void emit(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<int> load_values(const std::string& inline_text, const std::string& file) {
    if (!inline_text.empty() && !file.empty())
        throw CLI::ValidationError("--inline and --file are mutually exclusive");
    if (!inline_text.empty()) return parse_value_list(inline_text);
    if (file.empty())
        throw CLI::ValidationError("a sequence is required: pass --inline or --file");
    std::ifstream in(file);
    if (!in) throw CLI::ValidationError("cannot open " + file);
    auto seqs = parse_sequences(in);
    if (seqs.empty())
        throw CLI::ValidationError(file + " holds no sequence");
    if (seqs.size() > 1)
        std::cerr << "note: " << file << " holds " << seqs.size()
                  << " sequences; using the first\n";
    return seqs.front();
}

Cycle load_cycle(const std::string& inline_text, const std::string& file, int n) {
    std::vector<int> v = load_values(inline_text, file);
    return n > 0 ? make_cycle(std::move(v), n) : make_cycle(std::move(v));
}

Engine engine_from_flag(const std::string& name) {
    const auto e = parse_engine(name);
    if (!e) throw CLI::ValidationError("unknown engine: " + name);
    return *e;
}

std::string yn(bool b) { return b ? "yes" : "no"; }

void print_verify_text(const RosaryReport& r) {
    std::cout << "is_rosary: " << yn(r.is_rosary) << "\n"
              << "n: " << r.n << "\n"
              << "length: " << r.length << "\n"
              << "checked: " << r.checked << "\n"
              << "missing_total: " << r.missing_total << "\n";
    for (const auto& m : r.missing) std::cout << "missing: " << format_sequence(m) << "\n";
    std::cout << "engine: " << r.engine << "\n"
              << "threads: " << r.threads << "\n"
              << "elapsed_ms: " << r.elapsed_ms << "\n";
}

// ----------------------------------------------------------------- commands

struct CommonSeqOpts {
    std::string inline_text;
    std::string file;
    int n = 0;
    bool json = false;

    void attach(CLI::App* cmd, bool need_n) {
        cmd->add_option("--inline", inline_text, "sequence as a comma-separated list");
        cmd->add_option("--file", file, "file holding the sequence (text format)");
        auto* opt = cmd->add_option("--n", n, "alphabet size (degree)");
        if (need_n) opt->required();
        cmd->add_flag("--json", json, "machine-readable report on stdout");
    }
};

int run_construct(int n, const std::string& method, const std::string& name, bool json) {
    const auto t0 = Clock::now();
    Cycle c;
    if (method == "naive") {
        c = naive_rosary(n);
    } else if (method == "theorem") {
        c = n % 2 == 0 ? even_degree_rosary(n) : odd_degree_rosary(n);
    } else if (method == "catalog") {
        if (name.empty()) throw CLI::ValidationError("--method catalog needs --name");
        c = catalog(name);
        if (n > 0 && c.degree != n)
            throw CLI::ValidationError("catalog entry " + name + " has degree " +
                                       std::to_string(c.degree) + ", not " + std::to_string(n));
    } else {
        throw CLI::ValidationError("unknown method: " + method);
    }
    if (json) {
        nlohmann::json result;
        result["cycle"] = c.values;
        result["degree"] = c.degree;
        result["length"] = c.length();
        emit(envelope("construct",
                      {{"n", n}, {"method", method}, {"name", name}},
                      std::move(result), ms_since(t0)));
    } else {
        std::cout << format_sequence(c.values) << "\n";
    }
    return 0;
}

int run_verify(const CommonSeqOpts& seq, const std::string& engine, int parallel,
               std::size_t witness_cap, bool early_exit) {
    const Cycle c = load_cycle(seq.inline_text, seq.file, seq.n);
    VerifyConfig vc;
    vc.engine = engine_from_flag(engine);
    vc.threads = parallel;
    vc.witness_cap = witness_cap;
    vc.early_exit = early_exit;
    const RosaryReport r = verify_rosary(c, seq.n, vc);
    if (seq.json) {
        emit(envelope("verify",
                      {{"cycle", c.values}, {"n", seq.n}, {"engine", engine}},
                      to_json(r), r.elapsed_ms));
    } else {
        print_verify_text(r);
    }
    return r.is_rosary ? 0 : 1;
}

int run_contains(const CommonSeqOpts& seq, const std::string& pattern_text,
                 const std::string& engine, bool cyclic) {
    const auto t0 = Clock::now();
    const Cycle c = load_cycle(seq.inline_text, seq.file, seq.n);
    const std::vector<int> pattern = parse_value_list(pattern_text);
    ContainmentVerdict v;
    if (cyclic)
        v = cyclic_contains(c, make_cycle(pattern, c.degree), engine_from_flag(engine));
    else
        v = cycle_contains(c, pattern, engine_from_flag(engine));
    if (seq.json) {
        emit(envelope(cyclic ? "cyclic-contains" : "contains",
                      {{"cycle", c.values}, {"pattern", pattern}, {"engine", engine}},
                      to_json(v), ms_since(t0)));
    } else {
        std::cout << "contained: " << yn(v.contained) << "\n";
        if (v.start) std::cout << "start: " << *v.start + 1 << "\n";
        if (v.rotation) std::cout << "rotation: " << *v.rotation + 1 << "\n";
    }
    return v.contained ? 0 : 1;
}

int run_code(const CommonSeqOpts& seq) {
    const auto t0 = Clock::now();
    const Cycle c = load_cycle(seq.inline_text, seq.file, seq.n);
    const Code code = code_of_cycle(c);
    const LambdaDecomposition ld = lambda_decomposition(code);
    if (seq.json) {
        nlohmann::json result;
        std::string bits;
        for (int b : code.bits) bits.push_back(b ? '1' : '0');
        result["code"] = bits;
        result["lambda"] = to_json(ld);
        emit(envelope("code", {{"cycle", c.values}}, std::move(result), ms_since(t0)));
    } else {
        for (int b : code.bits) std::cout << (b ? '1' : '0');
        std::cout << "\n"
                  << "x: " << ld.ones << "\n"
                  << "y: " << ld.zeros << "\n"
                  << "anchor: " << ld.anchor + 1 << "\n"
                  << "lambda: ";
        for (std::size_t i = 0; i < ld.lambdas.size(); ++i)
            std::cout << (i ? "," : "") << ld.lambdas[i];
        std::cout << "\n";
    }
    return 0;
}

int run_blocks(const CommonSeqOpts& seq) {
    const auto t0 = Clock::now();
    const Cycle c = load_cycle(seq.inline_text, seq.file, seq.n);
    const BlockDecomposition bd = maximal_blocks(c);
    if (seq.json) {
        emit(envelope("blocks", {{"cycle", c.values}}, to_json(bd, c), ms_since(t0)));
    } else {
        auto print_side = [&](const char* label, const std::vector<Block>& blocks) {
            std::cout << label << ":";
            for (const auto& b : blocks) {
                std::cout << " (";
                const auto vals = block_values(c, b);
                for (std::size_t i = 0; i < vals.size(); ++i)
                    std::cout << (i ? "," : "") << vals[i];
                std::cout << ")";
            }
            std::cout << "\n";
        };
        print_side("increasing", bd.increasing);
        print_side("decreasing", bd.decreasing);
        const StringRunCounts rc = string_run_counts(c.values);
        std::cout << "increasing_count: " << bd.increasing.size() << "\n"
                  << "decreasing_count: " << bd.decreasing.size() << "\n"
                  << "string_increasing_runs: " << rc.increasing << "\n"
                  << "string_decreasing_runs: " << rc.decreasing << "\n";
    }
    return 0;
}

int run_search(int n, std::size_t length, const std::string& prefix_text,
               std::uint64_t seed, std::size_t sample, bool no_screen,
               std::size_t max_results, double budget_s, std::uint64_t budget_nodes,
               int parallel, const std::string& engine, bool json) {
    SearchConfig sc;
    sc.n = n;
    sc.target_length = length;
    if (!prefix_text.empty()) sc.prefix = parse_value_list(prefix_text);
    sc.seed = seed;
    sc.sample_size = sample;
    sc.use_screen = !no_screen;
    sc.max_results = max_results;
    sc.time_budget_s = budget_s;
    sc.node_budget = budget_nodes;
    sc.threads = parallel > 0 ? parallel : 1;
    sc.engine = engine_from_flag(engine);
    const SearchOutcome so = search_rosaries(sc);
    if (json) {
        emit(envelope("search",
                      {{"n", n},
                       {"length", length},
                       {"prefix", sc.prefix},
                       {"seed", seed},
                       {"screen", sc.use_screen}},
                      to_json(so), so.elapsed_s * 1000.0));
    } else {
        std::cout << "found: " << so.found.size() << "\n";
        for (const auto& c : so.found) std::cout << format_sequence(c.values) << "\n";
        std::cout << "nodes: " << so.nodes << "\n"
                  << "leaves: " << so.leaves << "\n"
                  << "screened_out: " << so.screened_out << "\n"
                  << "verified: " << so.verified << "\n"
                  << "exhausted: " << yn(so.exhausted) << "\n"
                  << "elapsed_s: " << so.elapsed_s << "\n";
    }
    return so.found.empty() ? 1 : 0;
}

int run_exact(int n, bool allow_slow, bool json) {
    const auto t0 = Clock::now();
    const ExactResult er = exact_r(n, allow_slow);
    if (json) {
        nlohmann::json result;
        result["n"] = er.n;
        result["length"] = er.length;
        result["witness"] = er.witness.values;
        result["candidates"] = er.candidates;
        emit(envelope("exact", {{"n", n}}, std::move(result), ms_since(t0)));
    } else {
        std::cout << "n: " << er.n << "\n"
                  << "r: " << er.length << "\n"
                  << "witness: " << format_sequence(er.witness.values) << "\n"
                  << "candidates: " << er.candidates << "\n";
    }
    return 0;
}

int run_table(int max_n, const std::string& format) {
    const auto t0 = Clock::now();
    const auto rows = bounds_table(max_n);
    auto opt_str = [](const auto& o) -> std::string {
        if (!o) return "-";
        std::ostringstream os;
        os << *o;
        return os.str();
    };
    if (format == "text") {
        std::cout << "n\tnaive\ttheorem\tcatalog\tn^2/2\todd_bound\n";
        for (const auto& r : rows)
            std::cout << r.n << "\t" << r.naive_length << "\t" << opt_str(r.theorem_length)
                      << "\t" << opt_str(r.catalog_length) << "\t" << r.conjecture_target
                      << "\t" << opt_str(r.odd_bound) << "\n";
    } else if (format == "csv") {
        std::cout << "n,naive,theorem,catalog,conjecture_target,odd_bound\n";
        for (const auto& r : rows)
            std::cout << r.n << "," << r.naive_length << "," << opt_str(r.theorem_length)
                      << "," << opt_str(r.catalog_length) << "," << r.conjecture_target
                      << "," << opt_str(r.odd_bound) << "\n";
    } else if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : rows) {
            nlohmann::json row;
            row["n"] = r.n;
            row["naive"] = r.naive_length;
            if (r.theorem_length)
                row["theorem"] = *r.theorem_length;
            else
                row["theorem"] = nullptr;
            if (r.catalog_length)
                row["catalog"] = *r.catalog_length;
            else
                row["catalog"] = nullptr;
            row["conjecture_target"] = r.conjecture_target;
            if (r.odd_bound)
                row["odd_bound"] = *r.odd_bound;
            else
                row["odd_bound"] = nullptr;
            arr.push_back(std::move(row));
        }
        emit(envelope("table", {{"max_n", max_n}}, std::move(arr), ms_since(t0)));
    } else {
        throw CLI::ValidationError("unknown format: " + format);
    }
    return 0;
}

int run_lemma(const std::string& kind, const std::string& perm_text, std::size_t K,
              std::size_t M, std::size_t N, const std::string& engine, bool json) {
    const auto t0 = Clock::now();
    const Permutation p = make_permutation(parse_value_list(perm_text));
    const Engine eng = engine_from_flag(engine);
    nlohmann::json inputs{{"kind", kind}, {"perm", p.values}, {"K", K}, {"M", M}};
    int rc = 0;
    nlohmann::json result;
    std::ostringstream text;

    if (kind == "window") {
        const auto ld = lambda_decomposition(code_of_cycle(p.as_cycle()));
        const auto idx = window_predicate(ld, K, M);
        result["fired"] = idx.has_value();
        result["index"] = idx ? nlohmann::json(*idx + 1) : nlohmann::json(nullptr);
        result["target"] =
            window_predicate_target(static_cast<int>(p.size()), K, M).values;
        text << "fired: " << yn(idx.has_value()) << "\n";
        if (idx) text << "index: " << *idx + 1 << "\n";
        rc = idx ? 0 : 1;
    } else if (kind == "lucky") {
        inputs["N"] = N;
        const auto lucky = lucky_indices(p, {K, M, N});
        nlohmann::json arr = nlohmann::json::array();
        for (auto i : lucky) arr.push_back(i + 1);
        result["lucky"] = std::move(arr);
        result["target"] =
            lucky_target(static_cast<int>(p.size()), M, N, K).values;
        text << "lucky:";
        for (auto i : lucky) text << " " << i + 1;
        text << "\n";
        rc = lucky.empty() ? 1 : 0;
    } else if (kind == "check-window" || kind == "check-lucky") {
        LemmaCheck ck;
        if (kind == "check-window") {
            ck = check_window_predicate(p, K, M, eng);
        } else {
            inputs["N"] = N;
            ck = check_lucky(p, {K, M, N}, eng);
        }
        result = to_json(ck);
        text << "applicable: " << yn(ck.applicable) << "\n"
             << "fired: " << yn(ck.fired) << "\n";
        if (ck.index) text << "index: " << *ck.index + 1 << "\n";
        text << "confirmed: " << yn(ck.confirmed) << "\n"
             << "consistent: " << yn(ck.consistent) << "\n";
        rc = ck.consistent ? 0 : 1;
    } else {
        throw CLI::ValidationError("unknown kind: " + kind);
    }

    if (json)
        emit(envelope("lemma", std::move(inputs), std::move(result), ms_since(t0)));
    else
        std::cout << text.str();
    return rc;
}

int run_counterexample(const std::string& which, const std::string& engine, bool json) {
    const auto t0 = Clock::now();
    const CounterexampleInstance inst = counterexample_instance(which);
    const ContainmentVerdict v =
        cycle_contains(inst.cycle, inst.pattern.values, engine_from_flag(engine));
    const auto ld = lambda_decomposition(code_of_cycle(inst.pattern.as_cycle()));
    const auto bd = maximal_blocks(inst.pattern.as_cycle());
    const StringRunCounts rc = string_run_counts(inst.pattern.values);
    const bool claim_confirmed = !v.contained;
    if (json) {
        nlohmann::json result;
        result["case"] = inst.name;
        result["cycle_length"] = inst.cycle.length();
        result["contained"] = v.contained;
        result["claim_confirmed"] = claim_confirmed;
        result["pattern"] = inst.pattern.values;
        result["lambda"] = to_json(ld);
        result["cyclic_increasing_blocks"] = bd.increasing.size();
        result["cyclic_decreasing_blocks"] = bd.decreasing.size();
        result["string_increasing_runs"] = rc.increasing;
        result["string_decreasing_runs"] = rc.decreasing;
        emit(envelope("counterexample", {{"case", which}}, std::move(result), ms_since(t0)));
    } else {
        std::cout << "case: " << inst.name << "\n"
                  << "cycle_length: " << inst.cycle.length() << "\n"
                  << "contained: " << yn(v.contained) << "\n"
                  << "claim_confirmed: " << yn(claim_confirmed) << "\n"
                  << "x: " << ld.ones << "\n"
                  << "y: " << ld.zeros << "\n"
                  << "cyclic_blocks: " << bd.increasing.size() << " increasing, "
                  << bd.decreasing.size() << " decreasing\n"
                  << "string_runs: " << rc.increasing << " increasing, " << rc.decreasing
                  << " decreasing\n";
    }
    return claim_confirmed ? 0 : 1;
}

int run_string_check(const CommonSeqOpts& seq) {
    const auto t0 = Clock::now();
    const std::vector<int> s = load_values(seq.inline_text, seq.file);
    const StringCheckResult r = string_contains_all_permutations(s, seq.n);
    if (seq.json) {
        nlohmann::json result;
        result["all_contained"] = r.all_contained;
        result["checked"] = r.checked;
        result["missing"] = r.missing ? nlohmann::json(*r.missing)
                                      : nlohmann::json(nullptr);
        emit(envelope("string-check", {{"sequence", s}, {"n", seq.n}}, std::move(result),
                      ms_since(t0)));
    } else {
        std::cout << "all_contained: " << yn(r.all_contained) << "\n"
                  << "checked: " << r.checked << "\n";
        if (r.missing)
            std::cout << "missing: " << format_sequence(*r.missing) << "\n";
    }
    return r.all_contained ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rosary: cyclic sequences containing every permutation of {1..n}"};
    app.set_version_flag("--version", version_string());
    app.require_subcommand(1);
    int rc = 0;

    // construct
    auto* construct = app.add_subcommand("construct", "emit a rosary construction");
    int co_n = 0;
    std::string co_method = "naive", co_name;
    bool co_json = false;
    construct->add_option("--n", co_n, "degree")->required();
    construct->add_option("--method", co_method, "naive|theorem|catalog");
    construct->add_option("--name", co_name, "catalog key (with --method catalog)");
    construct->add_flag("--json", co_json, "machine-readable report");
    construct->callback([&] { rc = run_construct(co_n, co_method, co_name, co_json); });

    // verify
    auto* verify = app.add_subcommand("verify", "exhaustive rosary check");
    CommonSeqOpts ve_seq;
    ve_seq.attach(verify, true);
    std::string ve_engine = "automatic";
    int ve_parallel = 0;
    std::size_t ve_witness_cap = 16;
    bool ve_early = false;
    verify->add_option("--engine", ve_engine, "naive|nexttable|simd|automatic");
    verify->add_option("--parallel", ve_parallel, "worker threads (0 = env/hardware)");
    verify->add_option("--witness-cap", ve_witness_cap, "max missing witnesses reported");
    verify->add_flag("--early-exit", ve_early, "stop at the first missing permutation");
    verify->callback(
        [&] { rc = run_verify(ve_seq, ve_engine, ve_parallel, ve_witness_cap, ve_early); });

    // contains / cyclic-contains
    auto* contains = app.add_subcommand("contains", "permutation-in-cycle containment");
    CommonSeqOpts cn_seq;
    cn_seq.attach(contains, false);
    std::string cn_pattern, cn_engine = "automatic";
    contains->add_option("--pattern", cn_pattern, "pattern values")->required();
    contains->add_option("--engine", cn_engine, "naive|nexttable|simd|automatic");
    contains->callback([&] { rc = run_contains(cn_seq, cn_pattern, cn_engine, false); });

    auto* cyc = app.add_subcommand("cyclic-contains",
                                   "containment of some rotation of the pattern cycle");
    CommonSeqOpts cy_seq;
    cy_seq.attach(cyc, false);
    std::string cy_pattern, cy_engine = "automatic";
    cyc->add_option("--pattern", cy_pattern, "pattern cycle values")->required();
    cyc->add_option("--engine", cy_engine, "naive|nexttable|simd|automatic");
    cyc->callback([&] { rc = run_contains(cy_seq, cy_pattern, cy_engine, true); });

    // code / blocks
    auto* code = app.add_subcommand("code", "ascent/descent code and lambda vector");
    CommonSeqOpts cd_seq;
    cd_seq.attach(code, false);
    code->callback([&] { rc = run_code(cd_seq); });

    auto* blocks = app.add_subcommand("blocks", "maximal monotone blocks");
    CommonSeqOpts bl_seq;
    bl_seq.attach(blocks, false);
    blocks->callback([&] { rc = run_blocks(bl_seq); });

    // search
    auto* search = app.add_subcommand("search", "DFS for rosaries of a fixed length");
    int se_n = 0, se_parallel = 1;
    std::size_t se_length = 0, se_sample = 64, se_max = 16;
    std::string se_prefix, se_engine = "automatic";
    std::uint64_t se_seed = 1, se_budget_nodes = 0;
    double se_budget = 0.0;
    bool se_no_screen = false, se_json = false;
    search->add_option("--n", se_n, "degree")->required();
    search->add_option("--length", se_length, "target cycle length")->required();
    search->add_option("--prefix", se_prefix, "starting values (default: 1..n)");
    search->add_option("--seed", se_seed, "screen sample seed");
    search->add_option("--sample", se_sample, "screened permutations (<= 64)");
    search->add_flag("--no-screen", se_no_screen, "disable the permutation screen");
    search->add_option("--max-results", se_max, "stop after this many rosaries");
    search->add_option("--budget", se_budget, "time budget in seconds (0 = none)");
    search->add_option("--budget-nodes", se_budget_nodes, "node budget (0 = none)");
    search->add_option("--parallel", se_parallel, "worker threads");
    search->add_option("--engine", se_engine, "verification engine");
    search->add_flag("--json", se_json, "machine-readable report");
    search->callback([&] {
        rc = run_search(se_n, se_length, se_prefix, se_seed, se_sample, se_no_screen,
                        se_max, se_budget, se_budget_nodes, se_parallel, se_engine,
                        se_json);
    });

    // exact
    auto* exact = app.add_subcommand("exact", "exact minimal rosary length");
    int ex_n = 0;
    bool ex_slow = false, ex_json = false;
    exact->add_option("--n", ex_n, "degree")->required();
    exact->add_flag("--allow-slow", ex_slow, "lift the degree cap to 5");
    exact->add_flag("--json", ex_json, "machine-readable report");
    exact->callback([&] { rc = run_exact(ex_n, ex_slow, ex_json); });

    // table
    auto* table = app.add_subcommand("table", "length bounds per degree");
    int ta_max = 10;
    std::string ta_format = "text";
    table->add_option("--max-n", ta_max, "largest degree");
    table->add_option("--format", ta_format, "text|csv|json");
    table->callback([&] { rc = run_table(ta_max, ta_format); });

    // lemma
    auto* lemma = app.add_subcommand("lemma", "window/lucky predicates and their checks");
    std::string le_kind, le_perm, le_engine = "automatic";
    std::size_t le_K = 1, le_M = 1, le_N = 1;
    bool le_json = false;
    lemma->add_option("--kind", le_kind, "window|lucky|check-window|check-lucky")
        ->required();
    lemma->add_option("--perm", le_perm, "permutation values")->required();
    lemma->add_option("--K", le_K, "window width");
    lemma->add_option("--M", le_M, "threshold slack");
    lemma->add_option("--N", le_N, "block-end ceiling (lucky kinds)");
    lemma->add_option("--engine", le_engine, "containment engine for checks");
    lemma->add_flag("--json", le_json, "machine-readable report");
    lemma->callback(
        [&] { rc = run_lemma(le_kind, le_perm, le_K, le_M, le_N, le_engine, le_json); });

    // counterexample
    auto* cx = app.add_subcommand("counterexample",
                                  "decide the fixed non-containment instances");
    std::string cx_case, cx_engine = "automatic";
    bool cx_json = false;
    cx->add_option("--case", cx_case, "n21|n33")->required();
    cx->add_option("--engine", cx_engine, "containment engine");
    cx->add_flag("--json", cx_json, "machine-readable report");
    cx->callback([&] { rc = run_counterexample(cx_case, cx_engine, cx_json); });

    // string-check
    auto* strc = app.add_subcommand("string-check",
                                    "does the plain string contain every permutation");
    CommonSeqOpts st_seq;
    st_seq.attach(strc, true);
    strc->callback([&] { rc = run_string_check(st_seq); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
