// Command-line front end: dagger / lemma / star / examples / ideal.

#include <array>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "idlat/dagger.hpp"
#include "idlat/dedekind.hpp"
#include "idlat/json_out.hpp"
#include "idlat/monomial_ideal.hpp"
#include "idlat/section4.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitResource = 3;
constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;

struct RunConfig {
    std::string command;
    int n = 6;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 42;
    int worker_count = 1;
    std::uint64_t memory_cap_bytes = idlat::MemoryBudget::kDefaultCapBytes;
    std::string output_format = "text"; // text | json
    std::size_t counterexample_cap = 100;
    std::string out_path;
};

std::uint64_t parse_byte_size(const std::string& text) {
    std::size_t pos = 0;
    const unsigned long long value = std::stoull(text, &pos);
    std::string suffix = text.substr(pos);
    while (!suffix.empty() && suffix.front() == ' ') suffix.erase(suffix.begin());
    std::uint64_t scale = 1;
    if (suffix.empty() || suffix == "B" || suffix == "b") {
        scale = 1;
    } else if (suffix == "K" || suffix == "KiB" || suffix == "k") {
        scale = 1ull << 10;
    } else if (suffix == "M" || suffix == "MiB" || suffix == "m") {
        scale = 1ull << 20;
    } else if (suffix == "G" || suffix == "GiB" || suffix == "g") {
        scale = 1ull << 30;
    } else {
        throw idlat::domain_error("unrecognized byte-size suffix: " + suffix);
    }
    return value * scale;
}

std::uint64_t default_memory_cap() {
    if (const char* env = std::getenv("IDLAT_MEMORY_CAP")) {
        return parse_byte_size(env);
    }
    return idlat::MemoryBudget::kDefaultCapBytes;
}

std::uint64_t peak_rss_bytes() {
    std::ifstream status("/proc/self/status");
    std::string key;
    while (status >> key) {
        if (key == "VmHWM:") {
            std::uint64_t kb = 0;
            status >> kb;
            return kb * 1024;
        }
        status.ignore(256, '\n');
    }
    return 0;
}

void emit(const RunConfig& cfg, const std::string& text, const ordered_json& doc) {
    const std::string body = cfg.output_format == "json" ? doc.dump(2) + "\n" : text;
    std::cout << body;
    if (!cfg.out_path.empty()) {
        std::ofstream out(cfg.out_path, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write report file: " + cfg.out_path);
        out << body;
    }
}

std::string vector_text(const idlat::ExponentVector& v) {
    std::string s = "(";
    for (int i = 0; i < v.size(); ++i) {
        if (i > 0) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

// ---------------------------------------------------------------- dagger ---

int cmd_dagger(const RunConfig& cfg, const std::string& mode, const std::string& stream) {
    idlat::VerifyConfig vc;
    vc.max_counterexamples = cfg.counterexample_cap;
    vc.memory_cap_bytes = cfg.memory_cap_bytes;
    vc.worker_count = cfg.worker_count > 0
                          ? cfg.worker_count
                          : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    vc.mode = mode == "materialize" ? idlat::MembershipMode::kMaterializeQ
                                    : idlat::MembershipMode::kShiftIntoQ0;
    vc.stream = stream == "always"  ? idlat::StreamPolicy::kAlways
                : stream == "never" ? idlat::StreamPolicy::kNever
                                    : idlat::StreamPolicy::kAutomatic;

    const idlat::DaggerReport report = idlat::verify_dagger(cfg.n, vc);

    ordered_json doc;
    doc["command"] = "dagger";
    ordered_json jc;
    jc["n"] = cfg.n;
    jc["workers"] = vc.worker_count;
    jc["memory_cap_bytes"] = cfg.memory_cap_bytes;
    jc["max_counterexamples"] = cfg.counterexample_cap;
    jc["mode"] = mode;
    jc["stream"] = stream;
    doc["config"] = std::move(jc);
    ordered_json jr = idlat::dagger_report_json(report);
    jr["timing"]["peak_rss_bytes"] = peak_rss_bytes();
    doc["report"] = std::move(jr);

    std::ostringstream text;
    text << "dagger n=" << report.n << "\n"
         << "holds: " << (report.holds ? "true" : "false") << "\n"
         << "status: " << report.status << " (phase reached: " << report.phase_reached << ")\n"
         << "mode: " << report.mode << ", streamed final factor: "
         << (report.p_materialized ? "no" : "yes") << "\n"
         << "degrees: p=" << report.p_degree << " q0=" << report.q0_degree << "\n"
         << "p_size: " << report.p_size << " (penultimate " << report.p_penultimate_size
         << "), q0_size: " << report.q0_size << ", q_size: " << report.q_size << "\n"
         << "membership probes: " << report.p_checked << ", missing: " << report.missing_count
         << "\n"
         << "peak bytes estimate: " << report.peak_bytes_estimate << " (cap "
         << report.memory_cap_bytes << ")\n";
    if (!report.abort_reason.empty()) text << "abort reason: " << report.abort_reason << "\n";
    if (!report.counterexamples.empty()) {
        text << "counterexamples (" << report.counterexamples.size() << " shown):\n";
        for (const auto& v : report.counterexamples) text << "  " << vector_text(v) << "\n";
    }
    text << "timing: expand_even=" << report.timing.expand_even_s
         << "s expand_odd=" << report.timing.expand_odd_s << "s shift=" << report.timing.shift_s
         << "s membership=" << report.timing.membership_s << "s total=" << report.timing.total_s
         << "s\n";
    if (!report.holds && report.status == "ok") {
        text << "note: the symbolic criterion is sufficient, not necessary; this outcome is\n"
             << "inconclusive for the conjecture, not a refutation.\n";
    }
    emit(cfg, text.str(), doc);

    if (report.status == "resource_abort") return kExitResource;
    return report.holds ? kExitOk : kExitInconclusive;
}

// ----------------------------------------------------------------- lemma ---

int cmd_lemma(const RunConfig& cfg, int max_len, std::int64_t max_value) {
    std::uint64_t exhaustive_cases = 0;
    std::uint64_t failures = 0;

    // Every multiset of length <= 4 over {0,1,2,3}, as tuples.
    for (int len = 1; len <= 4; ++len) {
        std::vector<std::int64_t> tuple(static_cast<std::size_t>(len), 0);
        while (true) {
            const auto check = idlat::check_maxmin_identities(idlat::OrderedMultiset(
                std::vector<std::int64_t>(tuple.begin(), tuple.end())));
            ++exhaustive_cases;
            if (!check.first_holds || !check.second_holds) ++failures;
            std::size_t pos = 0;
            while (pos < tuple.size() && ++tuple[pos] == 4) tuple[pos++] = 0;
            if (pos == tuple.size()) break;
        }
    }

    std::mt19937_64 rng(cfg.seed);
    for (std::uint64_t t = 0; t < cfg.trials; ++t) {
        const int len = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_len));
        std::vector<std::int64_t> values(static_cast<std::size_t>(len));
        for (auto& v : values) {
            v = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(max_value + 1));
        }
        const auto check = idlat::check_maxmin_identities(idlat::OrderedMultiset(std::move(values)));
        if (!check.first_holds || !check.second_holds) ++failures;
    }

    const bool all_pass = failures == 0;
    ordered_json doc;
    doc["command"] = "lemma";
    doc["config"] = {{"trials", cfg.trials},
                     {"max_len", max_len},
                     {"max_value", max_value},
                     {"seed", cfg.seed}};
    doc["report"] = {{"exhaustive_cases", exhaustive_cases},
                     {"random_trials", cfg.trials},
                     {"failures", failures},
                     {"all_pass", all_pass},
                     {"seed", cfg.seed}};

    std::ostringstream text;
    text << "lemma: exhaustive=" << exhaustive_cases << " random=" << cfg.trials
         << " seed=" << cfg.seed << " failures=" << failures << " -> "
         << (all_pass ? "pass" : "FAIL") << "\n";
    emit(cfg, text.str(), doc);
    return all_pass ? kExitOk : kExitCheckFailed;
}

// ------------------------------------------------------------------ star ---

idlat::ValuationMatrix parse_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw idlat::domain_error("cannot open matrix file: " + path);
    std::vector<std::vector<int>> rows;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<int> row;
        int v = 0;
        while (ls >> v) row.push_back(v);
        if (!row.empty()) rows.push_back(std::move(row));
    }
    return idlat::ValuationMatrix::from_rows(rows);
}

int cmd_star(const RunConfig& cfg, const std::string& integers_arg, const std::string& file_arg,
             std::uint64_t random_trials, int max_ideals, int max_primes, int max_entry) {
    const int sources = (!integers_arg.empty() ? 1 : 0) + (!file_arg.empty() ? 1 : 0) +
                        (random_trials > 0 ? 1 : 0);
    if (sources != 1) {
        std::cerr << "star: give exactly one of --integers, --file, --random\n";
        return kExitUsage;
    }

    ordered_json doc;
    doc["command"] = "star";
    std::ostringstream text;
    bool all_pass = true;

    if (random_trials > 0) {
        std::mt19937_64 rng(cfg.seed);
        std::uint64_t failures = 0;
        for (std::uint64_t t = 0; t < random_trials; ++t) {
            const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_ideals));
            const int p = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_primes));
            std::vector<int> entries(static_cast<std::size_t>(n) * static_cast<std::size_t>(p));
            for (int& e : entries) {
                e = static_cast<int>(rng() % static_cast<std::uint64_t>(max_entry + 1));
            }
            const idlat::ValuationMatrix m(n, p, std::move(entries));
            if (!idlat::check_star(m) || !idlat::check_doublestar(m)) ++failures;
        }
        all_pass = failures == 0;
        doc["config"] = {{"source", "random"}, {"trials", random_trials},
                         {"max_ideals", max_ideals}, {"max_primes", max_primes},
                         {"max_entry", max_entry}, {"seed", cfg.seed}};
        doc["report"] = {{"trials", random_trials}, {"failures", failures},
                         {"all_pass", all_pass}, {"seed", cfg.seed}};
        text << "star: random trials=" << random_trials << " seed=" << cfg.seed
             << " failures=" << failures << " -> " << (all_pass ? "pass" : "FAIL") << "\n";
    } else {
        std::optional<idlat::IntegerValuations> iv;
        std::optional<idlat::ValuationMatrix> matrix;
        if (!integers_arg.empty()) {
            std::vector<std::uint64_t> values;
            std::istringstream is(integers_arg);
            std::string tok;
            while (std::getline(is, tok, ',')) {
                if (!tok.empty()) values.push_back(std::stoull(tok));
            }
            iv = idlat::integers_to_valuations(values);
            matrix = iv->matrix;
        } else {
            matrix = parse_matrix_file(file_arg);
        }
        const bool star_ok = idlat::check_star(*matrix);
        const bool doublestar_ok = idlat::check_doublestar(*matrix);
        all_pass = star_ok && doublestar_ok;

        doc["config"] = {{"source", !integers_arg.empty() ? "integers" : "file"},
                         {"seed", cfg.seed}};
        ordered_json jr;
        jr["n_ideals"] = matrix->n_ideals();
        jr["n_primes"] = matrix->n_primes();
        if (iv) jr["primes"] = iv->primes;
        ordered_json jm = ordered_json::array();
        for (int i = 0; i < matrix->n_ideals(); ++i) {
            ordered_json row = ordered_json::array();
            for (int j = 0; j < matrix->n_primes(); ++j) row.push_back(matrix->at(i, j));
            jm.push_back(std::move(row));
        }
        jr["matrix"] = std::move(jm);
        jr["star"] = star_ok;
        jr["doublestar"] = doublestar_ok;
        jr["all_pass"] = all_pass;
        jr["seed"] = cfg.seed;
        doc["report"] = std::move(jr);

        text << "star: n_ideals=" << matrix->n_ideals() << " n_primes=" << matrix->n_primes()
             << " (*)=" << (star_ok ? "true" : "false")
             << " (**)=" << (doublestar_ok ? "true" : "false") << " -> "
             << (all_pass ? "pass" : "FAIL") << "\n";
    }
    emit(cfg, text.str(), doc);
    return all_pass ? kExitOk : kExitCheckFailed;
}

// -------------------------------------------------------------- examples ---

int cmd_examples(const RunConfig& cfg) {
    const idlat::Section4Report report = idlat::run_section4_examples();
    const idlat::Z2Z2Report z2 = idlat::check_z2z2_identities(4);
    const bool all_ok = report.all_ok && z2.all_hold;

    ordered_json doc;
    doc["command"] = "examples";
    ordered_json jex = ordered_json::array();
    std::ostringstream text;
    for (const auto& e : report.examples) {
        ordered_json je;
        je["index"] = e.index;
        je["description"] = e.description;
        je["lhs"] = e.lhs_text;
        je["rhs"] = e.rhs_text;
        je["relation"] = e.relation;
        je["matches_stated_form"] = e.matches_stated_form;
        je["strict_inclusion"] = e.strict_inclusion;
        je["witness"] = e.witness.coords();
        je["witness_text"] = e.witness_text;
        je["ok"] = e.ok;
        jex.push_back(std::move(je));
        text << "example " << e.index << ": " << e.description << "\n"
             << "  lhs = " << e.lhs_text << "\n  rhs = " << e.rhs_text << "\n  "
             << (e.relation == "proper_subset" ? "lhs strictly inside rhs"
                                               : "lhs strictly contains rhs")
             << ", witness " << e.witness_text << " -> " << (e.ok ? "ok" : "FAIL") << "\n";
    }
    doc["report"]["examples"] = std::move(jex);
    doc["report"]["z2z2"] = {{"max_n", z2.max_n},
                             {"tuples_checked", z2.tuples_checked},
                             {"all_hold", z2.all_hold}};
    doc["report"]["all_ok"] = all_ok;
    text << "Z2 x Z2: tuples=" << z2.tuples_checked << " up to n=" << z2.max_n << " -> "
         << (z2.all_hold ? "ok" : "FAIL") << "\n"
         << "examples: " << (all_ok ? "pass" : "FAIL") << "\n";
    emit(cfg, text.str(), doc);
    return all_ok ? kExitOk : kExitCheckFailed;
}

// ----------------------------------------------------------------- ideal ---

int cmd_ideal(const RunConfig& cfg, const std::string& op, const std::string& a_text,
              const std::string& b_text, const std::string& monomial_text, int vars) {
    int n_vars = vars;
    if (n_vars == 0) {
        n_vars = std::max({idlat::infer_n_vars(a_text), idlat::infer_n_vars(b_text),
                           idlat::infer_n_vars(monomial_text), 1});
    }
    const idlat::MonomialIdeal a = idlat::parse_ideal(a_text, n_vars);

    ordered_json doc;
    doc["command"] = "ideal";
    doc["config"] = {{"op", op}, {"vars", n_vars}};
    ordered_json jr;
    jr["a"] = idlat::to_string(a);
    std::ostringstream text;

    if (op == "member") {
        if (monomial_text.empty()) {
            std::cerr << "ideal: --monomial required for op=member\n";
            return kExitUsage;
        }
        const idlat::ExponentVector m = idlat::parse_monomial(monomial_text, n_vars);
        const bool in = idlat::monomial_in_ideal(m, a);
        jr["monomial"] = idlat::monomial_to_string(m, n_vars);
        jr["value"] = in;
        text << (in ? "true" : "false") << "\n";
    } else {
        if (b_text.empty()) {
            std::cerr << "ideal: --b required for op=" << op << "\n";
            return kExitUsage;
        }
        const idlat::MonomialIdeal b = idlat::parse_ideal(b_text, n_vars);
        jr["b"] = idlat::to_string(b);
        if (op == "sum") {
            jr["result"] = idlat::to_string(idlat::ideal_sum(a, b));
        } else if (op == "product") {
            jr["result"] = idlat::to_string(idlat::ideal_product(a, b));
        } else if (op == "intersect") {
            jr["result"] = idlat::to_string(idlat::ideal_intersect(a, b));
        } else if (op == "contains") {
            jr["value"] = idlat::ideal_contains(a, b);
        } else {
            std::cerr << "ideal: unknown op " << op << "\n";
            return kExitUsage;
        }
        if (jr.contains("result")) {
            text << jr["result"].get<std::string>() << "\n";
        } else {
            text << (jr["value"].get<bool>() ? "true" : "false") << "\n";
        }
    }
    doc["report"] = std::move(jr);
    emit(cfg, text.str(), doc);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic verifier for GCD/LCM identities of ideals"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string memory_cap_text;

    // dagger
    auto* dagger = app.add_subcommand(
        "dagger", "Run the symbolic membership criterion for n ideals");
    int dagger_n = 6;
    std::string dagger_mode = "shift";
    std::string dagger_stream = "auto";
    dagger->add_option("--n", dagger_n, "Number of ideals (>= 1)")
        ->required()
        ->check(CLI::Range(1, 24));
    dagger->add_option("--workers", cfg.worker_count,
                       "Membership-phase workers; 0 = hardware concurrency");
    dagger->add_option("--memory-cap", memory_cap_text, "Memory cap, e.g. 4GiB or 123456 bytes");
    dagger->add_option("--max-counterexamples", cfg.counterexample_cap,
                       "Counterexample report cap");
    dagger->add_option("--mode", dagger_mode, "Membership mode")
        ->check(CLI::IsMember({"shift", "materialize"}));
    dagger->add_option("--stream", dagger_stream, "Final-factor streaming")
        ->check(CLI::IsMember({"auto", "always", "never"}));

    // lemma
    auto* lemma = app.add_subcommand("lemma", "Check the max-min multiset identities");
    int lemma_max_len = 8;
    std::int64_t lemma_max_value = 9;
    lemma->add_option("--trials", cfg.trials, "Random trials")->check(CLI::PositiveNumber);
    lemma->add_option("--max-len", lemma_max_len, "Max multiset length")
        ->check(CLI::PositiveNumber);
    lemma->add_option("--max-value", lemma_max_value, "Max value")->check(CLI::PositiveNumber);
    lemma->add_option("--seed", cfg.seed, "Random seed");

    // star
    auto* star = app.add_subcommand(
        "star", "Check the Dedekind equalities on a valuation matrix");
    std::string star_integers, star_file;
    std::uint64_t star_random = 0;
    int star_max_ideals = 7, star_max_primes = 5, star_max_entry = 12;
    star->add_option("--integers", star_integers, "Comma-separated positive integers");
    star->add_option("--file", star_file, "Matrix file: one ideal per line");
    star->add_option("--random", star_random, "Number of random matrices");
    star->add_option("--max-ideals", star_max_ideals)->check(CLI::PositiveNumber);
    star->add_option("--max-primes", star_max_primes)->check(CLI::PositiveNumber);
    star->add_option("--max-entry", star_max_entry)->check(CLI::PositiveNumber);
    star->add_option("--seed", cfg.seed, "Random seed");

    // examples
    auto* examples = app.add_subcommand(
        "examples", "Reproduce the polynomial-ring counterexamples and the Z2xZ2 check");

    // ideal
    auto* ideal = app.add_subcommand("ideal", "Monomial-ideal arithmetic");
    std::string ideal_op, ideal_a, ideal_b, ideal_monomial;
    int ideal_vars = 0;
    ideal->add_option("--op", ideal_op, "sum | product | intersect | contains | member")
        ->required()
        ->check(CLI::IsMember({"sum", "product", "intersect", "contains", "member"}));
    ideal->add_option("--a", ideal_a, "First ideal, e.g. \"<x^2*y, x*y^2>\"")->required();
    ideal->add_option("--b", ideal_b, "Second ideal");
    ideal->add_option("--monomial", ideal_monomial, "Monomial to test for op=member");
    ideal->add_option("--vars", ideal_vars, "Number of variables; 0 = infer");

    for (auto* sub : {dagger, lemma, star, examples, ideal}) {
        sub->add_option("--format", cfg.output_format, "text | json")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--out", cfg.out_path, "Also write the report to this file");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        cfg.memory_cap_bytes =
            memory_cap_text.empty() ? default_memory_cap() : parse_byte_size(memory_cap_text);
        if (dagger->parsed()) {
            cfg.command = "dagger";
            cfg.n = dagger_n;
            return cmd_dagger(cfg, dagger_mode, dagger_stream);
        }
        if (lemma->parsed()) {
            cfg.command = "lemma";
            return cmd_lemma(cfg, lemma_max_len, lemma_max_value);
        }
        if (star->parsed()) {
            cfg.command = "star";
            return cmd_star(cfg, star_integers, star_file, star_random, star_max_ideals,
                            star_max_primes, star_max_entry);
        }
        if (examples->parsed()) {
            cfg.command = "examples";
            return cmd_examples(cfg);
        }
        if (ideal->parsed()) {
            cfg.command = "ideal";
            return cmd_ideal(cfg, ideal_op, ideal_a, ideal_b, ideal_monomial, ideal_vars);
        }
        return kExitUsage;
    } catch (const idlat::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
