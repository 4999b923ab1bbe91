/**
 * lexcm command-line front end.
 *
 * Subcommands:
 *   classify     classify one lexsegment instance (fast / oracle / pattern / both)
 *   show         print facets, f-vector and minimal non-faces of an instance
 *   sweep        exhaustively classify a range and cross-check the methods
 *   verify-join  seeded random verification of the join behavior of CM_t
 *
 * Exit codes: 0 success, 1 verification failure, 2 invalid input, 3 I/O error.
 */

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "lexcm/oracle.hpp"
#include "lexcm/serialize.hpp"
#include "lexcm/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitIo = 3;

struct InstanceArgs {
    int n = 0;
    int d = 0;
    std::string u, v;

    lexcm::LexsegmentInstance build() const {
        lexcm::SqfMonomial mu = lexcm::parse_monomial(u, n);
        lexcm::SqfMonomial mv = lexcm::parse_monomial(v, n);
        if (mu.degree() != d || mv.degree() != d)
            throw lexcm::invalid_input("monomial degree does not match --d");
        return lexcm::LexsegmentInstance(n, mu, mv);
    }
};

void add_instance_flags(CLI::App* cmd, InstanceArgs& args) {
    cmd->add_option("--n", args.n, "number of variables")->required();
    cmd->add_option("--d", args.d, "degree of the segment")->required();
    cmd->add_option("--u", args.u, "upper monomial, comma-separated ascending indices")
        ->required();
    cmd->add_option("--v", args.v, "lower monomial, comma-separated ascending indices")
        ->required();
}

/** Accepts "2", "3-4" or "3:4" degree ranges. */
std::pair<int, int> parse_degree_range(const std::string& text) {
    std::size_t sep = text.find_first_of("-:");
    try {
        if (sep == std::string::npos) {
            int d = std::stoi(text);
            return {d, d};
        }
        return {std::stoi(text.substr(0, sep)), std::stoi(text.substr(sep + 1))};
    } catch (const std::exception&) {
        throw lexcm::invalid_input("malformed degree range '" + text + "'");
    }
}

struct Modes {
    bool fast = false, oracle = false, pattern = false;
};

Modes parse_modes(const std::string& text) {
    Modes m;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok == "fast")
            m.fast = true;
        else if (tok == "oracle")
            m.oracle = true;
        else if (tok == "pattern")
            m.pattern = true;
        else if (tok == "both")
            m.fast = m.oracle = true;
        else
            throw lexcm::invalid_input("unknown mode '" + tok + "'");
    }
    if (!m.fast && !m.oracle && !m.pattern) throw lexcm::invalid_input("empty mode list");
    return m;
}

int cmd_classify(const InstanceArgs& args, const std::string& mode_text,
                 const std::string& field_text, long budget) {
    lexcm::LexsegmentInstance inst = args.build();
    Modes modes = parse_modes(mode_text);
    lexcm::OracleOptions opts;
    opts.field = lexcm::FieldSpec::parse(field_text);
    opts.shell_budget = budget;

    lexcm::ordered_json out;
    if (modes.fast && modes.oracle) {
        lexcm::AgreementRecord rec = lexcm::verify_instance(inst, opts);
        out["fast"] = lexcm::report_to_json(rec.fast);
        out["oracle"] = lexcm::report_to_json(rec.oracle);
        out["agree"] = rec.agree();
        out["mismatched_fields"] = rec.mismatched_fields;
    } else if (modes.oracle) {
        out = lexcm::report_to_json(lexcm::classify_oracle(inst, opts));
    } else if (modes.fast) {
        out = lexcm::report_to_json(lexcm::classify_fast(inst));
    }
    if (modes.pattern) {
        std::optional<int> level = lexcm::pattern_strict_level(inst);
        lexcm::ordered_json pat;
        pat["method"] = "pattern";
        pat["pattern_matched"] = level.has_value();
        pat["strict_cm_level"] = level ? lexcm::ordered_json(*level) : lexcm::ordered_json(nullptr);
        if (out.empty())
            out = std::move(pat);
        else
            out["pattern"] = std::move(pat);
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int cmd_show(const InstanceArgs& args) {
    lexcm::LexsegmentInstance inst = args.build();
    lexcm::SimplicialComplex c = lexcm::stanley_reisner(inst);
    lexcm::ordered_json out;
    out["n"] = inst.n;
    out["generators"] = lexcm::ordered_json::array();
    for (const lexcm::SqfMonomial& w : lexcm::lexsegment(inst))
        out["generators"].push_back(lexcm::format_monomial(w));
    out["facets"] = lexcm::facets_to_json(c);
    out["f_vector"] = lexcm::f_vector(c);
    out["minimal_non_faces"] = lexcm::faces_to_json(lexcm::minimal_non_faces(c));
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int cmd_sweep(int min_n, int max_n, const std::string& d_range, const std::string& mode_text,
              const std::string& field_text, const std::string& out_path,
              const std::string& format, long budget) {
    lexcm::SweepConfig cfg;
    cfg.min_n = min_n;
    cfg.max_n = max_n;
    std::tie(cfg.min_d, cfg.max_d) = parse_degree_range(d_range);
    Modes modes = parse_modes(mode_text);
    cfg.mode_fast = modes.fast;
    cfg.mode_oracle = modes.oracle;
    cfg.mode_pattern = modes.pattern;
    if (!cfg.mode_fast && !cfg.mode_oracle)
        throw lexcm::invalid_input("sweep needs the fast or the oracle mode");
    cfg.field = lexcm::FieldSpec::parse(field_text);
    cfg.shell_budget = budget;
    if (format != "csv" && format != "json")
        throw lexcm::invalid_input("format must be csv or json");

    auto [rows, summary] = lexcm::run_sweep(cfg);

    auto write_rows = [&](std::ostream& os) {
        if (format == "csv")
            lexcm::write_csv(rows, cfg, os);
        else
            lexcm::write_json(rows, cfg, os);
    };
    if (out_path.empty()) {
        write_rows(std::cout);
    } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot open '" << out_path << "' for writing\n";
            return kExitIo;
        }
        write_rows(file);
        if (!file.good()) {
            std::cerr << "error: write to '" << out_path << "' failed\n";
            return kExitIo;
        }
    }

    std::ostream& sum = out_path.empty() ? std::cerr : std::cout;
    sum << "instances=" << summary.instances << " disagreements=" << summary.disagreements;
    if (cfg.mode_pattern) sum << " pattern_discrepancies=" << summary.pattern_discrepancies;
    if (summary.shell_inconclusive > 0)
        sum << " shell_budget_exceeded=" << summary.shell_inconclusive;
    sum << "\n";
    for (const std::string& line : summary.disagreement_lines) sum << "disagree: " << line << "\n";
    for (const std::string& line : summary.pattern_lines) sum << "pattern: " << line << "\n";
    for (const std::string& line : summary.inconclusive_lines)
        sum << "shell-budget-exceeded: " << line << "\n";
    return summary.disagreements == 0 ? kExitOk : kExitVerificationFailed;
}

int cmd_verify_join(long trials, std::uint64_t seed, const std::string& field_text) {
    if (trials < 1) throw lexcm::invalid_input("verify-join: need at least one trial");
    lexcm::FieldSpec field = lexcm::FieldSpec::parse(field_text);
    lexcm::JoinVerification result = lexcm::verify_join(trials, seed, field);
    std::cout << "trials=" << result.trials << " sharpness_checks=" << result.sharpness_checks
              << " cm_iff_checks=" << result.cm_iff_checks << " failures=" << result.failures
              << "\n";
    for (const lexcm::JoinTrialFailure& f : result.examples) {
        lexcm::ordered_json j;
        j["failure"] = f.what;
        j["detail"] = f.detail;
        std::cout << j.dump(2) << "\n";
    }
    return result.failures == 0 ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"squarefree lexsegment complexes: construction and Cohen-Macaulay classification"};
    app.require_subcommand(1);

    InstanceArgs classify_args;
    std::string classify_mode = "oracle", classify_field = "2";
    long classify_budget = lexcm::kDefaultShellBudget;
    CLI::App* classify = app.add_subcommand("classify", "classify one lexsegment instance");
    add_instance_flags(classify, classify_args);
    classify->add_option("--mode", classify_mode, "fast|oracle|pattern|both (comma-separable)");
    classify->add_option("--field", classify_field, "prime characteristic or Q");
    classify->add_option("--budget", classify_budget, "shellability search node budget");

    InstanceArgs show_args;
    CLI::App* show = app.add_subcommand("show", "print facets, f-vector, minimal non-faces");
    add_instance_flags(show, show_args);

    int sweep_min_n = 2, sweep_max_n = 6;
    std::string sweep_d = "2", sweep_mode = "both", sweep_field = "2", sweep_out, sweep_format = "csv";
    long sweep_budget = lexcm::kDefaultShellBudget;
    CLI::App* sweep = app.add_subcommand("sweep", "exhaustive classification over a range");
    sweep->add_option("--min-n", sweep_min_n, "smallest number of variables");
    sweep->add_option("--max-n", sweep_max_n, "largest number of variables")->required();
    sweep->add_option("--d", sweep_d, "degree, or degree range like 2-3");
    sweep->add_option("--mode", sweep_mode, "fast|oracle|pattern|both (comma-separable)");
    sweep->add_option("--field", sweep_field, "prime characteristic or Q");
    sweep->add_option("--out", sweep_out, "output file (rows go to stdout when omitted)");
    sweep->add_option("--format", sweep_format, "csv|json");
    sweep->add_option("--budget", sweep_budget, "shellability search node budget");

    long vj_trials = 200;
    std::uint64_t vj_seed = 20240601;
    std::string vj_field = "2";
    CLI::App* vj = app.add_subcommand("verify-join", "randomized verification of the join level rule");
    vj->add_option("--trials", vj_trials, "number of random trials");
    vj->add_option("--seed", vj_seed, "random seed");
    vj->add_option("--field", vj_field, "prime characteristic or Q");

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify->parsed())
            return cmd_classify(classify_args, classify_mode, classify_field, classify_budget);
        if (show->parsed()) return cmd_show(show_args);
        if (sweep->parsed())
            return cmd_sweep(sweep_min_n, sweep_max_n, sweep_d, sweep_mode, sweep_field, sweep_out,
                             sweep_format, sweep_budget);
        if (vj->parsed()) return cmd_verify_join(vj_trials, vj_seed, vj_field);
    } catch (const lexcm::invalid_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const lexcm::homology_audit_error& e) {
        std::cerr << "homology audit failure: " << e.what() << "\n";
        return kExitVerificationFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    return kExitOk;
}
