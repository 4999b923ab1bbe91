/**
 * Exhaustive verification machinery: instance enumeration, the
 * fast/oracle/pattern sweep with CSV and JSON writers, and the seeded
 * random verification of the join behavior of CM_t.
 */

#ifndef LEXCM_SWEEP_HPP
#define LEXCM_SWEEP_HPP

#include <functional>
#include <ostream>
#include <random>

#include "lexcm/oracle.hpp"
#include "lexcm/serialize.hpp"

namespace lexcm {

struct SweepConfig {
    int min_n = 2, max_n = 6;
    int min_d = 2, max_d = 2;
    FieldSpec field = FieldSpec::f2();
    bool mode_fast = true;
    bool mode_oracle = true;
    bool mode_pattern = false;
    long shell_budget = kDefaultShellBudget;
    /** Oracle rows cross-check F2/F3/Q betti plus d.d = 0 and Euler per link. */
    bool audit = true;

    void validate() const {
        if (min_d < 2) throw invalid_input("sweep: degree range must start at 2");
        if (max_d < min_d || max_n < min_n) throw invalid_input("sweep: empty range");
        if (max_n > kMaxGroundSet)
            throw invalid_input("sweep: n capped at " + std::to_string(kMaxGroundSet));
        if (!mode_fast && !mode_oracle)
            throw invalid_input("sweep: needs the fast or the oracle mode");
    }
};

struct SweepRow {
    int n = 0, d = 0;
    SqfMonomial u, v;
    int leading_index = 1;
    std::optional<ClassificationReport> fast;
    std::optional<ClassificationReport> oracle;
    std::optional<int> pattern_level;
    bool pattern_matched = false;
    std::vector<std::string> mismatched_fields;  // fast vs oracle, when both ran
    bool pattern_agrees = true;
    bool shell_inconclusive = false;  // oracle shelling search hit its budget

    const ClassificationReport& primary() const { return oracle ? *oracle : *fast; }
    bool agree() const { return mismatched_fields.empty(); }
};

struct SweepSummary {
    long instances = 0;
    long disagreements = 0;          // fast vs oracle, conclusive fields only
    long pattern_discrepancies = 0;  // pattern vs primary verdicts
    long shell_inconclusive = 0;     // shelling searches that hit the budget
    std::vector<std::string> disagreement_lines;
    std::vector<std::string> pattern_lines;
    std::vector<std::string> inconclusive_lines;
};

/** Deterministic instance order: n, then d, then u and v by lex position. */
inline void for_each_instance(int min_n, int max_n, int min_d, int max_d,
                              const std::function<void(const LexsegmentInstance&)>& fn) {
    for (int n = min_n; n <= max_n; ++n)
        for (int d = min_d; d <= max_d && d <= n; ++d) {
            std::vector<SqfMonomial> mons = enumerate_md(n, d);
            for (std::size_t iu = 0; iu < mons.size(); ++iu)
                for (std::size_t iv = iu; iv < mons.size(); ++iv)
                    fn(LexsegmentInstance(n, mons[iu], mons[iv]));
        }
}

inline std::string instance_label(const SweepRow& row) {
    return "n=" + std::to_string(row.n) + " d=" + std::to_string(row.d) + " u=" +
           format_monomial(row.u) + " v=" + format_monomial(row.v);
}

inline SweepRow sweep_instance(const LexsegmentInstance& inst, const SweepConfig& cfg) {
    SweepRow row;
    row.n = inst.n;
    row.d = inst.d;
    row.u = inst.u;
    row.v = inst.v;
    row.leading_index = inst.leading_index();
    if (cfg.mode_fast) row.fast = classify_fast(inst);
    if (cfg.mode_oracle) {
        OracleOptions opts;
        opts.field = cfg.field;
        opts.shell_budget = cfg.shell_budget;
        opts.audit = cfg.audit;
        try {
            row.oracle = classify_oracle(inst, opts);
        } catch (const homology_audit_error& e) {
            throw homology_audit_error(std::string(e.what()) + " on " + instance_label(row));
        }
    }
    if (row.oracle) row.shell_inconclusive = row.oracle->shellable == ShellVerdict::budget_exceeded;
    if (row.fast && row.oracle) {
        auto check = [&](bool same, const char* name) {
            if (!same) row.mismatched_fields.emplace_back(name);
        };
        check(row.fast->pure == row.oracle->pure, "pure");
        check(row.fast->connected == row.oracle->connected, "connected");
        check(row.fast->flag == row.oracle->flag, "flag");
        check(row.fast->s2 == row.oracle->s2, "s2");
        // an exhausted search is inconclusive, not a contradiction
        check(row.shell_inconclusive || row.fast->shellable == row.oracle->shellable,
              "shellable");
        check(row.fast->cm == row.oracle->cm, "cm");
        check(row.fast->buchsbaum == row.oracle->buchsbaum, "buchsbaum");
        check(row.fast->strict_cm_level == row.oracle->strict_cm_level, "strict_cm_level");
    }
    if (cfg.mode_pattern) {
        row.pattern_level = pattern_strict_level(inst);
        row.pattern_matched = row.pattern_level.has_value();
        const std::optional<int>& actual = row.primary().strict_cm_level;
        if (row.pattern_matched)
            row.pattern_agrees = (actual == row.pattern_level);
        else
            row.pattern_agrees = !actual.has_value() || *actual == 0;
    }
    return row;
}

inline std::pair<std::vector<SweepRow>, SweepSummary> run_sweep(const SweepConfig& cfg) {
    cfg.validate();
    std::vector<SweepRow> rows;
    SweepSummary summary;
    for_each_instance(cfg.min_n, cfg.max_n, cfg.min_d, cfg.max_d,
                      [&](const LexsegmentInstance& inst) {
                          SweepRow row = sweep_instance(inst, cfg);
                          ++summary.instances;
                          if (!row.agree()) {
                              ++summary.disagreements;
                              std::string fields;
                              for (const auto& f : row.mismatched_fields)
                                  fields += (fields.empty() ? "" : ",") + f;
                              summary.disagreement_lines.push_back(instance_label(row) + " [" +
                                                                   fields + "]");
                          }
                          if (cfg.mode_pattern && !row.pattern_agrees) {
                              ++summary.pattern_discrepancies;
                              summary.pattern_lines.push_back(
                                  instance_label(row) + " pattern=" +
                                  (row.pattern_level ? std::to_string(*row.pattern_level)
                                                     : std::string("-")) +
                                  " actual=" +
                                  level_to_json(row.primary().strict_cm_level).dump());
                          }
                          if (row.shell_inconclusive) {
                              ++summary.shell_inconclusive;
                              summary.inconclusive_lines.push_back(instance_label(row));
                          }
                          rows.push_back(std::move(row));
                      });
    return {std::move(rows), std::move(summary)};
}

inline std::string csv_bool(bool b) { return b ? "true" : "false"; }

inline std::string csv_level(const std::optional<int>& level) {
    return level ? std::to_string(*level) : "none";
}

/**
 * CSV rows in the fixed column order
 *   n,d,u,v,i,pure,connected,flag,s2,shellable,cm,buchsbaum,
 *   strict_level_fast,strict_level_oracle,agree
 * with pattern columns appended when the pattern mode ran. Boolean
 * columns come from the oracle when it ran, otherwise from the fast
 * classifier. Monomials are quoted ("1,3").
 */
inline void write_csv(const std::vector<SweepRow>& rows, const SweepConfig& cfg,
                      std::ostream& out) {
    out << "n,d,u,v,i,pure,connected,flag,s2,shellable,cm,buchsbaum,strict_level_fast,"
           "strict_level_oracle,agree";
    if (cfg.mode_pattern) out << ",strict_level_pattern,pattern_agree";
    out << "\n";
    for (const SweepRow& row : rows) {
        const ClassificationReport& r = row.primary();
        out << row.n << ',' << row.d << ",\"" << format_monomial(row.u) << "\",\""
            << format_monomial(row.v) << "\"," << row.leading_index << ',' << csv_bool(r.pure)
            << ',' << (r.connected ? csv_bool(*r.connected) : "") << ',' << csv_bool(r.flag)
            << ',' << csv_bool(r.s2) << ',' << to_string(r.shellable) << ',' << csv_bool(r.cm)
            << ',' << csv_bool(r.buchsbaum) << ','
            << (row.fast ? csv_level(row.fast->strict_cm_level) : "") << ','
            << (row.oracle ? csv_level(row.oracle->strict_cm_level) : "") << ','
            << (row.fast && row.oracle ? csv_bool(row.agree()) : "");
        if (cfg.mode_pattern)
            out << ',' << (row.pattern_level ? std::to_string(*row.pattern_level) : "") << ','
                << csv_bool(row.pattern_agrees);
        out << "\n";
    }
}

inline void write_json(const std::vector<SweepRow>& rows, const SweepConfig& cfg,
                       std::ostream& out) {
    ordered_json arr = ordered_json::array();
    for (const SweepRow& row : rows) {
        ordered_json j;
        j["n"] = row.n;
        j["d"] = row.d;
        j["u"] = format_monomial(row.u);
        j["v"] = format_monomial(row.v);
        j["i"] = row.leading_index;
        const ClassificationReport& r = row.primary();
        j["pure"] = r.pure;
        j["connected"] = r.connected ? ordered_json(*r.connected) : ordered_json(nullptr);
        j["flag"] = r.flag;
        j["s2"] = r.s2;
        j["shellable"] = shell_to_json(r.shellable);
        j["cm"] = r.cm;
        j["buchsbaum"] = r.buchsbaum;
        j["strict_level_fast"] =
            row.fast ? level_to_json(row.fast->strict_cm_level) : ordered_json(nullptr);
        j["strict_level_oracle"] =
            row.oracle ? level_to_json(row.oracle->strict_cm_level) : ordered_json(nullptr);
        j["agree"] = row.fast && row.oracle ? ordered_json(row.agree()) : ordered_json(nullptr);
        if (cfg.mode_pattern) {
            j["strict_level_pattern"] =
                row.pattern_level ? ordered_json(*row.pattern_level) : ordered_json(nullptr);
            j["pattern_agree"] = row.pattern_agrees;
        }
        arr.push_back(std::move(j));
    }
    out << arr.dump(2) << "\n";
}

// ---------------------------------------------------------------------------
// Join verification on seeded random complexes.
// ---------------------------------------------------------------------------

struct JoinTrialFailure {
    std::string what;
    ordered_json detail;
};

struct JoinVerification {
    long trials = 0;
    long sharpness_checks = 0;
    long cm_iff_checks = 0;
    long failures = 0;
    std::vector<JoinTrialFailure> examples;
};

namespace detail {

/** Random complex with all facets of one size (hence pure) on [n]. */
inline SimplicialComplex random_pure_complex(std::mt19937_64& rng, int max_vertices) {
    std::uniform_int_distribution<int> nv(2, max_vertices);
    int n = nv(rng);
    std::uniform_int_distribution<int> fs(1, std::min(n, 4));
    int k = fs(rng);
    std::vector<VertexMask> candidates;
    for (VertexMask s = 0; s < (VertexMask{1} << n); ++s)
        if (popcount(s) == k) candidates.push_back(s);
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    std::uniform_int_distribution<int> count(1, std::min<int>(6, static_cast<int>(candidates.size())));
    int m = count(rng);
    std::vector<VertexMask> facets;
    for (int j = 0; j < m; ++j) facets.push_back(candidates[pick(rng)]);
    return SimplicialComplex::from_facets(n, facets);
}

/** Random complex with mixed facet sizes (may be impure). */
inline SimplicialComplex random_complex(std::mt19937_64& rng, int max_vertices) {
    std::uniform_int_distribution<int> nv(1, max_vertices);
    int n = nv(rng);
    std::uniform_int_distribution<VertexMask> pick(1, (VertexMask{1} << n) - 1);
    std::uniform_int_distribution<int> count(1, 5);
    int m = count(rng);
    std::vector<VertexMask> facets;
    for (int j = 0; j < m; ++j) facets.push_back(pick(rng));
    return SimplicialComplex::from_facets(n, facets);
}

}  // namespace detail

/**
 * Seeded verification of the join behavior of Cohen-Macaulayness in
 * codimension: every trial samples a Cohen-Macaulay first factor and a
 * strictly-CM_t second factor (t >= 1), joins them on disjoint labels,
 * and checks that the join is strictly CM at (dim Delta1 + 1) + t; an
 * independent sub-check samples unconstrained pairs and confirms that
 * the join is Cohen-Macaulay exactly when both factors are.
 */
inline JoinVerification verify_join(long trials, std::uint64_t seed, const FieldSpec& field,
                                    int max_vertices = 7) {
    std::mt19937_64 rng(seed);
    JoinVerification result;
    const int resample_cap = 2000;
    for (long trial = 0; trial < trials; ++trial) {
        ++result.trials;
        // first factor: Cohen-Macaulay (sometimes degenerate on purpose)
        SimplicialComplex d1 = SimplicialComplex::irrelevant(0);
        std::uniform_int_distribution<int> kind(0, 3);
        int k1 = kind(rng);
        if (k1 == 1) {
            std::uniform_int_distribution<int> nv(1, 3);
            d1 = SimplicialComplex::full_simplex(nv(rng));
        } else if (k1 >= 2) {
            for (int attempt = 0; attempt < resample_cap; ++attempt) {
                SimplicialComplex cand = detail::random_pure_complex(rng, 4);
                if (is_cm_reisner(cand, field)) { d1 = cand; break; }
            }
        }
        // second factor: strictly CM_t for some t >= 1
        std::optional<SimplicialComplex> d2;
        std::optional<int> t;
        for (int attempt = 0; attempt < resample_cap && !d2; ++attempt) {
            SimplicialComplex cand = detail::random_pure_complex(rng, max_vertices);
            std::optional<int> level = strict_cm_level(cand, field);
            if (level && *level >= 1) {
                d2 = cand;
                t = level;
            }
        }
        if (!d2) throw std::runtime_error("verify_join: resample cap exhausted");

        const int r1 = d1.dim() + 1;
        SimplicialComplex shifted = shift_labels(*d2, d1.n(), d1.n() + d2->n());
        SimplicialComplex joined = join(d1, shifted);
        std::optional<int> joined_level = strict_cm_level(joined, field);
        ++result.sharpness_checks;
        if (!joined_level || *joined_level != r1 + *t) {
            ++result.failures;
            ordered_json detail;
            detail["delta1"] = facets_to_json(d1);
            detail["delta2"] = facets_to_json(*d2);
            detail["r1"] = r1;
            detail["t"] = *t;
            detail["expected_level"] = r1 + *t;
            detail["actual_level"] = level_to_json(joined_level);
            result.examples.push_back({"join strict level != r1 + t", std::move(detail)});
        }

        // independent CM <-> CM x CM check on an unconstrained pair
        SimplicialComplex a = detail::random_complex(rng, 4);
        SimplicialComplex b = detail::random_complex(rng, 4);
        SimplicialComplex b_shifted = shift_labels(b, a.n(), a.n() + b.n());
        bool cm_join = is_cm_reisner(join(a, b_shifted), field);
        bool cm_both = is_cm_reisner(a, field) && is_cm_reisner(b, field);
        ++result.cm_iff_checks;
        if (cm_join != cm_both) {
            ++result.failures;
            ordered_json detail;
            detail["a"] = facets_to_json(a);
            detail["b"] = facets_to_json(b);
            detail["cm_join"] = cm_join;
            detail["cm_both"] = cm_both;
            result.examples.push_back({"join CM differs from factor CM", std::move(detail)});
        }
    }
    return result;
}

}  // namespace lexcm

#endif  // LEXCM_SWEEP_HPP
