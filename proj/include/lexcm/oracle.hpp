/**
 * Homological oracle: Reisner-criterion Cohen-Macaulayness, CM_t and
 * strict levels, and the full from-first-principles classification of a
 * lexsegment instance. Optionally audits every homology computation
 * (boundary composition, Euler identity, cross-field betti agreement).
 */

#ifndef LEXCM_ORACLE_HPP
#define LEXCM_ORACLE_HPP

#include <sstream>

#include "lexcm/classify.hpp"
#include "lexcm/homology.hpp"

namespace lexcm {

struct OracleOptions {
    FieldSpec field = FieldSpec::f2();
    long shell_budget = kDefaultShellBudget;
    /** Cross-check F2/F3/Q betti vectors, d.d = 0 and Euler on every complex touched. */
    bool audit = false;
};

/** Raised when an audited homology computation is internally inconsistent. */
class homology_audit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::string describe_betti(const BettiVector& b) {
    std::ostringstream out;
    out << "(";
    for (int i = -1; i <= b.dim; ++i) out << (i > -1 ? ", " : "") << b.rank(i);
    out << ")";
    return out.str();
}

inline BettiVector audited_betti(const SimplicialComplex& c, const OracleOptions& opts) {
    BettiVector b = reduced_betti(c, opts.field);
    if (!opts.audit) return b;
    if (!boundary_composition_is_zero(c))
        throw homology_audit_error("boundary maps do not compose to zero");
    if (!euler_characteristic_check(c, opts.field))
        throw homology_audit_error("Euler characteristic identity violated");
    BettiVector b2 = reduced_betti(c, FieldSpec::f2());
    BettiVector b3 = reduced_betti(c, FieldSpec::f3());
    BettiVector bq = reduced_betti(c, FieldSpec::rationals());
    if (!(b2.ranks == b3.ranks && b2.ranks == bq.ranks))
        throw homology_audit_error("betti vectors differ across F2/F3/Q: " + describe_betti(b2) +
                                   " vs " + describe_betti(b3) + " vs " + describe_betti(bq));
    return b;
}

namespace detail {

/**
 * One homology pass: for every face H, whether betti(link(H)) vanishes
 * below dim(link(H)). A face F has Cohen-Macaulay link iff every face
 * containing F passes, so the largest failing face size decides every
 * CM_t question at once.
 */
struct LinkSurvey {
    bool any_bad = false;
    int max_bad_size = -1;  // largest |H| with non-vanishing low betti
};

inline LinkSurvey survey_links(const SimplicialComplex& c, const OracleOptions& opts) {
    LinkSurvey s;
    for (const auto& level : c.faces_by_size())
        for (VertexMask h : level) {
            SimplicialComplex lk = link(c, Face{h});
            BettiVector b = audited_betti(lk, opts);
            if (!b.vanishes_below(lk.dim())) {
                s.any_bad = true;
                s.max_bad_size = std::max(s.max_bad_size, popcount(h));
            }
        }
    return s;
}

}  // namespace detail

/**
 * Reisner's criterion: Cohen-Macaulay over the field iff for every face F
 * (the empty face included) the reduced homology of link(F) vanishes
 * below its dimension. The irrelevant complex is Cohen-Macaulay.
 */
inline bool is_cm_reisner(const SimplicialComplex& c, const FieldSpec& field) {
    if (c.is_void()) throw invalid_input("is_cm_reisner: void complex");
    if (c.is_irrelevant()) return true;
    OracleOptions opts;
    opts.field = field;
    return !detail::survey_links(c, opts).any_bad;
}

/**
 * CM in codimension t: pure, and link(F) Cohen-Macaulay for every face
 * with at least t vertices. At t = 0 this is purity plus the Reisner
 * criterion.
 */
inline bool is_cm_t(const SimplicialComplex& c, int t, const FieldSpec& field) {
    if (c.is_void()) throw invalid_input("is_cm_t: void complex");
    if (t < 0) throw invalid_input("is_cm_t: t must be >= 0");
    if (c.is_irrelevant()) return true;
    if (!is_pure(c)) return false;
    OracleOptions opts;
    opts.field = field;
    detail::LinkSurvey s = detail::survey_links(c, opts);
    return s.max_bad_size < t;
}

/**
 * Smallest t in [0, dim + 1] with is_cm_t true; empty for impure
 * complexes (purity is part of every CM_t). Every pure complex qualifies
 * by t = dim at the latest, since links of faces of size >= dim are
 * nonempty point sets or the irrelevant complex.
 */
inline std::optional<int> strict_cm_level(const SimplicialComplex& c, const OracleOptions& opts) {
    if (c.is_void()) throw invalid_input("strict_cm_level: void complex");
    if (c.is_irrelevant()) return 0;
    if (!is_pure(c)) return std::nullopt;
    return detail::survey_links(c, opts).max_bad_size + 1;
}

inline std::optional<int> strict_cm_level(const SimplicialComplex& c, const FieldSpec& field) {
    OracleOptions opts;
    opts.field = field;
    return strict_cm_level(c, opts);
}

/** Full oracle classification of a lexsegment instance. */
inline ClassificationReport classify_oracle(const LexsegmentInstance& inst,
                                            const OracleOptions& opts = {}) {
    SimplicialComplex c = stanley_reisner(inst);
    detail::LinkSurvey s = detail::survey_links(c, opts);
    ClassificationReport r;
    r.method = Method::oracle;
    r.field = opts.field;
    r.pure = is_pure(c);
    r.connected = is_connected(c);
    r.flag = is_flag(c);
    r.s2 = is_s2(c);
    r.cm = !s.any_bad;
    r.buchsbaum = r.pure && s.max_bad_size <= 0;
    if (r.pure) r.strict_cm_level = s.max_bad_size + 1;
    r.shellable = r.pure ? is_shellable(c, opts.shell_budget) : ShellVerdict::not_shellable;
    return r;
}

/**
 * Field-by-field comparison of the fast and oracle classifications. A
 * shelling search that hits its budget is inconclusive rather than a
 * mismatch; it is flagged separately.
 */
struct AgreementRecord {
    ClassificationReport fast;
    ClassificationReport oracle;
    std::vector<std::string> mismatched_fields;
    bool shell_inconclusive = false;

    bool agree() const { return mismatched_fields.empty(); }
};

inline AgreementRecord verify_instance(const LexsegmentInstance& inst,
                                       const OracleOptions& opts = {}) {
    AgreementRecord rec;
    rec.fast = classify_fast(inst);
    rec.oracle = classify_oracle(inst, opts);
    rec.shell_inconclusive = rec.oracle.shellable == ShellVerdict::budget_exceeded;
    auto check = [&](bool same, const char* name) {
        if (!same) rec.mismatched_fields.emplace_back(name);
    };
    check(rec.fast.pure == rec.oracle.pure, "pure");
    check(rec.fast.connected == rec.oracle.connected, "connected");
    check(rec.fast.flag == rec.oracle.flag, "flag");
    check(rec.fast.s2 == rec.oracle.s2, "s2");
    check(rec.shell_inconclusive || rec.fast.shellable == rec.oracle.shellable, "shellable");
    check(rec.fast.cm == rec.oracle.cm, "cm");
    check(rec.fast.buchsbaum == rec.oracle.buchsbaum, "buchsbaum");
    check(rec.fast.strict_cm_level == rec.oracle.strict_cm_level, "strict_cm_level");
    return rec;
}

}  // namespace lexcm

#endif  // LEXCM_ORACLE_HPP
