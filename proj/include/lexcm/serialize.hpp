/**
 * JSON views: canonical facet lists (sorted integer arrays, facets in
 * lexicographic order) and classification reports with a stable key
 * order, suitable for golden-file diffs.
 */

#ifndef LEXCM_SERIALIZE_HPP
#define LEXCM_SERIALIZE_HPP

#include <json.hpp>

#include "lexcm/classify.hpp"
#include "lexcm/complex.hpp"

namespace lexcm {

using ordered_json = nlohmann::ordered_json;

inline ordered_json faces_to_json(const std::vector<VertexMask>& faces) {
    ordered_json arr = ordered_json::array();
    for (VertexMask f : faces) arr.push_back(vertices_of(f));
    return arr;
}

inline ordered_json facets_to_json(const SimplicialComplex& c) {
    if (c.is_void()) return ordered_json::array();
    return faces_to_json(c.facets());
}

inline ordered_json shell_to_json(ShellVerdict v) {
    switch (v) {
        case ShellVerdict::not_shellable: return false;
        case ShellVerdict::shellable: return true;
        default: return "search-budget-exceeded";
    }
}

inline ordered_json level_to_json(const std::optional<int>& level) {
    if (!level) return "none";
    return *level;
}

inline ordered_json report_to_json(const ClassificationReport& r) {
    ordered_json j;
    j["pure"] = r.pure;
    if (r.connected)
        j["connected"] = *r.connected;
    else
        j["connected"] = nullptr;
    j["flag"] = r.flag;
    j["s2"] = r.s2;
    j["shellable"] = shell_to_json(r.shellable);
    j["cm"] = r.cm;
    j["buchsbaum"] = r.buchsbaum;
    j["strict_cm_level"] = level_to_json(r.strict_cm_level);
    j["method"] = to_string(r.method);
    j["field"] = r.field.label();
    return j;
}

}  // namespace lexcm

#endif  // LEXCM_SERIALIZE_HPP
