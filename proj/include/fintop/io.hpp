#pragma once

// Text formats: space and map documents, subset expressions, and the
// machine/table/graph report renderers used by the CLI.
//
// A space document is line-based. Comments start with '#', commas count as
// whitespace, and two directives exist:
//
//   points a b c     the ground set, once, before any other directive
//   open a b         one open set per line; a bare "open" is the empty set
//
// A map document describes the codomain with the same two directives and
// adds one assignment per domain point:
//
//   map a q          f(a) = q
//
// The domain comes from elsewhere (classify's --space file), so domain names
// are only resolved when the two are combined.

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fintop/claims.hpp"
#include "fintop/classifiers.hpp"
#include "fintop/enumeration.hpp"
#include "fintop/errors.hpp"
#include "fintop/implications.hpp"
#include "fintop/map.hpp"
#include "fintop/names.hpp"
#include "fintop/operators.hpp"
#include "fintop/space.hpp"
#include "fintop/variant.hpp"
#include "fintop/version.hpp"

namespace fintop {

struct SpaceDocument {
    std::vector<std::string> points;
    std::vector<std::vector<std::string>> opens;  ///< in file order
};

struct SourceToken {
    std::string text;
    int line = 0;    ///< 1-based
    int column = 0;  ///< 1-based start of the token
};

struct MapAssignment {
    SourceToken from;  ///< domain point, resolved against the --space file
    SourceToken to;    ///< codomain point, resolved within the map file
};

struct MapDocument {
    SpaceDocument codomain;
    std::vector<MapAssignment> assignments;
};

namespace detail {

inline std::vector<SourceToken> tokenize_line(const std::string& raw, int line_no) {
    std::vector<SourceToken> out;
    std::string line = raw;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t' || line[i] == ',' || line[i] == '\r') {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != ',' &&
               line[i] != '\r')
            ++i;
        out.push_back(SourceToken{line.substr(start, i - start), line_no,
                                  static_cast<int>(start) + 1});
    }
    return out;
}

inline bool reserved_word(const std::string& word) {
    return word == "points" || word == "open" || word == "map";
}

inline int point_index(const std::vector<std::string>& points, const std::string& name) {
    for (std::size_t i = 0; i < points.size(); ++i)
        if (points[i] == name) return static_cast<int>(i);
    return -1;
}

/// Shared parser skeleton; `map_lines` enables the map directive.
inline void parse_document_lines(std::istream& in, SpaceDocument& doc,
                                 std::vector<MapAssignment>* map_lines) {
    std::string raw;
    int line_no = 0;
    bool have_points = false;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::vector<SourceToken> tokens = tokenize_line(raw, line_no);
        if (tokens.empty()) continue;
        const SourceToken& head = tokens.front();
        if (head.text == "points") {
            if (have_points) throw ParseError(line_no, head.column, "duplicate points line");
            if (tokens.size() == 1)
                throw ParseError(line_no, head.column, "points line needs at least one name");
            if (tokens.size() - 1 > static_cast<std::size_t>(kMaxGroundSize))
                throw ParseError(line_no, head.column,
                                 "too many points (" + std::to_string(tokens.size() - 1) +
                                     " > " + std::to_string(kMaxGroundSize) + ")");
            for (std::size_t i = 1; i < tokens.size(); ++i) {
                const SourceToken& t = tokens[i];
                if (reserved_word(t.text))
                    throw ParseError(t.line, t.column, "'" + t.text + "' is a reserved word");
                if (point_index(doc.points, t.text) >= 0)
                    throw ParseError(t.line, t.column, "duplicate point '" + t.text + "'");
                doc.points.push_back(t.text);
            }
            have_points = true;
        } else if (head.text == "open") {
            if (!have_points)
                throw ParseError(line_no, head.column, "open line before points line");
            std::vector<std::string> open;
            for (std::size_t i = 1; i < tokens.size(); ++i) {
                const SourceToken& t = tokens[i];
                if (point_index(doc.points, t.text) < 0)
                    throw ParseError(t.line, t.column, "unknown point '" + t.text + "'");
                if (point_index(open, t.text) < 0) open.push_back(t.text);
            }
            doc.opens.push_back(std::move(open));
        } else if (head.text == "map" && map_lines) {
            if (!have_points)
                throw ParseError(line_no, head.column, "map line before points line");
            if (tokens.size() != 3)
                throw ParseError(line_no, head.column,
                                 "map line needs exactly two names: map <from> <to>");
            if (point_index(doc.points, tokens[2].text) < 0)
                throw ParseError(tokens[2].line, tokens[2].column,
                                 "unknown point '" + tokens[2].text + "'");
            for (const MapAssignment& seen : *map_lines)
                if (seen.from.text == tokens[1].text)
                    throw ParseError(tokens[1].line, tokens[1].column,
                                     "point '" + tokens[1].text + "' assigned twice");
            map_lines->push_back(MapAssignment{tokens[1], tokens[2]});
        } else {
            throw ParseError(line_no, head.column, "unknown directive '" + head.text + "'");
        }
    }
    if (!have_points) throw ParseError(1, 0, "missing points line");
}

}  // namespace detail

inline SpaceDocument parse_space_document(std::istream& in) {
    SpaceDocument doc;
    detail::parse_document_lines(in, doc, nullptr);
    return doc;
}

inline SpaceDocument parse_space_document(const std::string& text) {
    std::istringstream in(text);
    return parse_space_document(in);
}

inline MapDocument parse_map_document(std::istream& in) {
    MapDocument doc;
    detail::parse_document_lines(in, doc.codomain, &doc.assignments);
    return doc;
}

inline MapDocument parse_map_document(const std::string& text) {
    std::istringstream in(text);
    return parse_map_document(in);
}

/// Build the space a document describes. Throws ValidationError when the
/// family is not a topology; name errors cannot occur for parsed documents.
inline FiniteSpace resolve_space(const SpaceDocument& doc) {
    const int n = static_cast<int>(doc.points.size());
    std::vector<std::uint16_t> opens;
    opens.reserve(doc.opens.size());
    for (const auto& open : doc.opens) {
        std::uint32_t mask = 0;
        for (const std::string& name : open) {
            const int p = detail::point_index(doc.points, name);
            if (p < 0) throw std::invalid_argument("unresolvable point name '" + name + "'");
            mask |= 1u << p;
        }
        opens.push_back(static_cast<std::uint16_t>(mask));
    }
    return make_topology(n, std::move(opens));
}

struct ResolvedMap {
    FiniteSpace codomain;
    PointNames codomain_names;
    PointMap map;
};

inline ResolvedMap resolve_map(const MapDocument& doc, const FiniteSpace& domain,
                               const PointNames& domain_names) {
    FiniteSpace codomain = resolve_space(doc.codomain);
    std::vector<std::uint8_t> image(static_cast<std::size_t>(domain.ground_size()), 0);
    std::vector<bool> assigned(static_cast<std::size_t>(domain.ground_size()), false);
    for (const MapAssignment& a : doc.assignments) {
        const int from = detail::point_index(domain_names.names, a.from.text);
        if (from < 0)
            throw ParseError(a.from.line, a.from.column,
                             "unknown point '" + a.from.text + "' (not in the domain)");
        const int to = detail::point_index(doc.codomain.points, a.to.text);
        image[static_cast<std::size_t>(from)] = static_cast<std::uint8_t>(to);
        assigned[static_cast<std::size_t>(from)] = true;
    }
    for (std::size_t p = 0; p < assigned.size(); ++p)
        if (!assigned[p])
            throw ValidationError("map file assigns no image to point '" +
                                  domain_names.names[p] + "'");
    return ResolvedMap{codomain, PointNames{doc.codomain.points},
                       PointMap(domain, codomain, std::move(image))};
}

/// Parse a subset expression like "a,c", "{a,c}", "a c" or "{}".
inline SubsetMask parse_subset(const std::string& text, const PointNames& names) {
    std::string cleaned = text;
    for (char& c : cleaned)
        if (c == '{' || c == '}') c = ' ';
    const std::vector<SourceToken> tokens = detail::tokenize_line(cleaned, 1);
    std::uint32_t mask = 0;
    for (const SourceToken& t : tokens) {
        const int p = detail::point_index(names.names, t.text);
        if (p < 0) throw ParseError(t.line, t.column, "unknown point '" + t.text + "'");
        mask |= 1u << p;
    }
    return SubsetMask(mask, static_cast<int>(names.names.size()));
}

inline SpaceDocument document_from_space(const FiniteSpace& space, const PointNames& names) {
    SpaceDocument doc;
    doc.points = names.names;
    for (std::uint16_t open : space.opens()) {
        std::vector<std::string> members;
        for (int p = 0; p < space.ground_size(); ++p)
            if ((open >> p) & 1u) members.push_back(names.names[static_cast<std::size_t>(p)]);
        doc.opens.push_back(std::move(members));
    }
    return doc;
}

inline std::string space_document_text(const SpaceDocument& doc) {
    std::string out = "points";
    for (const std::string& p : doc.points) out += " " + p;
    out += "\n";
    for (const auto& open : doc.opens) {
        out += "open";
        for (const std::string& p : open) out += " " + p;
        out += "\n";
    }
    return out;
}

// ---- report documents ---------------------------------------------------------

using Json = nlohmann::json;

inline Json json_space(const FiniteSpace& space, const PointNames& names) {
    const SpaceDocument doc = document_from_space(space, names);
    Json j;
    j["points"] = doc.points;
    j["opens"] = doc.opens;
    return j;
}

inline Json json_budget(const SearchBudget& budget) {
    Json j;
    j["max_domain_n"] = budget.max_domain_n;
    j["max_codomain_n"] = budget.max_codomain_n;
    j["max_witness_spaces"] =
        budget.max_witness_spaces ? Json(*budget.max_witness_spaces) : Json(nullptr);
    j["time_limit_ms"] = budget.time_limit ? Json(budget.time_limit->count()) : Json(nullptr);
    return j;
}

/// Witness spaces are named with role-distinct default alphabets: space 0
/// gets a,b,c..., space 1 p,q,r..., space 2 u,v,w....
inline Json json_witness(const WitnessBundle& bundle) {
    Json j;
    std::vector<PointNames> names;
    Json spaces = Json::array();
    for (std::size_t i = 0; i < bundle.spaces.size(); ++i) {
        const WitnessSpace& ws = bundle.spaces[i];
        names.push_back(default_names(ws.space.ground_size(), static_cast<int>(i)));
        Json s = json_space(ws.space, names.back());
        s["role"] = ws.role;
        spaces.push_back(std::move(s));
    }
    j["spaces"] = std::move(spaces);

    Json maps = Json::array();
    for (const WitnessMap& wm : bundle.maps) {
        Json m;
        m["role"] = wm.role;
        m["domain_space"] = wm.domain_space;
        m["codomain_space"] = wm.codomain_space;
        Json assignments;
        const auto& from = names[static_cast<std::size_t>(wm.domain_space)].names;
        const auto& to = names[static_cast<std::size_t>(wm.codomain_space)].names;
        for (std::size_t p = 0; p < wm.image.size(); ++p)
            assignments[from[p]] = to[wm.image[p]];
        m["assignments"] = std::move(assignments);
        maps.push_back(std::move(m));
    }
    j["maps"] = std::move(maps);

    Json subsets = Json::array();
    for (const WitnessSubset& ws : bundle.subsets) {
        Json s;
        s["role"] = ws.role;
        s["space"] = ws.space;
        s["subset"] = format_subset(ws.subset, names[static_cast<std::size_t>(ws.space)].names);
        subsets.push_back(std::move(s));
    }
    j["subsets"] = std::move(subsets);
    j["detail"] = bundle.detail;
    return j;
}

inline Json json_verdict(const ClaimVerdict& verdict) {
    const ClaimSpec& spec = find_claim(verdict.claim_id);
    Json j;
    j["id"] = verdict.claim_id;
    j["kind"] = to_string(spec.kind);
    j["statement"] = spec.statement;
    j["universe"] = spec.universe;
    j["variant"] = to_string(verdict.variant);
    j["outcome"] = to_string(verdict.outcome);
    j["fatal_on_violation"] = spec.fatal_on_violation;
    j["budget"] = json_budget(verdict.budget);
    j["construction_failures"] = verdict.construction_failures;
    j["witness"] = verdict.witness ? json_witness(*verdict.witness) : Json(nullptr);
    return j;
}

inline Json report_envelope(const std::string& command) {
    Json j;
    j["format_version"] = kReportFormatVersion;
    j["tool"] = kToolName;
    j["tool_version"] = kToolVersion;
    j["command"] = command;
    return j;
}

// ---- classify ------------------------------------------------------------------

inline Json json_subset_classification(const SpaceTables& t, SubsetMask subset,
                                       const PointNames& names, AlphaMVariant variant) {
    Json j;
    j["subset"] = format_subset(subset, names.names);
    const SetClassification c = classify_subset(t, subset, variant);
    Json classes;
    for (SetClass sc : kAllSetClasses) classes[to_string(sc)] = c.has(sc);
    j["classes"] = std::move(classes);
    if (!c.has(SetClass::alpha_m_closed)) {
        const auto witness = alpha_m_closed_violator(t, subset, variant);
        j["alpha_m_witness"] = format_subset(*witness, names.names);
    } else {
        j["alpha_m_witness"] = Json(nullptr);
    }
    return j;
}

inline Json json_map_classification(const SpaceTables& x, const SpaceTables& y,
                                    std::span<const std::uint8_t> image,
                                    const PointNames& domain_names,
                                    const PointNames& codomain_names, AlphaMVariant variant) {
    Json j;
    Json assignments;
    for (std::size_t p = 0; p < image.size(); ++p)
        assignments[domain_names.names[p]] = codomain_names.names[image[p]];
    j["assignments"] = std::move(assignments);
    Json classes;
    for (MapClass mc : kAllMapClasses)
        classes[to_string(mc)] = map_has_class(x, y, image, mc, variant);
    j["classes"] = std::move(classes);
    if (auto v = alpha_m_continuity_violation(x, y, image, variant)) {
        Json violation;
        violation["closed_set"] = format_subset(v->closed_set, codomain_names.names);
        violation["preimage"] = format_subset(v->preimage, domain_names.names);
        violation["witness"] = format_subset(v->witness, domain_names.names);
        j["alpha_m_violation"] = std::move(violation);
    } else {
        j["alpha_m_violation"] = Json(nullptr);
    }
    return j;
}

inline std::string table_subset_row(const SpaceTables& t, SubsetMask subset,
                                    const PointNames& names, AlphaMVariant variant) {
    const SetClassification c = classify_subset(t, subset, variant);
    std::string row = format_subset(subset, names.names) + ":";
    bool any = false;
    for (SetClass sc : kAllSetClasses)
        if (c.has(sc)) {
            row += std::string(any ? ", " : " ") + to_string(sc);
            any = true;
        }
    if (!any) row += " (no class)";
    if (!c.has(SetClass::alpha_m_closed)) {
        const auto witness = alpha_m_closed_violator(t, subset, variant);
        row += "  [not alpha-m-closed, witness " + format_subset(*witness, names.names) + "]";
    }
    return row;
}

// ---- implication matrix ----------------------------------------------------------

inline Json json_implication_matrix(const ImplicationMatrix& m) {
    Json j;
    j["max_n"] = m.max_n;
    j["variant"] = to_string(m.variant);
    Json classes = Json::array();
    for (SetClass c : kAllSetClasses) classes.push_back(to_string(c));
    j["classes"] = std::move(classes);

    Json cells = Json::array();
    for (SetClass p : kAllSetClasses) {
        for (SetClass q : kAllSetClasses) {
            if (p == q) continue;
            const ImplicationCell& cell = m.cell(p, q);
            Json c;
            c["from"] = to_string(p);
            c["to"] = to_string(q);
            c["holds"] = cell.holds;
            if (cell.witness) {
                Json w;
                const PointNames names = default_names(cell.witness->space.ground_size());
                w["space"] = json_space(cell.witness->space, names);
                w["subset"] = format_subset(cell.witness->subset, names.names);
                c["witness"] = std::move(w);
            } else {
                c["witness"] = Json(nullptr);
            }
            cells.push_back(std::move(c));
        }
    }
    j["cells"] = std::move(cells);

    const ImplicationGraph graph = condensed_reduction(m);
    Json groups = Json::array();
    for (const ImplicationGroup& g : graph.groups) {
        Json members = Json::array();
        for (SetClass c : g.members) members.push_back(to_string(c));
        groups.push_back(std::move(members));
    }
    Json edges = Json::array();
    for (const auto& [a, b] : graph.edges) edges.push_back(Json::array({a, b}));
    j["graph"] = Json{{"groups", std::move(groups)}, {"edges", std::move(edges)}};
    return j;
}

inline std::string group_label(const ImplicationGroup& g) {
    std::string label;
    for (std::size_t i = 0; i < g.members.size(); ++i) {
        if (i) label += " = ";
        label += to_string(g.members[i]);
    }
    return label;
}

/// Directed-graph text (DOT). Edges point from the stronger class to the
/// weaker one; equivalent classes share a node.
inline std::string render_dot(const ImplicationGraph& graph) {
    std::string out = "digraph implications {\n  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t g = 0; g < graph.groups.size(); ++g)
        out += "  g" + std::to_string(g) + " [label=\"" + group_label(graph.groups[g]) + "\"];\n";
    for (const auto& [a, b] : graph.edges)
        out += "  g" + std::to_string(a) + " -> g" + std::to_string(b) + ";\n";
    out += "}\n";
    return out;
}

inline std::string table_implications(const ImplicationMatrix& m) {
    std::string out;
    for (SetClass p : kAllSetClasses) {
        out += to_string(p);
        out += " =>";
        bool any = false;
        for (SetClass q : kAllSetClasses) {
            if (p == q) continue;
            if (m.holds(p, q)) {
                out += std::string(any ? ", " : " ") + to_string(q);
                any = true;
            }
        }
        if (!any) out += " (nothing)";
        out += "\n";
    }
    return out;
}

// ---- claims --------------------------------------------------------------------

inline std::string table_verdict_line(const ClaimVerdict& v) {
    std::string line = v.claim_id + " [" + to_string(v.variant) + "] " + to_string(v.outcome);
    if (v.construction_failures > 0)
        line += " (construction failed on " + std::to_string(v.construction_failures) +
                " instances)";
    if (v.witness && !v.witness->detail.empty()) line += "\n    " + v.witness->detail;
    return line;
}

/// Serialize with stable key order and a trailing newline; the byte-identical
/// report guarantee rests on this single choice of writer.
inline std::string dump_report(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace fintop
