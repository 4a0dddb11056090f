#pragma once

// JSON schemas for complexes, matrices, presentations and reports.
// Object keys come out sorted (nlohmann::json uses std::map), faces are
// listed in canonical order, so output is byte-stable.

#include "wedgeforge/charmaps.hpp"
#include "wedgeforge/complexes.hpp"
#include "wedgeforge/error.hpp"
#include "wedgeforge/intlin.hpp"
#include "wedgeforge/nests.hpp"
#include "wedgeforge/polyprod.hpp"
#include "wedgeforge/rings.hpp"
#include "wedgeforge/wedge.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace wedgeforge::io {

using json = nlohmann::json;

inline std::string integer_string(const Integer& x) { return x.str(); }

inline Integer parse_integer(const json& j) {
    if (j.is_number_integer()) return Integer(j.get<long long>());
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        const bool ok = !s.empty() && s.find_first_not_of("0123456789", s[0] == '-' ? 1 : 0) == std::string::npos &&
                        s != "-";
        if (!ok) throw Error(ErrorCode::ParseError, "not an integer: \"" + s + "\"");
        return Integer(s);
    }
    throw Error(ErrorCode::ParseError, "expected an integer, got " + j.dump());
}

inline std::string label_of(const json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    throw Error(ErrorCode::ParseError, "vertex labels must be strings or integers, got " + j.dump());
}

// ---- complexes -----------------------------------------------------------

inline json face_json(const SimplicialComplex& k, Face f) {
    json out = json::array();
    for (const auto& l : k.labels_of(f)) out.push_back(l);
    return out;
}

inline json to_json(const SimplicialComplex& k) {
    json facets = json::array();
    for (Face f : k.facets()) facets.push_back(face_json(k, f));
    return {{"vertices", k.vertices()}, {"facets", facets}};
}

/// {"vertices": [...], "facets": [[...], ...]}; "vertices" may be omitted.
inline SimplicialComplex complex_from_json(const json& j) {
    if (!j.is_object() || !j.contains("facets") || !j["facets"].is_array())
        throw Error(ErrorCode::ParseError, "complex needs a \"facets\" array");
    std::vector<std::vector<std::string>> facets;
    for (const auto& f : j["facets"]) {
        if (!f.is_array()) throw Error(ErrorCode::ParseError, "each facet must be an array");
        std::vector<std::string> face;
        for (const auto& v : f) face.push_back(label_of(v));
        facets.push_back(std::move(face));
    }
    if (!j.contains("vertices")) return validate_complex(facets);
    if (!j["vertices"].is_array()) throw Error(ErrorCode::ParseError, "\"vertices\" must be an array");
    std::vector<std::string> vertices;
    for (const auto& v : j["vertices"]) vertices.push_back(label_of(v));
    return validate_complex(vertices, facets);
}

inline json to_json(const WedgedComplex& w) {
    json out = to_json(w.complex);
    out["J"] = w.J.entries();
    out["base_vertex_count"] = w.base_vertex_count;
    out["d"] = w.J.d();
    return out;
}

// ---- matrices ------------------------------------------------------------

inline json to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(integer_string(m(r, c)));
        rows.push_back(row);
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

/// {"rows", "cols", "entries"}; entries may be JSON integers or decimal strings.
/// A bare array of rows is accepted too.
inline IntMatrix matrix_from_json(const json& j) {
    const json& entries = j.is_array() ? j : (j.is_object() && j.contains("entries") ? j["entries"] : json());
    if (!entries.is_array()) throw Error(ErrorCode::ParseError, "matrix needs an \"entries\" array");
    std::vector<std::vector<Integer>> rows;
    for (const auto& row : entries) {
        if (!row.is_array()) throw Error(ErrorCode::ParseError, "matrix rows must be arrays");
        std::vector<Integer> r;
        for (const auto& x : row) r.push_back(parse_integer(x));
        rows.push_back(std::move(r));
    }
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    if (j.is_object() && j.contains("cols")) {
        if (!j["cols"].is_number_unsigned()) throw Error(ErrorCode::ParseError, "\"cols\" must be a non-negative integer");
        cols = j["cols"].get<std::size_t>();
    }
    if (j.is_object() && j.contains("rows")) {
        if (!j["rows"].is_number_unsigned() || j["rows"].get<std::size_t>() != rows.size())
            throw Error(ErrorCode::ShapeMismatch, "\"rows\" does not match the entries");
    }
    for (const auto& r : rows)
        if (r.size() != cols) throw Error(ErrorCode::ShapeMismatch, "ragged matrix rows");
    return IntMatrix::from_rows(rows, cols);
}

inline json to_json(const SmithForm& s) {
    json divisors = json::array();
    for (const auto& d : s.divisors) divisors.push_back(integer_string(d));
    return {{"D", to_json(s.D)}, {"U", to_json(s.U)}, {"V", to_json(s.V)}, {"divisors", divisors}};
}

/// Faces are rendered with the labels of `k`, the complex that was checked.
inline json to_json(const ValidationReport& r, const SimplicialComplex& k) {
    json minors = json::array();
    for (const auto& [f, m] : r.facet_minors) minors.push_back({{"facet", face_json(k, f)}, {"minor", integer_string(m)}});
    json bad = json::array();
    for (Face f : r.bad_facets) bad.push_back(face_json(k, f));
    json faces = json::array();
    for (Face f : r.non_summand_faces) faces.push_back(face_json(k, f));
    return {{"facet_minors", minors},
            {"bad_facets", bad},
            {"non_summand_faces", faces},
            {"facet_minors_ok", r.facet_minors_ok},
            {"faces_ok", r.faces_ok},
            {"passed", r.passed}};
}

inline json to_json(const DerivedCharPair& d) {
    return {{"base", {{"complex", to_json(d.base.K)}, {"lambda", to_json(d.base.lambda)}}},
            {"J", d.J.entries()},
            {"complex", to_json(d.KJ)},
            {"lambda_J", to_json(d.lambda_J)},
            {"column_order", d.column_order}};
}

// ---- rings ---------------------------------------------------------------

inline json to_json(const Polynomial& p) {
    json terms = json::array();
    for (const auto& [e, c] : p) terms.push_back({{"exponents", e}, {"coefficient", integer_string(c)}});
    return terms;
}

inline json to_json(const RingPresentation& p) {
    json vars = json::array();
    for (const auto& v : p.variables) vars.push_back({{"name", v.name}, {"degree", v.degree}});
    json polys = json::array();
    for (const auto& q : p.polynomial_generators) polys.push_back(to_json(q));
    json forms = json::array();
    for (const auto& f : p.linear_forms) {
        json row = json::array();
        for (const auto& c : f) row.push_back(integer_string(c));
        forms.push_back(row);
    }
    return {{"variables", vars},
            {"monomial_generators", p.monomial_generators},
            {"polynomial_generators", polys},
            {"linear_forms", forms},
            {"grading", "cohomological; every variable has degree 2"}};
}

inline std::string monomial_string(const std::vector<Variable>& vars, const Exponents& e) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += ' ';
        s += vars[i].name;
        if (e[i] > 1) s += '^' + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

inline std::string polynomial_string(const std::vector<Variable>& vars, const Polynomial& p) {
    std::string s;
    // Highest monomials first reads more naturally.
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        const auto& [e, c] = *it;
        const bool neg = c < 0;
        const Integer a = neg ? Integer(-c) : c;
        if (s.empty()) s += neg ? "-" : "";
        else s += neg ? " - " : " + ";
        const std::string mon = monomial_string(vars, e);
        if (a != 1 || mon == "1") s += a.str() + (mon == "1" ? "" : " ");
        if (mon != "1") s += mon;
    }
    return s.empty() ? "0" : s;
}

/// Z[v1,v2]/(v1^2 v2, v1 - v2) style rendering.
inline std::string presentation_string(const RingPresentation& p) {
    std::string s = "Z[";
    for (std::size_t i = 0; i < p.variables.size(); ++i) s += (i ? "," : "") + p.variables[i].name;
    s += "]";
    std::vector<std::string> rels;
    for (const auto& m : p.monomial_generators) rels.push_back(monomial_string(p.variables, m));
    for (const auto& q : p.polynomial_generators) rels.push_back(polynomial_string(p.variables, q));
    for (const auto& f : p.linear_forms) {
        Polynomial lin;
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (f[i] == 0) continue;
            Exponents e(f.size(), 0);
            e[i] = 1;
            lin[e] = f[i];
        }
        rels.push_back(polynomial_string(p.variables, lin));
    }
    if (rels.empty()) return s;
    s += "/(";
    for (std::size_t i = 0; i < rels.size(); ++i) s += (i ? ", " : "") + rels[i];
    return s + ")";
}

inline json to_json(const HilbertSeries& h) {
    json num = json::array();
    for (const auto& c : h.numerator) num.push_back(integer_string(c));
    return {{"numerator", num}, {"denominator_power", h.denominator_power}};
}

// ---- cubical models ------------------------------------------------------

inline json to_json(const std::vector<HomologyGroup>& h) {
    json out = json::array();
    for (std::size_t k = 0; k < h.size(); ++k) {
        json torsion = json::array();
        for (const auto& t : h[k].torsion) torsion.push_back(integer_string(t));
        out.push_back({{"dimension", k}, {"betti", h[k].betti}, {"torsion", torsion}});
    }
    return out;
}

inline json to_json(const SubspaceComparison& c) {
    return {{"passed", c.equal},
            {"ambient", c.ambient},
            {"maximal_face_count", c.maximal_face_count},
            {"first_difference", c.first_difference ? json(*c.first_difference) : json(nullptr)}};
}

// ---- nests ---------------------------------------------------------------

inline json to_json(const NestStep& s) {
    json summands = json::array();
    for (const auto& n : s.summands)
        summands.push_back({{"index", n.index}, {"multiplicity", n.multiplicity}, {"chern_symbol", n.chern_symbol}});
    return {{"from", s.J.entries()},
            {"to", s.L.entries()},
            {"multiplicities", s.multiplicities},
            {"summands", summands},
            {"complex_codimension", s.complex_codimension()},
            {"real_codimension", s.real_codimension()}};
}

inline json to_json(const NestReport& r) {
    json stages = json::array();
    for (const auto& s : r.stages) {
        json st = {{"J", s.J.entries()},
                   {"d", s.d},
                   {"real_dimension", s.real_dimension},
                   {"dimension_ok", s.dimension_ok},
                   {"betti", s.betti},
                   {"manifold_certified", s.manifold_certified},
                   {"h2_rank", s.h2_rank},
                   {"h2_ok", s.h2_ok},
                   {"surjectivity_ranks_ok", s.surjectivity_ranks_ok}};
        st["step"] = s.step ? to_json(*s.step) : json(nullptr);
        stages.push_back(std::move(st));
    }
    return {{"stages", stages}, {"passed", r.passed}};
}

// ---- files ---------------------------------------------------------------

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::ParseError, path + ": " + e.what());
    }
}

} // namespace wedgeforge::io
