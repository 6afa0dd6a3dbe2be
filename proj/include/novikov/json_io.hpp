#pragma once

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bounds.hpp"
#include "deformation.hpp"
#include "xi.hpp"

namespace novikov::io {

using Json = nlohmann::ordered_json;

inline Json parse_json_text(const std::string& text, const std::string& what) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(what + ": " + e.what());
    }
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Text given inline, or `@path` for a file.
inline std::string inline_or_file(const std::string& arg) { return !arg.empty() && arg[0] == '@' ? read_file(arg.substr(1)) : arg; }

namespace detail {

inline std::size_t as_size(const Json& j, const std::string& what) {
    if (!j.is_number_integer() || j.get<long long>() < 0) throw ParseError(what + " must be a nonnegative integer");
    return j.get<std::size_t>();
}

inline long as_long(const Json& j, const std::string& what) {
    if (!j.is_number_integer()) throw ParseError(what + " must be an integer");
    return j.get<long>();
}

inline Integer as_integer(const Json& j, const std::string& what) {
    if (j.is_number_integer()) return Integer(j.get<long>());
    if (j.is_string()) return parse_integer(j.get<std::string>());
    throw ParseError(what + " must be an integer");
}

inline Json integer_json(const Integer& x) {
    if (x.fits_slong_p()) return Json(x.get_si());
    return Json(x.get_str());
}

/// rows x cols grid; a matrix without rows is [] and one without columns
/// is rows copies of [].
template <class T, class Fn>
Matrix<T> grid_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& what, Fn&& entry) {
    if (!j.is_array() || j.size() != rows)
        throw ParseError(what + ": expected " + std::to_string(rows) + " rows");
    Matrix<T> m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols)
            throw ParseError(what + ": row " + std::to_string(r) + " must have " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry(j[r][c]);
    }
    return m;
}

template <class T, class Fn>
Json grid_to_json(const Matrix<T>& m, Fn&& entry) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(entry(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline std::vector<std::size_t> ranks_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("'ranks' must be an array");
    std::vector<std::size_t> out;
    for (const auto& r : j) out.push_back(as_size(r, "rank"));
    return out;
}

inline void check_boundary_count(const Json& b, std::size_t n) {
    if (!b.is_array()) throw ParseError("'boundaries' must be an array");
    std::size_t want = n == 0 ? 0 : n - 1;
    if (b.size() != want)
        throw ParseError("expected " + std::to_string(want) + " boundary matrices, got " + std::to_string(b.size()));
}

} // namespace detail

inline IntMatrix int_matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_array()) throw ParseError("matrix must be a nonempty array of rows");
    return detail::grid_from_json<Integer>(j, j.size(), j[0].size(), "matrix",
                                           [](const Json& e) { return detail::as_integer(e, "matrix entry"); });
}

inline Json int_matrix_to_json(const IntMatrix& m) { return detail::grid_to_json(m, detail::integer_json); }

// ---------------------------------------------------------------------------
// Complexes over Z[t].

inline PolyComplex complex_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("complex must be a JSON object");
    if (j.contains("ring") && j["ring"] != "Z[t]") throw ParseError("unsupported ring " + j["ring"].dump());
    if (!j.contains("ranks") || !j.contains("boundaries")) throw ParseError("complex needs 'ranks' and 'boundaries'");
    PolyComplex c;
    c.ranks = detail::ranks_from_json(j["ranks"]);
    detail::check_boundary_count(j["boundaries"], c.ranks.size());
    for (std::size_t i = 1; i < c.ranks.size(); ++i) {
        std::string what = "d" + std::to_string(i);
        c.boundaries.push_back(detail::grid_from_json<IntPolynomial>(
            j["boundaries"][i - 1], c.ranks[i - 1], c.ranks[i], what, [&](const Json& e) {
                if (e.is_number_integer()) return IntPolynomial(Integer(e.get<long>()));
                if (!e.is_string()) throw ParseError(what + ": entries must be polynomial strings");
                return parse_int_polynomial(e.get<std::string>());
            }));
    }
    validate(c);
    return c;
}

inline Json complex_to_json(const PolyComplex& c) {
    Json j;
    j["ring"] = "Z[t]";
    j["ranks"] = c.ranks;
    Json bs = Json::array();
    for (const auto& d : c.boundaries)
        bs.push_back(detail::grid_to_json(d, [](const IntPolynomial& p) { return to_string(p); }));
    j["boundaries"] = std::move(bs);
    return j;
}

inline PolyComplex parse_complex(const std::string& text) { return complex_from_json(parse_json_text(text, "complex")); }
inline PolyComplex read_complex(const std::string& path) { return parse_complex(read_file(path)); }

namespace detail {

inline void dump_into(const Json& j, int indent, std::string& out) {
    auto pad = [&](int n) { out.append(static_cast<std::size_t>(n), ' '); };
    if (j.is_primitive() || j.empty()) {
        out += j.dump();
        return;
    }
    if (j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); })) {
        out += "[";
        for (auto it = j.begin(); it != j.end(); ++it) out += (it == j.begin() ? "" : ", ") + it->dump();
        out += "]";
        return;
    }
    bool object = j.is_object();
    out += object ? "{\n" : "[\n";
    std::size_t k = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++k) {
        pad(indent + 2);
        if (object) out += Json(it.key()).dump() + ": ";
        dump_into(*it, indent + 2, out);
        out += k + 1 < j.size() ? ",\n" : "\n";
    }
    pad(indent);
    out += object ? "}" : "]";
}

} // namespace detail

/// Indented JSON with arrays of scalars kept on one line, so boundary
/// matrices print one row per line.
inline std::string dump(const Json& j) {
    std::string out;
    detail::dump_into(j, 0, out);
    return out;
}

// ---------------------------------------------------------------------------
// Group ring presentations.

inline GroupRingPresentation presentation_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("presentation must be a JSON object");
    GroupRingPresentation p;
    p.bundle_rank = j.contains("m") ? detail::as_size(j["m"], "m") : 1;
    if (j.contains("generators")) {
        const auto& gens = j["generators"];
        if (!gens.is_object()) throw ParseError("'generators' must be an object");
        for (const auto& [name, g] : gens.items()) {
            GroupGenerator gen;
            gen.name = name;
            gen.xi = g.contains("xi") ? detail::as_long(g["xi"], "xi") : 0;
            gen.monodromy = g.contains("mon") ? int_matrix_from_json(g["mon"])
                                              : IntMatrix::identity(p.bundle_rank, IntegerRing{});
            p.generators.push_back(std::move(gen));
        }
    }
    if (!j.contains("ranks") || !j.contains("boundaries")) throw ParseError("presentation needs 'ranks' and 'boundaries'");
    p.ranks = detail::ranks_from_json(j["ranks"]);
    detail::check_boundary_count(j["boundaries"], p.ranks.size());
    for (std::size_t i = 1; i < p.ranks.size(); ++i) {
        std::string what = "d" + std::to_string(i);
        auto text = detail::grid_from_json<std::string>(j["boundaries"][i - 1], p.ranks[i - 1], p.ranks[i], what,
                                                        [&](const Json& e) {
                                                            if (e.is_number_integer()) return std::to_string(e.get<long>());
                                                            if (!e.is_string()) throw ParseError(what + ": entries must be strings");
                                                            return e.get<std::string>();
                                                        });
        p.boundaries.push_back(text.map([&](const std::string& s) { return parse_group_ring_element(s, p); }));
        p.boundary_text.push_back(std::move(text));
    }
    return p;
}

inline Json presentation_to_json(const GroupRingPresentation& p) {
    Json j;
    j["m"] = p.bundle_rank;
    Json gens = Json::object();
    for (const auto& g : p.generators) gens[g.name] = Json{{"xi", g.xi}, {"mon", int_matrix_to_json(g.monodromy)}};
    j["generators"] = std::move(gens);
    j["ranks"] = p.ranks;
    Json bs = Json::array();
    for (const auto& d : p.boundary_text) bs.push_back(detail::grid_to_json(d, [](const std::string& s) { return s; }));
    j["boundaries"] = std::move(bs);
    return j;
}

/// A presentation (has "generators" or "m") or a plain complex over Z[t].
inline DeformationComplex deformation_or_complex_from_json(const Json& j) {
    if (j.is_object() && (j.contains("generators") || j.contains("m"))) return build_deformation(presentation_from_json(j));
    return {complex_from_json(j), 1};
}

// ---------------------------------------------------------------------------
// Bott components: [{"index": 1, "dims": [1]}, ...].

inline std::vector<BottComponentData> bott_components_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("components must be an array");
    std::vector<BottComponentData> out;
    for (const auto& z : j) {
        if (!z.is_object() || !z.contains("index") || !z.contains("dims")) throw ParseError("component needs 'index' and 'dims'");
        BottComponentData c;
        c.index = detail::as_size(z["index"], "index");
        if (!z["dims"].is_array()) throw ParseError("'dims' must be an array");
        for (const auto& d : z["dims"]) c.dims.push_back(static_cast<std::int64_t>(detail::as_size(d, "dims entry")));
        out.push_back(std::move(c));
    }
    return out;
}

inline Json bott_components_to_json(const std::vector<BottComponentData>& zs) {
    Json out = Json::array();
    for (const auto& z : zs) out.push_back(Json{{"index", z.index}, {"dims", z.dims}});
    return out;
}

// ---------------------------------------------------------------------------
// Reports.

inline Json rational_json(const Rational& q) { return to_string(q); }

inline Json betti_to_json(const BettiVector& b) {
    return Json{{"target", describe(b.target)},
                {"ideal", ideal_of(b.target)},
                {"betti", b.values},
                {"euler_characteristic", euler_characteristic(b)}};
}

inline Json classification_to_json(const UnitClassification& c) {
    Json j{{"is_algebraic", c.is_algebraic},
           {"is_algebraic_integer", c.is_algebraic_integer},
           {"is_dirichlet_unit", c.is_dirichlet_unit}};
    j["minimal_polynomial"] = c.minimal_polynomial ? Json(to_string(*c.minimal_polynomial)) : Json(nullptr);
    return j;
}

inline Json bounds_to_json(const BoundsReport& r) {
    Json j;
    j["a"] = r.a;
    j["target"] = r.target;
    j["betti"] = r.betti;
    j["dim_e"] = r.dim_e;
    j["classification"] = classification_to_json(r.classification);
    j["route"] = to_string(r.route);
    j["p"] = detail::integer_json(r.p);
    j["prime_note"] = r.prime_note;
    j["ideal_p"] = r.ideal_p;
    j["ideal_q"] = r.ideal_q;
    Json weak = Json::array(), strong = Json::array();
    for (std::size_t i = 0; i < r.weak.size(); ++i) {
        weak.push_back(Json{{"degree", i}, {"bound", rational_json(r.weak[i])}, {"ceiling", detail::integer_json(r.weak_ceiling[i])}});
        strong.push_back(
            Json{{"degree", i}, {"bound", rational_json(r.strong[i])}, {"ceiling", detail::integer_json(r.strong_ceiling[i])}});
    }
    j["weak"] = std::move(weak);
    j["strong"] = std::move(strong);
    return j;
}

inline Json jumps_to_json(const JumpReport& r) {
    Json j;
    j["degree"] = r.degree;
    j["generic_betti"] = r.generic_betti;
    j["generic_value"] = r.generic_value;
    j["candidate"] = to_string(r.candidate);
    Json fs = Json::array();
    for (const auto& f : r.factors) {
        Json e{{"factor", to_string(f.factor)},
               {"jump_polynomial", to_string(f.jump_polynomial)},
               {"status", to_string(f.status)}};
        e["value"] = f.value ? Json(*f.value) : Json(nullptr);
        fs.push_back(std::move(e));
    }
    j["factors"] = std::move(fs);
    return j;
}

inline Json trefoil_to_json(const TrefoilReport& r) {
    return Json{{"n", r.n},
                {"a", r.a},
                {"h1_X_F", r.h1_X_F},
                {"h1_M_generic", r.h1_M_generic},
                {"h1_M_trivial", r.h1_M_trivial},
                {"h1_M_twisted", r.h1_M_twisted}};
}

inline Json order_to_json(bool holds, const std::optional<LambdaPolynomial>& t) {
    Json j{{"dominates", holds}};
    j["T"] = t ? Json(to_string(*t)) : Json(nullptr);
    return j;
}

inline Json comparison_to_json(const PrimeComparison& c, const Integer& p, const std::string& a) {
    Json j{{"a", a},
           {"p", detail::integer_json(p)},
           {"ideal_p", c.ideal_p},
           {"ideal_q", c.ideal_q},
           {"P_q", to_string(c.at_q)},
           {"P_p", to_string(c.at_p)}};
    j.update(order_to_json(c.holds, c.quotient));
    return j;
}

inline Json bott_to_json(const BottVerdict& v) {
    Json j{{"p", detail::integer_json(v.p)}, {"lhs", to_string(v.lhs)}, {"rhs", to_string(v.rhs)}};
    j.update(order_to_json(v.holds, v.quotient));
    return j;
}

} // namespace novikov::io
