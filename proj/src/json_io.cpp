#include "torgit/json_io.hpp"

#include "torgit/errors.hpp"

#include <fstream>
#include <sstream>

namespace torgit::json_io {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) throw InputError(std::string("expected an object with key \"") + key + "\"");
    auto it = j.find(key);
    if (it == j.end()) throw InputError(std::string("missing key \"") + key + "\"");
    return *it;
}

const Json& array(const Json& j, const char* what) {
    if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
    return j;
}

std::size_t index_from_json(const Json& j, std::size_t bound, const char* what) {
    Integer v = integer_from_json(j);
    if (v < 1 || v > static_cast<unsigned long>(bound))
        throw InputError(std::string(what) + " index " + to_string(v) + " out of range 1.." + std::to_string(bound));
    return v.get_ui() - 1;
}

std::size_t count_from_json(const Json& j, const char* what) {
    Integer v = integer_from_json(j);
    if (v < 0 || !v.fits_ulong_p()) throw InputError(std::string(what) + " must be a nonnegative integer");
    return v.get_ui();
}

Json indices_to_json(const std::vector<std::size_t>& idx) {
    Json out = Json::array();
    for (auto i : idx) out.push_back(i + 1);
    return out;
}

}  // namespace

Json to_json(const Integer& v) {
    if (v.fits_slong_p()) return Json(v.get_si());
    return Json(v.get_str());
}

Json to_json(const Rational& v) {
    Rational c = v;
    c.canonicalize();
    if (c.get_den() == 1) return to_json(Integer(c.get_num()));
    return Json(to_string(c));
}

Json to_json(const IntVector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_json(x));
    return out;
}

Json to_json(const IntMatrix& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
    return out;
}

Json support_to_json(Support s) { return indices_to_json(supports::indices(s)); }

Json supports_to_json(const std::vector<Support>& list) {
    Json out = Json::array();
    for (auto s : list) out.push_back(support_to_json(s));
    return out;
}

Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<unsigned long>()) : Integer(j.get<long>());
    if (j.is_string()) {
        Rational q = parse_rational(j.get<std::string>());
        if (q.get_den() != 1) throw InputError("expected an integer, got " + j.get<std::string>());
        return q.get_num();
    }
    throw InputError("expected an integer, got " + j.dump());
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(integer_from_json(j));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw InputError("expected an integer or a \"p/q\" string, got " + j.dump());
}

IntVector int_vector_from_json(const Json& j) {
    IntVector out;
    for (const auto& x : array(j, "vector")) out.push_back(integer_from_json(x));
    return out;
}

IntMatrix int_matrix_from_json(const Json& j, std::size_t cols_if_empty) {
    std::vector<IntVector> rows;
    for (const auto& r : array(j, "matrix")) rows.push_back(int_vector_from_json(r));
    const std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
    for (const auto& r : rows)
        if (r.size() != cols) throw InputError("matrix rows have different lengths");
    return IntMatrix::from_rows(rows, cols);
}

Support support_from_json(const Json& j, std::size_t n) {
    std::vector<std::size_t> idx;
    for (const auto& x : array(j, "support")) idx.push_back(index_from_json(x, n, "coordinate"));
    Support s = supports::from_indices(idx);
    if (supports::size(s) != idx.size()) throw InputError("support lists an index twice");
    return s;
}

std::vector<std::size_t> size_list_from_json(const Json& j) {
    std::vector<std::size_t> out;
    for (const auto& x : array(j, "list")) out.push_back(count_from_json(x, "entry"));
    return out;
}

Json to_json(const TorusAction& a) {
    Json out;
    out["rank"] = a.rank();
    Json cols = Json::array();
    for (std::size_t j = 0; j < a.dim(); ++j) cols.push_back(to_json(a.weights().column(j)));
    out["weights"] = cols;
    out["norm_form"] = to_json(a.norm_form());
    Json fin = Json::array();
    for (const auto& g : a.finite_part()) {
        Json e;
        e["perm"] = indices_to_json(g.perm);
        e["aut"] = to_json(g.aut);
        fin.push_back(e);
    }
    out["finite_part"] = fin;
    return out;
}

TorusAction action_from_json(const Json& j) {
    const std::size_t r = count_from_json(field(j, "rank"), "rank");
    std::vector<IntVector> cols;
    for (const auto& c : array(field(j, "weights"), "weights")) {
        cols.push_back(int_vector_from_json(c));
        if (cols.back().size() != r) throw InputError("weight length differs from rank");
    }
    if (cols.size() > kMaxCoordinates) throw InputError("at most 64 coordinates are supported");
    IntMatrix w = IntMatrix::from_columns(cols, r);
    IntMatrix q = j.contains("norm_form") ? int_matrix_from_json(j["norm_form"], r) : IntMatrix::identity(r);
    if (q.rows() != r || q.cols() != r) throw InputError("norm_form must be rank x rank");
    std::vector<FinitePartElement> fin;
    if (j.contains("finite_part")) {
        for (const auto& e : array(j["finite_part"], "finite_part")) {
            FinitePartElement g;
            for (const auto& x : array(field(e, "perm"), "perm")) g.perm.push_back(index_from_json(x, cols.size(), "perm"));
            g.aut = int_matrix_from_json(field(e, "aut"), r);
            fin.push_back(std::move(g));
        }
    }
    return TorusAction(std::move(w), std::move(q), std::move(fin));
}

Json to_json(const MonomialWeightedCenter& c) {
    Json out;
    out["coords"] = indices_to_json(c.coords);
    out["weights"] = to_json(c.weights);
    return out;
}

MonomialWeightedCenter center_from_json(const Json& j, std::size_t n) {
    MonomialWeightedCenter c;
    for (const auto& x : array(field(j, "coords"), "coords")) c.coords.push_back(index_from_json(x, n, "center"));
    c.weights = j.contains("weights") ? int_vector_from_json(j["weights"]) : IntVector(c.coords.size(), Integer(1));
    c.validate(n);
    return c;
}

Json to_json(const TwistedCurveGraph& g) {
    Json out;
    Json vs = Json::array();
    for (const auto& v : g.vertices()) {
        Json e;
        e["genus"] = v.genus;
        e["in_dm"] = v.in_dm;
        Json deg = Json::object();
        for (const auto& [name, q] : v.degrees) deg[name] = to_json(q);
        e["degrees"] = deg;
        vs.push_back(e);
    }
    out["vertices"] = vs;
    Json es = Json::array();
    for (const auto& e : g.edges()) es.push_back(Json::array({e.v + 1, e.w + 1, e.index}));
    out["edges"] = es;
    Json ls = Json::array();
    for (const auto& l : g.legs()) ls.push_back(Json::array({l.vertex + 1, l.index}));
    out["legs"] = ls;
    out["bundles"] = g.bundles();
    return out;
}

TwistedCurveGraph graph_from_json(const Json& j) {
    std::vector<CurveVertex> vs;
    for (const auto& e : array(field(j, "vertices"), "vertices")) {
        CurveVertex v;
        if (e.contains("genus")) v.genus = count_from_json(e["genus"], "genus");
        if (e.contains("in_dm")) {
            if (!e["in_dm"].is_boolean()) throw InputError("in_dm must be a boolean");
            v.in_dm = e["in_dm"].get<bool>();
        }
        if (e.contains("degrees")) {
            if (!e["degrees"].is_object()) throw InputError("degrees must be an object");
            for (const auto& [name, q] : e["degrees"].items()) v.degrees[name] = rational_from_json(q);
        }
        vs.push_back(std::move(v));
    }
    const std::size_t nv = vs.size();
    std::vector<CurveEdge> es;
    if (j.contains("edges"))
        for (const auto& e : array(j["edges"], "edges")) {
            if (!e.is_array() || e.size() != 3) throw InputError("an edge is [v, w, d]");
            es.push_back({index_from_json(e[0], nv, "vertex"), index_from_json(e[1], nv, "vertex"),
                          count_from_json(e[2], "node index")});
        }
    std::vector<CurveLeg> ls;
    if (j.contains("legs"))
        for (const auto& e : array(j["legs"], "legs")) {
            if (!e.is_array() || e.size() != 2) throw InputError("a leg is [v, e]");
            ls.push_back({index_from_json(e[0], nv, "vertex"), count_from_json(e[1], "marking index")});
        }
    std::vector<std::string> bundles;
    for (const auto& b : array(field(j, "bundles"), "bundles")) {
        if (!b.is_string()) throw InputError("bundle names must be strings");
        bundles.push_back(b.get<std::string>());
    }
    return TwistedCurveGraph(std::move(vs), std::move(es), std::move(ls), std::move(bundles));
}

Json to_json(const DivisorConfig& c) {
    Json out;
    out["ambient"] = c.ambient == ConicAmbient::SmoothP1 ? "P1" : "twisted_conic";
    Json comps = Json::array();
    for (const auto& comp : c.components) comps.push_back(comp);
    out["components"] = comps;
    out["n"] = c.n;
    return out;
}

DivisorConfig divisor_config_from_json(const Json& j) {
    DivisorConfig c;
    const Json& amb = field(j, "ambient");
    if (amb == "P1")
        c.ambient = ConicAmbient::SmoothP1;
    else if (amb == "twisted_conic")
        c.ambient = ConicAmbient::TwistedConic;
    else
        throw InputError("ambient must be \"P1\" or \"twisted_conic\"");
    for (const auto& comp : array(field(j, "components"), "components")) c.components.push_back(size_list_from_json(comp));
    c.n = count_from_json(field(j, "n"), "n");
    return c;
}

Json dvr_data_to_json(const std::vector<std::size_t>& orders) {
    Json out;
    out["orders"] = orders;
    return out;
}

std::vector<std::size_t> dvr_data_from_json(const Json& j) { return size_list_from_json(field(j, "orders")); }

Json to_json(const SignedSquare& v) {
    Json out;
    out["sign"] = v.sign;
    out["square"] = to_json(v.square);
    return out;
}

Json to_json(const std::set<SignedSquare>& values) {
    Json out = Json::array();
    for (const auto& v : values) out.push_back(to_json(v));
    return out;
}

Json to_json(const CombinedLinearization& c) {
    Json out;
    out["m0"] = to_json(c.m0);
    out["combined"] = to_json(c.combined.entries);
    out["d"] = c.d ? to_json(*c.d) : Json(nullptr);
    out["e"] = c.e ? to_json(*c.e) : Json(nullptr);
    return out;
}

Json to_json(const WallArrangement& w) {
    Json out = Json::array();
    for (const auto& h : w.walls) out.push_back(to_json(h));
    return out;
}

Json to_json(const DiagonalizableGroup& g) {
    Json out;
    out["dimension"] = g.dimension;
    out["invariant_factors"] = to_json(g.invariant_factors);
    out["torus_part_order"] = g.is_finite() ? to_json(g.torus_part_order()) : Json(nullptr);
    out["finite_part_order"] = g.finite_part_order;
    return out;
}

Json to_json(const EBPresentation& eb, const ScanOptions& opts) {
    Json out;
    out["source"] = to_json(eb.source);
    out["center"] = to_json(eb.center);
    out["ambient"] = to_json(eb.ambient);
    out["theta"] = to_json(eb.theta.entries);
    out["exceptional_index"] = eb.exceptional_index + 1;
    Json subs = Json::array();
    for (std::size_t k = 0; k < eb.source.dim(); ++k) {
        IntVector unit(eb.source.dim(), Integer(0));
        unit[k] = 1;
        Json e;
        e["source"] = k + 1;
        e["image"] = to_json(eb.substitute(unit));
        subs.push_back(e);
    }
    out["substitution"] = subs;
    out["section"] = support_to_json(eb.section(supports::full(eb.source.dim())));
    out["weighted_blowup_locus"] = supports_to_json(weighted_blowup_locus(eb, opts));
    out["saturated_locus"] = supports_to_json(saturated_locus(eb, opts));
    return out;
}

Json to_json(const DesingTower& t) {
    Json out;
    out["base"] = to_json(t.base);
    out["start_character"] = to_json(t.start_character.entries);
    Json steps = Json::array();
    for (const auto& s : t.steps) {
        Json e;
        e["source_character"] = to_json(s.source_character.entries);
        e["max_stabilizer_dim"] = s.max_stabilizer_dim;
        e["center_count"] = s.center_count;
        e["center"] = to_json(s.eb.center);
        Json subs = Json::array();
        for (std::size_t k = 0; k < s.eb.source.dim(); ++k)
            subs.push_back(Json::array({k + 1, to_json(s.eb.t_exponent(k))}));
        e["t_exponents"] = subs;
        e["combination"] = to_json(s.combination);
        e["ambient"] = to_json(s.eb.ambient);
        steps.push_back(e);
    }
    out["steps"] = steps;
    out["final_character"] = to_json(t.final_character.entries);
    out["final_action"] = to_json(t.final_action);
    out["final_dm_supports"] = supports_to_json(t.final_dm_supports);
    return out;
}

Json to_json(const TowerReport& r) {
    Json out;
    out["passed"] = r.passed();
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json e;
        e["name"] = c.name;
        e["step"] = c.step ? Json(*c.step + 1) : Json(nullptr);
        e["passed"] = c.passed;
        e["detail"] = c.detail;
        checks.push_back(e);
    }
    out["checks"] = checks;
    return out;
}

Json to_json(const StabilityVerdict& v) {
    Json out;
    out["stable"] = v.stable;
    out["violations"] = indices_to_json(v.violations);
    return out;
}

Json to_json(const DvrLift& d) {
    Json out;
    out["m"] = d.m;
    out["lifted_orders"] = d.lifted_orders;
    std::vector<std::size_t> axes;
    for (std::size_t i = 0; i < d.on_axis_proper_transform.size(); ++i)
        if (d.on_axis_proper_transform[i]) axes.push_back(i);
    out["on_axis_proper_transform"] = indices_to_json(axes);
    out["meets_some_axis"] = d.meets_some_axis();
    return out;
}

Json to_json(const CubicsCertificate& c) {
    Json out;
    Json slice;
    slice["action"] = to_json(c.slice.action);
    slice["stabilizer_cocharacters"] = to_json(c.slice.stabilizer_cocharacters);
    slice["kept_coordinates"] = indices_to_json(c.slice.kept_coordinates);
    slice["orbit_coordinates"] = indices_to_json(c.slice.orbit_coordinates);
    out["slice"] = slice;
    out["effective_action"] = to_json(c.effective.action);
    out["eb"] = to_json(c.eb);
    out["dm_support"] = support_to_json(c.dm_support);
    out["dm_support_saturated"] = c.dm_support_saturated;
    out["stabilizer"] = to_json(c.stabilizer);
    Json inv = Json::array();
    for (const auto& v : c.invariants) inv.push_back(to_json(v));
    out["invariants"] = inv;
    out["tower"] = to_json(c.tower);
    return out;
}

Json load(const std::string& text_or_path) {
    std::string text = text_or_path;
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos || (text[first] != '{' && text[first] != '[')) {
        std::ifstream in(text_or_path);
        if (!in) throw InputError("cannot read " + text_or_path);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace torgit::json_io
