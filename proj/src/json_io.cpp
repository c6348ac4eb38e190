#include "linarr/json_io.hpp"

#include "linarr/errors.hpp"

#include <fstream>
#include <sstream>

namespace linarr {

json rational_json(const Rational& q) { return rational_to_string(q); }

Rational rational_from_json(const json& j) {
    if (!j.is_string())
        throw ParseError("rational values must be strings like \"3/4\", got " + j.dump());
    return rational_from_string(j.get<std::string>());
}

namespace {

json triple_json(const std::array<BigInt, 3>& t) {
    json out = json::array();
    for (const BigInt& x : t) out.push_back(x.get_str());
    return out;
}

std::array<Rational, 3> triple_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3)
        throw ParseError("expected a coordinate triple, got " + j.dump());
    return {rational_from_json(j[0]), rational_from_json(j[1]), rational_from_json(j[2])};
}

} // namespace

json to_json(const LinearForm& l) { return triple_json(l.coeffs); }
json to_json(const ProjPoint& p) { return triple_json(p.coords); }

json to_json(const HomPoly& f) {
    json terms = json::array();
    for (int i = 0; i < static_cast<int>(f.coeffs().size()); ++i) {
        if (f.coeffs()[i] == 0) continue;
        auto [a, b, c] = monomial_exponents(f.degree(), i);
        terms.push_back(json::array({a, b, c, rational_json(f.coeffs()[i])}));
    }
    return json{{"degree", f.degree()}, {"terms", terms}};
}

HomPoly poly_from_json(const json& j) {
    HomPoly f(j.at("degree").get<int>());
    for (const json& t : j.at("terms")) {
        if (!t.is_array() || t.size() != 4) throw ParseError("bad term " + t.dump());
        f.set_coeff(t[0].get<int>(), t[1].get<int>(), t[2].get<int>(), rational_from_json(t[3]));
    }
    return f;
}

json to_json(const Arrangement& a) {
    json lines = json::array();
    for (const LinearForm& l : a.lines()) lines.push_back(to_json(l));
    return json{{"lines", lines}};
}

Arrangement arrangement_from_json(const json& j) {
    if (!j.contains("lines")) throw ParseError("arrangement JSON needs a \"lines\" array");
    std::vector<LinearForm> lines;
    for (const json& l : j.at("lines")) lines.push_back(LinearForm(triple_from_json(l)));
    return Arrangement(std::move(lines));
}

json to_json(const Lattice& l) {
    json pts = json::array();
    for (const MultPoint& p : l.points)
        pts.push_back(json{{"point", to_json(p.point)},
                           {"multiplicity", p.multiplicity()},
                           {"lines", p.incident}});
    return json{{"points", pts}};
}

json to_json(const Hexagon& h) {
    json vs = json::array();
    for (const ProjPoint& p : h.vertices()) vs.push_back(to_json(p));
    return json{{"vertices", vs}};
}

Hexagon hexagon_from_json(const json& j) {
    if (!j.contains("vertices") || j.at("vertices").size() != 6)
        throw ParseError("hexagon JSON needs a \"vertices\" array of six points");
    std::array<ProjPoint, 6> vs;
    for (int i = 0; i < 6; ++i) vs[i] = ProjPoint(triple_from_json(j.at("vertices")[i]));
    return Hexagon(vs);
}

json to_json(const SyzygyProfile& p) {
    return json{{"d", p.d},
                {"dims", p.dims},
                {"generators", p.generator_degrees},
                {"mdr", p.mdr},
                {"free", p.free}};
}

SyzygyProfile profile_from_json(const json& j) {
    SyzygyProfile p;
    p.d = j.at("d").get<int>();
    p.dims = j.at("dims").get<std::vector<int>>();
    p.generator_degrees = j.at("generators").get<std::vector<int>>();
    p.mdr = j.at("mdr").get<int>();
    p.free = j.at("free").get<bool>();
    return p;
}

json to_json(const DefectReport& r) {
    json rows = json::array();
    for (const DefectRow& row : r.rows)
        rows.push_back(json{{"k", row.k},
                            {"dim_I", row.dim_I},
                            {"dim_J", row.dim_J},
                            {"dim_S_mod_I", row.dim_S_mod_I},
                            {"defect", row.defect}});
    return json{{"tau", r.tau},
                {"mdr", r.mdr},
                {"threshold", r.threshold},
                {"degree", r.degree},
                {"rows", rows}};
}

DefectReport defect_report_from_json(const json& j) {
    DefectReport r;
    r.tau = j.at("tau").get<long>();
    r.mdr = j.at("mdr").get<int>();
    r.threshold = j.at("threshold").get<int>();
    r.degree = j.at("degree").get<int>();
    for (const json& row : j.at("rows")) {
        DefectRow dr;
        dr.k = row.at("k").get<int>();
        dr.dim_I = row.at("dim_I").get<int>();
        dr.dim_J = row.at("dim_J").get<int>();
        dr.dim_S_mod_I = row.at("dim_S_mod_I").get<int>();
        dr.defect = row.at("defect").get<long>();
        r.rows.push_back(dr);
    }
    return r;
}

json to_json(const GapCertificate& c) {
    return json{{"k", c.k},
                {"h", to_json(c.h)},
                {"dim_I", c.dim_I},
                {"dim_J", c.dim_J},
                {"conditions_checked", c.conditions_checked},
                {"conditions_hold", c.conditions_hold},
                {"independent_of_jacobian", c.independent_of_jacobian}};
}

json to_json(const TangentSystem& t) {
    json rows = json::array();
    for (int i = 0; i < t.m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < t.m.cols(); ++j) row.push_back(rational_json(t.m.at(i, j)));
        rows.push_back(row);
    }
    json out{{"matrix", rows}, {"rank", t.rank}};
    if (t.solution) {
        json sol = json::array();
        for (const Rational& c : *t.solution) sol.push_back(rational_json(c));
        out["solution"] = sol;
    }
    return out;
}

json to_json(const PascalOctic& o) {
    json c = json::array();
    for (const Rational& v : o.coeffs) c.push_back(rational_json(v));
    return json{{"octic", to_json(o.h)},
                {"quartic", to_json(o.quartic)},
                {"pascal_line", to_json(o.pascal)},
                {"coefficients", c},
                {"conditions_checked", o.conditions_checked},
                {"in_saturation", o.in_saturation},
                {"outside_jacobian", o.outside_jacobian}};
}

ParsedInput load_input(const std::string& name_or_path) {
    ParsedInput in;
    in.name = name_or_path;
    if (auto arr = builtin_arrangement(name_or_path)) {
        in.arrangement = std::move(arr);
        return in;
    }
    std::ifstream file(name_or_path);
    if (!file)
        throw ParseError("no builtin or readable file named '" + name_or_path + "'");
    std::stringstream ss;
    ss << file.rdbuf();
    std::string text = ss.str();

    // peel leading whitespace to sniff the format
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw ParseError("input file is empty");
    if (text[first] == '{') {
        json j = json::parse(text, nullptr, true, true); // allow comments
        if (j.contains("vertices")) {
            in.hexagon = hexagon_from_json(j);
        } else if (j.contains("lines")) {
            in.arrangement = arrangement_from_json(j);
        } else {
            throw ParseError("JSON input needs \"lines\" or \"vertices\"");
        }
        return in;
    }
    // plain-text polynomial expression
    std::string expr = text;
    if (auto factors = parse_linear_factors(expr)) {
        in.arrangement = Arrangement(*factors);
        return in;
    }
    in.raw_poly = parse_poly(expr);
    return in;
}

} // namespace linarr
