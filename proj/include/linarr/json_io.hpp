#pragma once

#include "linarr/arrangement.hpp"
#include "linarr/hexagon.hpp"
#include "linarr/singular_scheme.hpp"
#include "linarr/syzygy.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace linarr {

using json = nlohmann::json;

// Rationals travel as strings "p/q" or "p" in every payload.
json rational_json(const Rational& q);
Rational rational_from_json(const json& j);

json to_json(const LinearForm& l);
json to_json(const ProjPoint& p);
json to_json(const HomPoly& f);       // {"degree": d, "terms": [[a,b,c,"coef"],...]}
json to_json(const Arrangement& a);   // {"lines": [["a","b","c"],...]}
json to_json(const Lattice& l);
json to_json(const Hexagon& h);       // {"vertices": [["x","y","z"], x6]}
json to_json(const SyzygyProfile& p); // {"d","dims","generators","mdr","free"}
json to_json(const DefectReport& r);
json to_json(const GapCertificate& c);
json to_json(const TangentSystem& t);
json to_json(const PascalOctic& o);

Arrangement arrangement_from_json(const json& j);
Hexagon hexagon_from_json(const json& j);
HomPoly poly_from_json(const json& j);
SyzygyProfile profile_from_json(const json& j);
DefectReport defect_report_from_json(const json& j);

/// Either kind of geometric input payload.
struct ParsedInput {
    std::optional<Arrangement> arrangement;
    std::optional<Hexagon> hexagon;
    std::optional<HomPoly> raw_poly; // non-factored polynomial input (trusted reduced)
    std::string name;                // builtin name or file path
};

/// Resolve a CLI input: builtin name, JSON file ({"lines"} or {"vertices"}),
/// or a plain-text polynomial expression file (factored products become
/// arrangements; other homogeneous polynomials stay raw).
ParsedInput load_input(const std::string& name_or_path);

} // namespace linarr
