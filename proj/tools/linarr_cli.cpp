// Command-line surface of the toolkit. Exit codes: 0 success, 2 parse
// error, 3 degeneracy, 4 internal invariant violation.

#include "linarr/analysis.hpp"
#include "linarr/errors.hpp"
#include "linarr/search.hpp"
#include "linarr/svg.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace linarr;

struct GlobalFlags {
    bool json_out = false;
    std::uint64_t seed = 1;
    int cap = -1;
    std::string out_path;
};

void emit(const json& j, const std::string& text, const GlobalFlags& g) {
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!g.out_path.empty()) {
        file.open(g.out_path);
        if (!file) throw std::runtime_error("cannot open '" + g.out_path + "'");
        os = &file;
    }
    if (g.json_out)
        *os << j.dump(2) << "\n";
    else
        *os << text;
}

int cmd_analyze(const std::string& input, const GlobalFlags& g) {
    AnalysisReport rep = analyze(load_input(input), g.cap);
    emit(to_json(rep), human_readable(rep), g);
    return 0;
}

int cmd_lattice(const std::string& input, const GlobalFlags& g) {
    ParsedInput in = load_input(input);
    Arrangement arr = in.arrangement ? *in.arrangement : build_arrangement(*in.hexagon).first;
    Lattice lat = intersection_lattice(arr);
    json j = to_json(lat);
    j["tau"] = total_tjurina(lat);
    std::ostringstream text;
    for (const MultPoint& p : lat.points) {
        text << p.point.str() << "  m=" << p.multiplicity() << "  lines:";
        for (int i : p.incident) text << " " << i;
        text << "\n";
    }
    text << "tau: " << total_tjurina(lat) << "\n";
    emit(j, text.str(), g);
    return 0;
}

int cmd_defects(const std::string& input, const GlobalFlags& g) {
    ParsedInput in = load_input(input);
    Arrangement arr = in.arrangement ? *in.arrangement : build_arrangement(*in.hexagon).first;
    DefectReport rep = defect_sequence(arr);
    std::ostringstream text;
    text << "tau " << rep.tau << ", mdr " << rep.mdr << ", threshold 2d-5-r = " << rep.threshold
         << "\n";
    text << "  k  dim I_k  dim J_k  dim S_k/I_k  defect_k\n";
    for (const DefectRow& row : rep.rows)
        text << "  " << row.k << "  " << row.dim_I << "  " << row.dim_J << "  " << row.dim_S_mod_I
             << "  " << row.defect << "\n";
    emit(to_json(rep), text.str(), g);
    return 0;
}

Hexagon hexagon_of_input(const ParsedInput& in) {
    if (in.hexagon) return *in.hexagon;
    if (in.arrangement) {
        if (auto h = hexagon_from_arrangement(*in.arrangement)) return *h;
        throw DegeneracyError("arrangement carries no hexagon structure");
    }
    throw ParseError("input is not a hexagon or arrangement");
}

std::string human_readable_vertices(const Hexagon& hex) {
    std::ostringstream out;
    out << "vertices:";
    for (const ProjPoint& p : hex.vertices()) out << " " << p.str();
    out << "\n";
    return out.str();
}

int cmd_pascal(const std::string& input, const GlobalFlags& g) {
    Hexagon hex = hexagon_of_input(load_input(input));
    ConicResult conic = six_points_on_conic(hex.vertices());
    std::optional<LinearForm> ell = pascal_line(hex);
    json j = to_json(hex);
    std::ostringstream text;
    text << human_readable_vertices(hex);
    if (conic.on_conic) {
        j["conic"] = to_json(conic.conic);
        j["conic_class"] = conic.conic_class == ConicClass::Smooth     ? "smooth"
                           : conic.conic_class == ConicClass::TwoLines ? "two-lines"
                                                                       : "double-line";
        text << "conic: " << conic.conic.str() << "\n";
    } else {
        j["conic"] = nullptr;
        text << "vertices not on a conic\n";
    }
    auto b = hex.opposite_side_points();
    json bj = json::array();
    for (const ProjPoint& p : b) bj.push_back(to_json(p));
    j["opposite_side_points"] = bj;
    text << "B points: " << b[0].str() << " " << b[1].str() << " " << b[2].str() << "\n";
    if (ell) {
        j["pascal_line"] = to_json(*ell);
        text << "pascal line: " << ell->str() << "\n";
    } else {
        j["pascal_line"] = nullptr;
        text << "B points are not collinear\n";
    }
    emit(j, text.str(), g);
    return 0;
}

int cmd_octic(const std::string& input, const GlobalFlags& g) {
    Hexagon hex = hexagon_of_input(load_input(input));
    PascalOctic oct = pascal_octic(hex);
    std::ostringstream text;
    text << "octic h = " << oct.h.str() << "\n";
    text << "  = (" << oct.pascal.str() << " pascal) * diagonals * quartic\n";
    text << "quartic: " << oct.quartic.str() << "\n";
    text << "coefficients:";
    for (const Rational& c : oct.coeffs) text << " " << rational_to_string(c);
    text << "\nconditions checked: " << oct.conditions_checked
         << ", in I_8: " << (oct.in_saturation ? "yes" : "no")
         << ", outside J_8: " << (oct.outside_jacobian ? "yes" : "no") << "\n";
    emit(to_json(oct), text.str(), g);
    return 0;
}

int cmd_compare(const std::string& a, const std::string& b, const GlobalFlags& g) {
    CompareReport rep = compare(load_input(a), load_input(b));
    emit(to_json(rep), human_readable(rep), g);
    return 0;
}

int cmd_search(int count, const std::string& mode, const GlobalFlags& g) {
    SearchResult res = run_search(count, parse_search_mode(mode), g.seed);
    std::string csv = res.to_csv();
    json j{{"csv", csv}, {"generic_count", res.generic_count}};
    emit(j, csv, g);
    return 0;
}

int cmd_render(const std::string& input, const GlobalFlags& g, double half_span) {
    ParsedInput in = load_input(input);
    SvgScene scene;
    scene.x_min = -half_span;
    scene.x_max = half_span;
    scene.y_min = -half_span;
    scene.y_max = half_span;

    std::optional<Hexagon> hex = in.hexagon;
    if (in.arrangement) {
        scene.arrangement = in.arrangement;
        if (!hex) hex = hexagon_from_arrangement(*in.arrangement);
    } else if (hex) {
        scene.arrangement = build_arrangement(*hex).first;
    }
    if (hex) {
        scene.hexagon = hex;
        ConicResult conic = six_points_on_conic(hex->vertices());
        if (conic.on_conic) {
            scene.conic = conic.conic;
            scene.pascal = pascal_line(*hex);
            TangentSystem sys = tangent_system(*hex);
            if (sys.solution && scene.pascal) scene.quartic = pascal_octic(*hex).quartic;
        }
    }
    const std::string path = g.out_path.empty() ? (in.name + ".svg") : g.out_path;
    write_svg(scene, path);
    std::cout << "wrote " << path << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for line arrangements, Jacobian syzygies and "
                 "Pascal-hexagon octics"};
    app.require_subcommand(1);

    GlobalFlags g;
    app.add_flag("--json", g.json_out, "emit JSON instead of text");
    app.add_option("--seed", g.seed, "random seed for search");
    app.add_option("--cap", g.cap, "syzygy generator cap (default 2d-3)");
    app.add_option("--out", g.out_path, "output file path");

    std::string input_a, input_b, mode = "mixed";
    int count = 100;
    double half_span = 6.0;

    auto* analyze_cmd = app.add_subcommand("analyze", "full report for an arrangement or hexagon");
    analyze_cmd->add_option("input", input_a, "builtin name or file")->required();

    auto* lattice_cmd = app.add_subcommand("lattice", "intersection lattice and tau");
    lattice_cmd->add_option("input", input_a)->required();

    auto* defects_cmd = app.add_subcommand("defects", "defect sequence of the singular scheme");
    defects_cmd->add_option("input", input_a)->required();

    auto* pascal_cmd = app.add_subcommand("pascal", "conic, opposite-side points, Pascal line");
    pascal_cmd->add_option("input", input_a)->required();

    auto* octic_cmd = app.add_subcommand("octic", "Pascal-hexagon octic with certification");
    octic_cmd->add_option("input", input_a)->required();

    auto* compare_cmd = app.add_subcommand("compare", "Ziegler-pair verdict for two inputs");
    compare_cmd->add_option("a", input_a)->required();
    compare_cmd->add_option("b", input_b)->required();

    auto* search_cmd = app.add_subcommand("search", "random hexagon mdr experiment (CSV)");
    search_cmd->add_option("count", count, "number of samples");
    search_cmd->add_option("--mode", mode, "on-conic | off-conic | mixed");

    auto* render_cmd = app.add_subcommand("render", "SVG figure of an arrangement/hexagon");
    render_cmd->add_option("input", input_a)->required();
    render_cmd->add_option("--span", half_span, "half-width of the viewport (chart z=1)");

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze_cmd->parsed()) return cmd_analyze(input_a, g);
        if (lattice_cmd->parsed()) return cmd_lattice(input_a, g);
        if (defects_cmd->parsed()) return cmd_defects(input_a, g);
        if (pascal_cmd->parsed()) return cmd_pascal(input_a, g);
        if (octic_cmd->parsed()) return cmd_octic(input_a, g);
        if (compare_cmd->parsed()) return cmd_compare(input_a, input_b, g);
        if (search_cmd->parsed()) return cmd_search(count, mode, g);
        if (render_cmd->parsed()) return cmd_render(input_a, g, half_span);
    } catch (const linarr::ParseError& e) {
        std::cerr << "parse error: " << e.what();
        if (e.position() != linarr::ParseError::npos) std::cerr << " (at position " << e.position() << ")";
        std::cerr << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const linarr::DegeneracyError& e) {
        std::cerr << "degeneracy: " << e.what() << "\n";
        return 3;
    } catch (const linarr::InvariantViolation& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
