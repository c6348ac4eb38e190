#include "linarr/analysis.hpp"

#include "linarr/errors.hpp"

#include <sstream>

namespace linarr {

AnalysisReport analyze(const ParsedInput& input, int cap) {
    AnalysisReport rep;
    rep.input = input.name;

    std::optional<Arrangement> arr = input.arrangement;
    if (input.hexagon) {
        rep.hexagon = input.hexagon;
        auto [harr, hrep] = build_arrangement(*input.hexagon);
        if (!hrep.generic) {
            std::string detail;
            for (const std::string& s : hrep.extra_incidences) detail += " " + s;
            throw DegeneracyError("hexagon arrangement is not generic (6 triples + 18 doubles):" +
                                  detail);
        }
        arr = std::move(harr);
    }

    HomPoly f;
    if (arr) {
        f = arr->polynomial();
        rep.arrangement = arr;
        rep.lattice = intersection_lattice(*arr);
        rep.tau = total_tjurina(*rep.lattice);
    } else if (input.raw_poly) {
        f = *input.raw_poly; // trusted reduced; syzygy-only analysis
    } else {
        throw ParseError("input '" + input.name + "' carries no polynomial");
    }

    const int d = f.degree();
    if (d < 1) throw DegeneracyError("constant polynomial has no syzygy theory");
    rep.profile = minimal_generator_degrees(f, cap >= 0 ? cap : default_generator_cap(d));

    if (arr) {
        rep.defects = defect_sequence(*arr);
        rep.gap = gap_certificate(*arr, d - 1);
        if (!rep.hexagon) rep.hexagon = hexagon_from_arrangement(*arr);
    }
    if (rep.hexagon) {
        rep.conic = six_points_on_conic(rep.hexagon->vertices());
        rep.pascal = pascal_line(*rep.hexagon);
        rep.tangent_rank = tangent_system(*rep.hexagon).rank;
    }
    return rep;
}

json to_json(const AnalysisReport& r) {
    json j;
    j["input"] = r.input;
    if (r.arrangement) j["arrangement"] = to_json(*r.arrangement);
    if (r.lattice) {
        json summary;
        summary["points"] = to_json(*r.lattice)["points"];
        json counts = json::object();
        for (const MultPoint& p : r.lattice->points)
            counts[std::to_string(p.multiplicity())] =
                r.lattice->count_of_multiplicity(p.multiplicity());
        summary["multiplicity_counts"] = counts;
        j["lattice"] = summary;
        j["tau"] = r.tau;
    }
    j["syzygies"] = to_json(r.profile);
    if (r.defects) j["defects"] = to_json(*r.defects);
    if (r.gap) j["gap_certificate"] = to_json(*r.gap);
    if (r.hexagon) {
        json h = to_json(*r.hexagon);
        if (r.conic && r.conic->on_conic) {
            h["conic"] = to_json(r.conic->conic);
            h["conic_class"] = r.conic->conic_class == ConicClass::Smooth     ? "smooth"
                               : r.conic->conic_class == ConicClass::TwoLines ? "two-lines"
                                                                              : "double-line";
        } else if (r.conic) {
            h["conic"] = nullptr;
        }
        if (r.pascal) h["pascal_line"] = to_json(*r.pascal);
        if (r.tangent_rank) h["tangent_rank"] = *r.tangent_rank;
        j["hexagon"] = h;
    }
    return j;
}

std::string human_readable(const AnalysisReport& r) {
    std::ostringstream out;
    out << "input: " << r.input << "\n";
    if (r.arrangement) {
        out << "lines: " << r.arrangement->size() << " (degree " << r.profile.d << ")\n";
        out << "lattice:";
        for (int m = 2; m <= r.arrangement->size(); ++m) {
            const int c = r.lattice->count_of_multiplicity(m);
            if (c) out << "  " << c << " x m=" << m;
        }
        out << "\n";
        out << "tau: " << r.tau << "\n";
    }
    out << "mdr: " << r.profile.mdr << "\n";
    out << "exponents (within cap " << r.profile.cap() << "):";
    for (int g : r.profile.generator_degrees) out << " " << g;
    out << (r.profile.free ? "  [free]" : "  [not free]") << "\n";
    if (r.defects) {
        out << "defect threshold 2d-5-r = " << r.defects->threshold << "; nonzero defects:";
        bool any = false;
        for (const DefectRow& row : r.defects->rows)
            if (row.defect > 0) {
                out << " defect_" << row.k << "=" << row.defect;
                any = true;
            }
        if (!any) out << " none";
        out << "\n";
    }
    if (r.gap) {
        out << "gap at degree " << r.gap->k << ": dim I=" << r.gap->dim_I
            << " dim J=" << r.gap->dim_J << "; octic " << r.gap->h.str() << "\n";
    } else if (r.arrangement) {
        out << "no gap element at degree " << r.profile.d - 1 << " (dim I = dim J)\n";
    }
    if (r.hexagon) {
        out << "hexagon vertices:";
        for (const ProjPoint& p : r.hexagon->vertices()) out << " " << p.str();
        out << "\n";
        if (r.conic) {
            if (r.conic->on_conic)
                out << "vertices on conic: " << r.conic->conic.str() << " ("
                    << (r.conic->conic_class == ConicClass::Smooth     ? "smooth"
                        : r.conic->conic_class == ConicClass::TwoLines ? "two lines"
                                                                       : "double line")
                    << ")\n";
            else
                out << "vertices not on a conic\n";
        }
        if (r.pascal)
            out << "pascal line: " << r.pascal->str() << "\n";
        else
            out << "opposite-side points not collinear\n";
        if (r.tangent_rank) out << "tangent system rank: " << *r.tangent_rank << "\n";
    }
    return out.str();
}

CompareReport compare(const ParsedInput& ia, const ParsedInput& ib) {
    auto arr_of = [](const ParsedInput& in) -> Arrangement {
        if (in.arrangement) return *in.arrangement;
        if (in.hexagon) {
            auto [arr, rep] = build_arrangement(*in.hexagon);
            return arr;
        }
        throw ParseError("compare needs arrangement inputs");
    };
    Arrangement a = arr_of(ia), b = arr_of(ib);
    CompareReport rep;
    rep.name_a = ia.name;
    rep.name_b = ib.name;
    Lattice la = intersection_lattice(a), lb = intersection_lattice(b);
    rep.witness = lattice_isomorphic(la, lb);
    rep.isomorphic = rep.witness.has_value();
    rep.tau_a = total_tjurina(la);
    rep.tau_b = total_tjurina(lb);
    rep.mdr_a = mdr(a.polynomial());
    rep.mdr_b = mdr(b.polynomial());
    rep.ziegler_pair = rep.isomorphic && rep.mdr_a != rep.mdr_b;
    return rep;
}

json to_json(const CompareReport& r) {
    json j{{"a", r.name_a},
           {"b", r.name_b},
           {"lattice_isomorphic", r.isomorphic},
           {"mdr_a", r.mdr_a},
           {"mdr_b", r.mdr_b},
           {"tau_a", r.tau_a},
           {"tau_b", r.tau_b},
           {"ziegler_pair", r.ziegler_pair}};
    if (r.witness) j["witness"] = *r.witness;
    return j;
}

std::string human_readable(const CompareReport& r) {
    std::ostringstream out;
    out << r.name_a << " vs " << r.name_b << "\n";
    out << "lattices isomorphic: " << (r.isomorphic ? "yes" : "no");
    if (r.witness) {
        out << "  witness:";
        for (int v : *r.witness) out << " " << v;
    }
    out << "\n";
    out << "tau: " << r.tau_a << " vs " << r.tau_b << "\n";
    out << "mdr: " << r.mdr_a << " vs " << r.mdr_b << "\n";
    out << "verdict: "
        << (r.ziegler_pair ? "ZIEGLER PAIR (same lattice, different mdr)"
                           : (r.isomorphic ? "not a Ziegler pair (equal mdr)"
                                           : "not a Ziegler pair (different lattices)"))
        << "\n";
    return out.str();
}

} // namespace linarr
