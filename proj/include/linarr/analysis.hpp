#pragma once

#include "linarr/json_io.hpp"
#include "linarr/singular_scheme.hpp"
#include "linarr/syzygy.hpp"

#include <optional>
#include <string>

namespace linarr {

/// Everything the analyze command reports for one input. The same tau
/// appears in the lattice summary and the defect report by construction
/// (both come from the lattice; defect_sequence re-validates it against
/// the stabilized quotient dimension).
struct AnalysisReport {
    std::string input;
    std::optional<Arrangement> arrangement;
    std::optional<Lattice> lattice;
    long tau = 0;
    SyzygyProfile profile;
    std::optional<DefectReport> defects;
    std::optional<GapCertificate> gap;

    // present when the input is (or recovers) a hexagon
    std::optional<Hexagon> hexagon;
    std::optional<ConicResult> conic;
    std::optional<LinearForm> pascal;
    std::optional<int> tangent_rank;
};

/// Full analysis; cap < 0 means the default generator cap 2d-3.
AnalysisReport analyze(const ParsedInput& input, int cap = -1);

json to_json(const AnalysisReport& r);
std::string human_readable(const AnalysisReport& r);

struct CompareReport {
    std::string name_a, name_b;
    bool isomorphic = false;
    std::optional<std::vector<int>> witness;
    int mdr_a = 0, mdr_b = 0;
    long tau_a = 0, tau_b = 0;
    bool ziegler_pair = false; // isomorphic lattices, distinct mdr
};

CompareReport compare(const ParsedInput& a, const ParsedInput& b);

json to_json(const CompareReport& r);
std::string human_readable(const CompareReport& r);

} // namespace linarr
