#pragma once

#include "linarr/hexagon.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace linarr {

/// Deterministic RNG for the search experiment (splitmix64). Avoids
/// std::uniform_int_distribution, whose output is implementation-defined;
/// identical seeds must give byte-identical CSV everywhere.
class SearchRng {
public:
    explicit SearchRng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    /// uniform-ish integer in [lo, hi] (modulo reduction; fine at this scale)
    int range(int lo, int hi);

private:
    std::uint64_t splitmix();
    std::uint64_t state_;
};

enum class SearchMode { OnConic, OffConic, Mixed };

struct SearchSample {
    int index = 0;
    bool attempted_on_conic = false;
    std::optional<Hexagon> hexagon; // empty when vertex sampling degenerated
    bool lattice_generic = false;
    bool on_conic = false;
    int tangent_rank = 0; // 0 when not computed
    int mdr_value = -1;   // -1 when not computed
    std::string reason;   // failure reason code for non-generic samples
};

struct SearchResult {
    std::vector<SearchSample> samples;
    int generic_count = 0;

    std::string to_csv() const;
};

SearchMode parse_search_mode(const std::string& s);

/// Sample `count` random rational hexagons (vertices on a random rational
/// conic in on-conic mode), filter for the generic 6-triple/18-double
/// lattice, and record tangent-system rank and mdr of the 9-line
/// arrangement. Deterministic under a fixed seed.
SearchResult run_search(int count, SearchMode mode, std::uint64_t seed);

} // namespace linarr
