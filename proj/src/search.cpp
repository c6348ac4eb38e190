#include "linarr/search.hpp"

#include "linarr/errors.hpp"
#include "linarr/syzygy.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace linarr {

std::uint64_t SearchRng::splitmix() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t SearchRng::next() { return splitmix(); }

int SearchRng::range(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(next() % span);
}

SearchMode parse_search_mode(const std::string& s) {
    if (s == "on-conic") return SearchMode::OnConic;
    if (s == "off-conic") return SearchMode::OffConic;
    if (s == "mixed") return SearchMode::Mixed;
    throw ParseError("unknown search mode '" + s + "' (on-conic | off-conic | mixed)");
}

namespace {

// random invertible integer 3x3 matrix with small entries
std::array<std::array<int, 3>, 3> random_transform(SearchRng& rng) {
    while (true) {
        std::array<std::array<int, 3>, 3> m;
        for (auto& row : m)
            for (int& v : row) v = rng.range(-4, 4);
        const long det = static_cast<long>(m[0][0]) * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                         static_cast<long>(m[0][1]) * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                         static_cast<long>(m[0][2]) * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        if (det != 0) return m;
    }
}

std::optional<std::array<ProjPoint, 6>> sample_on_conic(SearchRng& rng) {
    // distinct parameters on x^2 = yz, then a random projective change
    std::set<int> used;
    std::array<int, 6> t;
    for (int i = 0; i < 6; ++i) {
        int v;
        int guard = 0;
        do {
            v = rng.range(-24, 24);
            if (++guard > 200) return std::nullopt;
        } while (used.count(v));
        used.insert(v);
        t[i] = v;
    }
    auto m = random_transform(rng);
    std::array<ProjPoint, 6> pts;
    for (int i = 0; i < 6; ++i) {
        const long p0 = t[i], p1 = static_cast<long>(t[i]) * t[i], p2 = 1;
        std::array<Rational, 3> img;
        for (int r = 0; r < 3; ++r)
            img[r] = Rational(m[r][0] * p0 + m[r][1] * p1 + m[r][2] * p2);
        if (img[0] == 0 && img[1] == 0 && img[2] == 0) return std::nullopt;
        pts[i] = ProjPoint(img);
    }
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (pts[i] == pts[j]) return std::nullopt;
    return pts;
}

std::optional<std::array<ProjPoint, 6>> sample_off_conic(SearchRng& rng) {
    std::array<ProjPoint, 6> pts;
    for (int i = 0; i < 6; ++i) {
        int a = rng.range(-12, 12), b = rng.range(-12, 12), c = rng.range(-12, 12);
        if (a == 0 && b == 0 && c == 0) a = 1;
        pts[i] = ProjPoint(a, b, c);
    }
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (pts[i] == pts[j]) return std::nullopt;
    if (six_points_on_conic(pts).on_conic) return std::nullopt; // resample as off-conic
    return pts;
}

} // namespace

SearchResult run_search(int count, SearchMode mode, std::uint64_t seed) {
    SearchRng rng(seed);
    SearchResult res;
    for (int idx = 0; idx < count; ++idx) {
        SearchSample s;
        s.index = idx;
        s.attempted_on_conic =
            (mode == SearchMode::OnConic) || (mode == SearchMode::Mixed && idx % 2 == 0);

        auto pts = s.attempted_on_conic ? sample_on_conic(rng) : sample_off_conic(rng);
        if (!pts) {
            s.reason = "degenerate-sample";
            res.samples.push_back(std::move(s));
            continue;
        }
        try {
            Hexagon hex(*pts);
            auto [arr, rep] = build_arrangement(hex);
            s.hexagon = hex;
            s.on_conic = six_points_on_conic(hex.vertices()).on_conic;
            if (!rep.generic) {
                s.reason = "non-generic-lattice";
                res.samples.push_back(std::move(s));
                continue;
            }
            s.lattice_generic = true;
            s.tangent_rank = tangent_system(hex).rank;
            s.mdr_value = mdr(arr.polynomial());
            ++res.generic_count;
        } catch (const DegeneracyError&) {
            s.reason = "degenerate-hexagon";
        }
        res.samples.push_back(std::move(s));
    }
    return res;
}

std::string SearchResult::to_csv() const {
    std::ostringstream out;
    out << "index,on_conic,lattice_generic,tangent_rank,mdr,reason,vertices\n";
    for (const SearchSample& s : samples) {
        out << s.index << ',' << (s.on_conic ? 1 : 0) << ',' << (s.lattice_generic ? 1 : 0) << ','
            << s.tangent_rank << ',' << s.mdr_value << ',' << s.reason << ',';
        if (s.hexagon) {
            out << '"';
            const auto& vs = s.hexagon->vertices();
            for (int i = 0; i < 6; ++i) {
                if (i) out << ' ';
                out << vs[i].str();
            }
            out << '"';
        }
        out << '\n';
    }
    return out.str();
}

} // namespace linarr
