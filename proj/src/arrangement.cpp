#include "linarr/arrangement.hpp"

#include "linarr/errors.hpp"

#include <algorithm>
#include <map>

namespace linarr {

Arrangement::Arrangement(std::vector<LinearForm> lines) : lines_(std::move(lines)) {
    if (lines_.empty()) throw DegeneracyError("arrangement needs at least one line");
    for (std::size_t i = 0; i < lines_.size(); ++i)
        for (std::size_t j = i + 1; j < lines_.size(); ++j)
            if (lines_[i] == lines_[j])
                throw DegeneracyError("duplicate line " + lines_[i].str() + " in arrangement");
}

HomPoly Arrangement::polynomial() const {
    HomPoly f = HomPoly::constant(Rational(1));
    for (const LinearForm& l : lines_) f = f * HomPoly::from_linear(l);
    return f;
}

int Lattice::count_of_multiplicity(int m) const {
    int n = 0;
    for (const MultPoint& p : points)
        if (p.multiplicity() == m) ++n;
    return n;
}

const MultPoint* Lattice::find(const ProjPoint& p) const {
    for (const MultPoint& mp : points)
        if (mp.point == p) return &mp;
    return nullptr;
}

Lattice intersection_lattice(const Arrangement& a) {
    std::map<ProjPoint, std::vector<int>> acc;
    const int n = a.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            ProjPoint p = meet(a.line(i), a.line(j));
            std::vector<int>& inc = acc[p];
            if (std::find(inc.begin(), inc.end(), i) == inc.end()) inc.push_back(i);
            if (std::find(inc.begin(), inc.end(), j) == inc.end()) inc.push_back(j);
        }
    Lattice lat;
    long pair_check = 0;
    for (auto& [p, inc] : acc) {
        std::sort(inc.begin(), inc.end());
        const long m = static_cast<long>(inc.size());
        pair_check += m * (m - 1) / 2;
        lat.points.push_back(MultPoint{p, inc});
    }
    if (pair_check != static_cast<long>(n) * (n - 1) / 2)
        throw InvariantViolation("lattice pair count mismatch");
    return lat;
}

long total_tjurina(const Lattice& l) {
    long tau = 0;
    for (const MultPoint& p : l.points) {
        const long m = p.multiplicity();
        tau += (m - 1) * (m - 1);
    }
    return tau;
}

long total_tjurina(const Arrangement& a) { return total_tjurina(intersection_lattice(a)); }

namespace {

struct IsoSearch {
    int n;
    // meet multiplicity per line pair, and point incidence sets
    std::vector<std::vector<int>> meet1, meet2;
    const Lattice* l1;
    const Lattice* l2;
    std::vector<int> perm;
    std::vector<bool> used;

    bool leaf_check() const {
        // each multiple point of l1 must map onto a point of l2 with the
        // same incidence set under perm
        for (const MultPoint& p : l1->points) {
            std::vector<int> img;
            img.reserve(p.incident.size());
            for (int i : p.incident) img.push_back(perm[i]);
            std::sort(img.begin(), img.end());
            bool found = false;
            for (const MultPoint& q : l2->points)
                if (q.incident == img) {
                    found = true;
                    break;
                }
            if (!found) return false;
        }
        return true;
    }

    bool backtrack(int i) {
        if (i == n) return leaf_check();
        for (int c = 0; c < n; ++c) {
            if (used[c]) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                ok = (meet1[j][i] == meet2[perm[j]][c]);
            if (!ok) continue;
            perm[i] = c;
            used[c] = true;
            if (backtrack(i + 1)) return true;
            used[c] = false;
        }
        return false;
    }
};

std::vector<std::vector<int>> meet_table(const Lattice& l, int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n, 0));
    for (const MultPoint& p : l.points)
        for (std::size_t a = 0; a < p.incident.size(); ++a)
            for (std::size_t b = a + 1; b < p.incident.size(); ++b) {
                t[p.incident[a]][p.incident[b]] = p.multiplicity();
                t[p.incident[b]][p.incident[a]] = p.multiplicity();
            }
    return t;
}

// per-line invariant: sorted multiset of multiplicities of points on the line
std::vector<std::vector<int>> line_profiles(const Lattice& l, int n) {
    std::vector<std::vector<int>> prof(n);
    for (const MultPoint& p : l.points)
        for (int i : p.incident) prof[i].push_back(p.multiplicity());
    for (auto& v : prof) std::sort(v.begin(), v.end());
    return prof;
}

int line_count(const Lattice& l) {
    int n = 0;
    for (const MultPoint& p : l.points)
        for (int i : p.incident) n = std::max(n, i + 1);
    return n;
}

} // namespace

std::optional<std::vector<int>> lattice_isomorphic(const Lattice& l1, const Lattice& l2) {
    const int n = line_count(l1);
    if (line_count(l2) != n) return std::nullopt;
    // multiplicity multisets must match
    std::vector<int> m1, m2;
    for (const MultPoint& p : l1.points) m1.push_back(p.multiplicity());
    for (const MultPoint& p : l2.points) m2.push_back(p.multiplicity());
    std::sort(m1.begin(), m1.end());
    std::sort(m2.begin(), m2.end());
    if (m1 != m2) return std::nullopt;
    // per-line profiles must match as multisets
    auto p1 = line_profiles(l1, n), p2 = line_profiles(l2, n);
    {
        auto s1 = p1, s2 = p2;
        std::sort(s1.begin(), s1.end());
        std::sort(s2.begin(), s2.end());
        if (s1 != s2) return std::nullopt;
    }
    IsoSearch s;
    s.n = n;
    s.meet1 = meet_table(l1, n);
    s.meet2 = meet_table(l2, n);
    s.l1 = &l1;
    s.l2 = &l2;
    s.perm.assign(n, -1);
    s.used.assign(n, false);
    if (s.backtrack(0)) return s.perm;
    return std::nullopt;
}

Arrangement add_line(const Arrangement& a, const LinearForm& l) {
    std::vector<LinearForm> lines = a.lines();
    for (const LinearForm& e : lines)
        if (e == l) throw DegeneracyError("line " + l.str() + " already in arrangement");
    lines.push_back(l);
    return Arrangement(std::move(lines));
}

Arrangement move_triple_point(const Arrangement& a, const ProjPoint& p, const ProjPoint& p_new) {
    Lattice lat = intersection_lattice(a);
    const MultPoint* mp = lat.find(p);
    if (!mp || mp->multiplicity() != 3)
        throw DegeneracyError("point " + p.str() + " is not a triple point of the arrangement");

    std::vector<LinearForm> lines = a.lines();
    for (int li : mp->incident) {
        if (pairing(a.line(li), p_new) == 0) continue; // already through p_new: keep

        // the line's other point of multiplicity >= 3
        std::vector<ProjPoint> others;
        for (const MultPoint& q : lat.points)
            if (q.multiplicity() >= 3 && !(q.point == p) &&
                std::find(q.incident.begin(), q.incident.end(), li) != q.incident.end())
                others.push_back(q.point);
        if (others.size() != 1)
            throw DegeneracyError("line " + a.line(li).str() + " through " + p.str() + " has " +
                                  std::to_string(others.size()) +
                                  " other multiple points; move undefined");
        if (others[0] == p_new)
            throw DegeneracyError("target position coincides with another multiple point");
        lines[li] = join(p_new, others[0]);
    }

    // duplicate replacement lines mean the combinatorics collapsed
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j)
            if (lines[i] == lines[j])
                throw DegeneracyError("combinatorics changed: two lines coincide after the move");

    Arrangement out{lines};
    if (!lattice_isomorphic(lat, intersection_lattice(out)))
        throw DegeneracyError("combinatorics changed: moved arrangement has a different lattice");
    return out;
}

} // namespace linarr
