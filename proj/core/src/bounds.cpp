#include "diogon/bounds.hpp"

#include "diogon/predicates.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace diogon {

namespace {

void require_natural(const Int& k, const char* who) {
    if (k < 1) throw std::domain_error(std::string(who) + ": k must be >= 1");
}

}  // namespace

Int n0_bound(const Int& k) {
    require_natural(k, "n0_bound");
    return 4 * k;
}

Int concave_side_bound(const Int& k) {
    require_natural(k, "concave_side_bound");
    return 2 * k + 1;
}

Int concave_diagonal_bound(const Int& k) {
    require_natural(k, "concave_diagonal_bound");
    return 4 * k;
}

Int convex_halfplane_bound(const Int& k) {
    require_natural(k, "convex_halfplane_bound");
    return 2 * k - 1;
}

std::optional<ClaimedRange> claimed_n_range(const Int& k) {
    require_natural(k, "claimed_n_range");
    ClaimedRange r;
    r.k = k;
    if (k == 1) {
        r.any = ClaimedSpan{3, 3, {}};
        r.note =
            "closed: with a unit shortest side only triangles exist, realized by "
            "the isosceles family (1, t, t)";
        return r;
    }
    if (k == 2) {
        r.convex = ClaimedSpan{3, 5, {5}};
        r.concave = ClaimedSpan{3, 6, {5, 6}};
        r.note =
            "quadrilaterals are realized; the pentagon (convex) and the pentagon "
            "and hexagon (concave) are claimed possible but carry no known witness";
        return r;
    }
    if (k == 3) {
        r.any = ClaimedSpan{3, 7, {5, 6, 7}};
        r.note =
            "recorded claim reads 1 <= n <= 7; the lower end is normalized to 3 "
            "here since a polygon needs three vertices, and n in {5, 6, 7} has no "
            "known witness";
        return r;
    }
    return std::nullopt;
}

HalfplaneProfile halfplane_difference_profile(const DiophantineSet& s,
                                              std::size_t p_index,
                                              std::size_t q_index, const Int& k) {
    const std::size_t n = s.points.size();
    if (p_index >= n || q_index >= n || p_index == q_index)
        throw std::domain_error("halfplane_difference_profile: bad baseline indices");
    if (s.distance_matrix.size() != n)
        throw std::domain_error("halfplane_difference_profile: malformed matrix");
    if (s.distance_matrix[p_index][q_index] != k)
        throw std::domain_error(
            "halfplane_difference_profile: baseline pair is not at distance k");

    const QuadPoint& P = s.points[p_index];
    const QuadPoint& Q = s.points[q_index];

    std::vector<std::size_t> upper, lower;
    for (std::size_t v = 0; v < n; ++v) {
        if (v == p_index || v == q_index) continue;
        int side = orientation(P, Q, s.points[v]);
        if (side == 0)
            throw std::domain_error(
                "halfplane_difference_profile: vertex collinear with the baseline");
        (side > 0 ? upper : lower).push_back(v);
    }
    auto clockwise = [&](std::size_t u, std::size_t v) {
        return clockwise_about(P, s.points[u], s.points[v]);
    };
    std::sort(upper.begin(), upper.end(), clockwise);
    std::sort(lower.begin(), lower.end(), clockwise);

    auto fill = [&](const std::vector<std::size_t>& idx) {
        HalfplaneGroup g;
        g.vertices = idx;
        for (std::size_t v : idx)
            g.deltas.push_back(s.distance_matrix[v][p_index] -
                               s.distance_matrix[v][q_index]);
        bool inc = true, dec = true;
        for (std::size_t i = 1; i < g.deltas.size(); ++i) {
            if (!(g.deltas[i - 1] < g.deltas[i])) inc = false;
            if (!(g.deltas[i - 1] > g.deltas[i])) dec = false;
        }
        g.strictly_monotone = g.deltas.size() <= 1 || inc || dec;
        std::set<Int> uniq(g.deltas.begin(), g.deltas.end());
        g.all_distinct = uniq.size() == g.deltas.size();
        return g;
    };

    HalfplaneProfile prof;
    prof.upper = fill(upper);
    prof.lower = fill(lower);
    return prof;
}

BoundReport make_bound_report(const Int& k) {
    BoundReport rep;
    rep.k = k;
    rep.n0 = n0_bound(k);
    rep.concave_side = concave_side_bound(k);
    rep.concave_diagonal = concave_diagonal_bound(k);
    rep.convex_halfplane = convex_halfplane_bound(k);
    rep.claimed = claimed_n_range(k);
    rep.consistent = true;
    return rep;
}

BoundReport check_claims(const SearchReport& search_rep) {
    BoundReport rep = make_bound_report(search_rep.k);
    rep.search_max_n = search_rep.max_n_found;
    rep.consistent = Int(search_rep.max_n_found) <= rep.n0;
    return rep;
}

namespace {

std::string span_text(const std::optional<ClaimedSpan>& s) {
    if (!s) return "-";
    std::ostringstream os;
    os << s->lo << ".." << s->hi;
    if (!s->open.empty()) {
        os << " (no witness:";
        for (unsigned v : s->open) os << " " << v;
        os << ")";
    }
    return os.str();
}

}  // namespace

std::string bound_report_table(const BoundReport& rep) {
    std::ostringstream os;
    auto line = [&](const char* label, const std::string& value) {
        os << label;
        for (std::size_t i = std::string(label).size(); i < 26; ++i) os << ' ';
        os << value << "\n";
    };
    line("k", rep.k.str());
    line("n0 bound (4k)", rep.n0.str());
    line("concave side (2k+1)", rep.concave_side.str());
    line("concave diagonal (4k)", rep.concave_diagonal.str());
    line("convex half-plane (2k-1)", rep.convex_halfplane.str());
    if (rep.claimed) {
        line("claimed any", span_text(rep.claimed->any));
        line("claimed convex", span_text(rep.claimed->convex));
        line("claimed concave", span_text(rep.claimed->concave));
        if (!rep.claimed->note.empty()) line("note", rep.claimed->note);
    } else {
        line("claimed range", "none recorded");
    }
    if (rep.search_max_n) line("search max_n", std::to_string(*rep.search_max_n));
    line("consistent", rep.consistent ? "yes" : "no");
    return os.str();
}

}  // namespace diogon
