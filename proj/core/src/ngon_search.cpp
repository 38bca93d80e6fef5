#include "diogon/ngon_search.hpp"

#include "diogon/detail/parallel.hpp"
#include "diogon/predicates.hpp"
#include "diogon/serialize.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace diogon {

namespace {

constexpr const char* kScopeSentence =
    "complete enumeration of every apex with integer distances at most M from "
    "both baseline endpoints, in both half-planes; maxima and witness lists "
    "are exhaustive within this frame";

}  // namespace

const char* to_string(SearchMode m) {
    switch (m) {
        case SearchMode::sets: return "sets";
        case SearchMode::convex_polygons: return "convex";
        case SearchMode::concave_polygons: return "concave";
    }
    return "sets";
}

std::optional<SearchMode> search_mode_from_string(std::string_view s) {
    if (s == "sets") return SearchMode::sets;
    if (s == "convex") return SearchMode::convex_polygons;
    if (s == "concave") return SearchMode::concave_polygons;
    return std::nullopt;
}

QuadPoint baseline_p() { return QuadPoint(QuadScalar(0), QuadScalar(0)); }

QuadPoint baseline_q(const Int& k) {
    return QuadPoint(QuadScalar(Rational(k)), QuadScalar(0));
}

QuadPoint apex_point(const ApexCandidate& c) {
    Rational coeff = c.sign > 0 ? c.y_coeff : -c.y_coeff;
    return QuadPoint(QuadScalar(c.x), QuadScalar(Rational(0), coeff, c.D));
}

ApexCandidate make_apex_candidate(const Int& k, const Int& a, const Int& b, int sign) {
    if (k < 1 || a < 1 || b < 1)
        throw std::domain_error("make_apex_candidate: distances must be >= 1");
    if (sign != +1 && sign != -1)
        throw std::domain_error("make_apex_candidate: sign must be +1 or -1");
    Int diff = a < b ? b - a : a - b;
    if (!(diff < k && k < a + b))
        throw std::domain_error("make_apex_candidate: apex would sit on the baseline");
    Rational x(a * a - b * b + k * k, 2 * k);
    Rational s = Rational(a * a) - x * x;
    if (s <= 0) throw std::logic_error("make_apex_candidate: nonpositive ordinate square");
    auto [D, f] = squarefree_decompose(num(s) * den(s));
    Rational y_coeff(f, den(s));
    return {k, a, b, sign, x, s, D, y_coeff};
}

std::vector<ApexCandidate> enumerate_apexes(const SearchConfig& cfg) {
    if (cfg.k < 1) throw std::domain_error("enumerate_apexes: k must be >= 1");
    if (cfg.M < 1) throw std::domain_error("enumerate_apexes: M must be >= 1");

    std::vector<ApexCandidate> out;
    for (Int a = 1; a <= cfg.M; ++a)
        for (Int b = 1; b <= cfg.M; ++b) {
            Int diff = a < b ? b - a : a - b;
            if (!(diff < cfg.k && cfg.k < a + b)) continue;  // apex off the line
            for (int sign : {+1, -1})
                out.push_back(make_apex_candidate(cfg.k, a, b, sign));
        }
    return out;
}

std::optional<Int> compatible(const ApexCandidate& u, const ApexCandidate& v) {
    if (u.k != v.k) throw std::invalid_argument("compatible: baseline mismatch");
    if (u == v) throw std::invalid_argument("compatible: identical candidates");
    if (u.D != v.D) return std::nullopt;  // cross term would be irrational
    QuadPoint pu = apex_point(u), pv = apex_point(v);
    auto d = integer_distance(pu, pv);
    if (!d) return std::nullopt;
    QuadPoint P = baseline_p(), Q = baseline_q(u.k);
    if (collinear(pu, pv, P) || collinear(pu, pv, Q)) return std::nullopt;
    return d;
}

CompatibilityGraph build_graph(const SearchConfig& cfg, unsigned threads) {
    CompatibilityGraph g;
    g.k = cfg.k;
    g.M = cfg.M;
    g.vertices = enumerate_apexes(cfg);
    const std::size_t n = g.vertices.size();

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

    std::vector<std::optional<Int>> weight(pairs.size());
    detail::parallel_for(pairs.size(), threads, [&](std::size_t idx) {
        weight[idx] = compatible(g.vertices[pairs[idx].first], g.vertices[pairs[idx].second]);
    });
    for (std::size_t idx = 0; idx < pairs.size(); ++idx)
        if (weight[idx]) g.edges.push_back({pairs[idx], *weight[idx]});
    return g;
}

namespace detail {

namespace {

using Bits = boost::dynamic_bitset<>;

std::vector<std::size_t> degeneracy_order(const std::vector<Bits>& adj) {
    const std::size_t n = adj.size();
    std::vector<char> removed(n, 0);
    std::vector<std::size_t> deg(n), order;
    order.reserve(n);
    for (std::size_t i = 0; i < n; ++i) deg[i] = adj[i].count();
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t best = n;
        for (std::size_t v = 0; v < n; ++v)
            if (!removed[v] && (best == n || deg[v] < deg[best])) best = v;
        order.push_back(best);
        removed[best] = 1;
        for (auto u = adj[best].find_first(); u != Bits::npos; u = adj[best].find_next(u))
            if (!removed[u]) --deg[u];
    }
    return order;
}

struct BkState {
    const std::vector<Bits>* adj;
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> R;

    void expand(Bits P, Bits X) {
        if (P.none() && X.none()) {
            out.push_back(R);
            return;
        }
        Bits PX = P | X;
        std::size_t pivot = Bits::npos;
        std::size_t pivot_cnt = 0;
        for (auto u = PX.find_first(); u != Bits::npos; u = PX.find_next(u)) {
            std::size_t cnt = (P & (*adj)[u]).count();
            if (pivot == Bits::npos || cnt > pivot_cnt) {
                pivot = u;
                pivot_cnt = cnt;
            }
        }
        Bits cand = P & ~(*adj)[pivot];
        for (auto v = cand.find_first(); v != Bits::npos; v = cand.find_next(v)) {
            R.push_back(v);
            expand(P & (*adj)[v], X & (*adj)[v]);
            R.pop_back();
            P.reset(v);
            X.set(v);
        }
    }
};

std::vector<std::vector<std::size_t>> bk_on_bits(const std::vector<Bits>& adj) {
    const std::size_t n = adj.size();
    auto order = degeneracy_order(adj);
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;

    BkState st;
    st.adj = &adj;
    for (std::size_t v : order) {
        Bits P(n), X(n);
        for (auto u = adj[v].find_first(); u != Bits::npos; u = adj[v].find_next(u))
            (pos[u] > pos[v] ? P : X).set(u);
        st.R.assign(1, v);
        st.expand(P, X);
    }
    for (auto& c : st.out) std::sort(c.begin(), c.end());
    std::sort(st.out.begin(), st.out.end(), [](const auto& x, const auto& y) {
        if (x.size() != y.size()) return x.size() > y.size();
        return x < y;
    });
    return st.out;
}

}  // namespace

std::vector<std::vector<std::size_t>> bron_kerbosch(
    const std::vector<std::vector<bool>>& adj) {
    const std::size_t n = adj.size();
    std::vector<Bits> bits(n, Bits(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && adj[i][j]) bits[i].set(j);
    return bk_on_bits(bits);
}

}  // namespace detail

namespace {

// Splits a clique around collinear apex triples: removing each offender in
// turn reaches every maximal triple-free subset.
void split_collinear(const std::vector<std::size_t>& S,
                     const std::vector<QuadPoint>& pts,
                     std::set<std::vector<std::size_t>>& seen,
                     std::set<std::vector<std::size_t>>& out) {
    if (!seen.insert(S).second) return;
    for (std::size_t i = 0; i < S.size(); ++i)
        for (std::size_t j = i + 1; j < S.size(); ++j)
            for (std::size_t l = j + 1; l < S.size(); ++l)
                if (collinear(pts[S[i]], pts[S[j]], pts[S[l]])) {
                    for (std::size_t drop : {i, j, l}) {
                        std::vector<std::size_t> next;
                        next.reserve(S.size() - 1);
                        for (std::size_t t = 0; t < S.size(); ++t)
                            if (t != drop) next.push_back(S[t]);
                        split_collinear(next, pts, seen, out);
                    }
                    return;
                }
    out.insert(S);
}

void sort_sets_canonically(std::vector<std::vector<std::size_t>>& sets) {
    std::sort(sets.begin(), sets.end(), [](const auto& x, const auto& y) {
        if (x.size() != y.size()) return x.size() > y.size();
        return x < y;
    });
}

std::vector<std::vector<std::size_t>> keep_maximal(
    std::vector<std::vector<std::size_t>> sets) {
    sort_sets_canonically(sets);
    std::vector<std::vector<std::size_t>> kept;
    for (const auto& s : sets) {
        bool contained = false;
        for (const auto& big : kept) {
            if (big.size() <= s.size()) continue;
            if (std::includes(big.begin(), big.end(), s.begin(), s.end())) {
                contained = true;
                break;
            }
        }
        if (!contained) kept.push_back(s);
    }
    return kept;
}

}  // namespace

std::vector<std::vector<std::size_t>> find_max_cliques(const CompatibilityGraph& g,
                                                       std::size_t min_size) {
    const std::size_t n = g.vertices.size();
    if (n == 0) return {};

    std::vector<boost::dynamic_bitset<>> adj(n, boost::dynamic_bitset<>(n));
    for (const auto& e : g.edges) {
        adj[e.first.first].set(e.first.second);
        adj[e.first.second].set(e.first.first);
    }
    auto cliques = detail::bk_on_bits(adj);

    std::vector<QuadPoint> pts;
    pts.reserve(n);
    for (const auto& v : g.vertices) pts.push_back(apex_point(v));

    std::set<std::vector<std::size_t>> seen, legal;
    for (const auto& c : cliques) split_collinear(c, pts, seen, legal);

    auto kept = keep_maximal({legal.begin(), legal.end()});

    std::vector<std::vector<std::size_t>> out;
    for (auto& s : kept)
        if (s.size() >= min_size) out.push_back(std::move(s));
    sort_sets_canonically(out);

    // Post-hoc re-verification from coordinates: every returned set must be
    // pairwise realizable and free of collinear triples with the baseline.
    QuadPoint P = baseline_p(), Q = baseline_q(g.k);
    for (const auto& s : out) {
        std::vector<QuadPoint> full{P, Q};
        for (std::size_t v : s) full.push_back(pts[v]);
        for (std::size_t i = 2; i < full.size(); ++i)
            for (std::size_t j = i + 1; j < full.size(); ++j)
                if (!integer_distance(full[i], full[j]))
                    throw std::logic_error("find_max_cliques: non-integer pair escaped");
        for (std::size_t i = 0; i < full.size(); ++i)
            for (std::size_t j = i + 1; j < full.size(); ++j)
                for (std::size_t l = j + 1; l < full.size(); ++l)
                    if (collinear(full[i], full[j], full[l]))
                        throw std::logic_error("find_max_cliques: collinear triple escaped");
    }
    return out;
}

std::vector<QuadPoint> assemble_polygon(const std::vector<QuadPoint>& pts,
                                        const QuadPoint& P, const QuadPoint& Q) {
    if (pts.size() < 3)
        throw std::domain_error("assemble_polygon: need at least 3 points");
    if (P == Q) throw std::domain_error("assemble_polygon: P equals Q");
    bool have_p = false, have_q = false;
    for (const auto& p : pts) {
        if (p == P) have_p = true;
        if (p == Q) have_q = true;
    }
    if (!have_p || !have_q)
        throw std::domain_error("assemble_polygon: baseline endpoint missing");
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            for (std::size_t l = j + 1; l < pts.size(); ++l)
                if (collinear(pts[i], pts[j], pts[l]))
                    throw std::domain_error("assemble_polygon: collinear triple");

    std::vector<QuadPoint> upper, lower;
    for (const auto& p : pts) {
        if (p == P || p == Q) continue;
        (orientation(P, Q, p) > 0 ? upper : lower).push_back(p);
    }
    auto clockwise = [&P](const QuadPoint& u, const QuadPoint& v) {
        return clockwise_about(P, u, v);
    };
    std::sort(upper.begin(), upper.end(), clockwise);
    std::sort(lower.begin(), lower.end(), clockwise);

    std::vector<QuadPoint> ring;
    ring.reserve(pts.size());
    ring.push_back(P);
    ring.insert(ring.end(), upper.begin(), upper.end());
    ring.push_back(Q);
    ring.insert(ring.end(), lower.begin(), lower.end());

    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent) continue;
            if (segments_cross(ring[i], ring[(i + 1) % n], ring[j], ring[(j + 1) % n]))
                throw std::logic_error("assemble_polygon: self-intersection");
        }
    return ring;
}

PolygonClass classify_polygon(const std::vector<QuadPoint>& ordered) {
    const std::size_t n = ordered.size();
    if (n < 3) throw std::domain_error("classify_polygon: need at least 3 vertices");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent) continue;
            if (segments_cross(ordered[i], ordered[(i + 1) % n], ordered[j],
                               ordered[(j + 1) % n]))
                throw std::domain_error("classify_polygon: non-simple polygon");
        }
    int ref = 0;
    for (std::size_t i = 0; i < n; ++i) {
        int o = orientation(ordered[i], ordered[(i + 1) % n], ordered[(i + 2) % n]);
        if (o == 0)
            throw std::domain_error("classify_polygon: degenerate vertex");
        if (ref == 0) ref = o;
        else if (o != ref) return PolygonClass::concave;
    }
    return PolygonClass::convex;
}

namespace {

bool full_convex_position(const std::vector<std::size_t>& S,
                          const std::vector<QuadPoint>& pts,
                          const QuadPoint& P, const QuadPoint& Q) {
    std::vector<QuadPoint> full{P, Q};
    for (std::size_t v : S) full.push_back(pts[v]);
    return convex_position(full);
}

// All locally-maximal convex-position subsets of S, found by branching on
// the apex participants of each point-in-triangle violation. P and Q are
// never removable.
void shrink_to_convex(const std::vector<std::size_t>& S,
                      const std::vector<QuadPoint>& pts,
                      const QuadPoint& P, const QuadPoint& Q,
                      std::set<std::vector<std::size_t>>& seen,
                      std::set<std::vector<std::size_t>>& out) {
    if (S.empty()) return;
    if (!seen.insert(S).second) return;

    std::vector<QuadPoint> full{P, Q};
    for (std::size_t v : S) full.push_back(pts[v]);
    const std::size_t n = full.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t l = j + 1; l < n; ++l)
                for (std::size_t m = 0; m < n; ++m) {
                    if (m == i || m == j || m == l) continue;
                    if (!point_in_triangle(full[m], full[i], full[j], full[l])) continue;
                    for (std::size_t drop : {i, j, l, m}) {
                        if (drop < 2) continue;  // baseline endpoints stay
                        std::vector<std::size_t> next;
                        next.reserve(S.size() - 1);
                        for (std::size_t t = 0; t < S.size(); ++t)
                            if (t != drop - 2) next.push_back(S[t]);
                        shrink_to_convex(next, pts, P, Q, seen, out);
                    }
                    return;
                }
    out.insert(S);
}

std::vector<std::vector<std::size_t>> max_size_sets(
    const std::vector<std::vector<std::size_t>>& pool) {
    std::size_t best = 0;
    for (const auto& s : pool) best = std::max(best, s.size());
    std::vector<std::vector<std::size_t>> chosen;
    for (const auto& s : pool)
        if (!s.empty() && s.size() == best) chosen.push_back(s);
    sort_sets_canonically(chosen);
    return chosen;
}

Witness build_witness(const SearchConfig& cfg,
                      const std::vector<ApexCandidate>& verts,
                      const std::vector<std::size_t>& s) {
    Witness w;
    w.apexes.reserve(s.size());
    for (std::size_t v : s) w.apexes.push_back(verts[v]);
    std::sort(w.apexes.begin(), w.apexes.end(),
              [](const ApexCandidate& u, const ApexCandidate& v) {
                  if (u.x != v.x) return u.x < v.x;
                  if (u.sign != v.sign) return u.sign > v.sign;  // + first
                  if (u.a != v.a) return u.a < v.a;
                  return u.b < v.b;
              });

    QuadPoint P = baseline_p(), Q = baseline_q(cfg.k);
    w.set.points = {P, Q};
    for (const auto& c : w.apexes) w.set.points.push_back(apex_point(c));
    const std::size_t n = w.set.points.size();

    w.set.distance_matrix.assign(n, std::vector<Int>(n, Int(0)));
    auto put = [&](std::size_t i, std::size_t j, const Int& d) {
        w.set.distance_matrix[i][j] = w.set.distance_matrix[j][i] = d;
    };
    put(0, 1, cfg.k);
    for (std::size_t i = 0; i < w.apexes.size(); ++i) {
        put(0, i + 2, w.apexes[i].a);
        put(1, i + 2, w.apexes[i].b);
        for (std::size_t j = i + 1; j < w.apexes.size(); ++j) {
            auto d = integer_distance(w.set.points[i + 2], w.set.points[j + 2]);
            if (!d) throw std::logic_error("build_witness: non-integer apex pair");
            put(i + 2, j + 2, *d);
        }
    }
    std::string why;
    if (!verify_certificate(w.set, &why))
        throw std::logic_error("build_witness: certificate failed: " + why);

    w.D = w.apexes.empty() ? Int(1) : w.apexes.front().D;
    w.convex =
        classify_polygon(assemble_polygon(w.set.points, P, Q)) == PolygonClass::convex;

    w.no_interior_vertex = true;
    for (std::size_t i = 0; i < n && w.no_interior_vertex; ++i)
        for (std::size_t j = i + 1; j < n && w.no_interior_vertex; ++j)
            for (std::size_t l = j + 1; l < n && w.no_interior_vertex; ++l)
                for (std::size_t m = 0; m < n; ++m) {
                    if (m == i || m == j || m == l) continue;
                    if (point_in_triangle(w.set.points[m], w.set.points[i],
                                          w.set.points[j], w.set.points[l])) {
                        w.no_interior_vertex = false;
                        break;
                    }
                }
    return w;
}

SearchReport finalize_report(const SearchConfig& cfg,
                             const std::vector<ApexCandidate>& verts,
                             std::size_t edge_count,
                             const std::vector<std::vector<std::size_t>>& chosen) {
    SearchReport rep;
    rep.k = cfg.k;
    rep.M = cfg.M;
    rep.mode = cfg.mode;
    rep.target_n = cfg.target_n;
    rep.completeness_scope = kScopeSentence;
    rep.apex_count = verts.size();
    rep.edge_count = edge_count;
    rep.bound_4k = 4 * cfg.k;

    std::size_t best = 0;
    for (const auto& s : chosen) best = std::max(best, s.size());
    rep.max_n_found = 2 + best;
    rep.exceeded = Int(rep.max_n_found) > rep.bound_4k;

    for (const auto& s : chosen) rep.witnesses.push_back(build_witness(cfg, verts, s));
    std::vector<std::pair<std::string, std::size_t>> keys;
    keys.reserve(rep.witnesses.size());
    for (std::size_t i = 0; i < rep.witnesses.size(); ++i)
        keys.emplace_back(to_json(rep.witnesses[i]).dump(), i);
    std::sort(keys.begin(), keys.end());
    std::vector<Witness> ordered;
    ordered.reserve(rep.witnesses.size());
    for (const auto& [_, i] : keys) ordered.push_back(std::move(rep.witnesses[i]));
    rep.witnesses = std::move(ordered);

    if (rep.target_n && rep.max_n_found < *rep.target_n) rep.witnesses.clear();
    return rep;
}

}  // namespace

SearchReport search(const SearchConfig& cfg, unsigned threads) {
    CompatibilityGraph g = build_graph(cfg, threads);
    auto legal = find_max_cliques(g, 1);

    std::vector<QuadPoint> pts;
    pts.reserve(g.vertices.size());
    for (const auto& v : g.vertices) pts.push_back(apex_point(v));
    QuadPoint P = baseline_p(), Q = baseline_q(cfg.k);

    std::vector<std::vector<std::size_t>> pool;
    switch (cfg.mode) {
        case SearchMode::sets:
            pool = legal;
            break;
        case SearchMode::concave_polygons:
            for (const auto& s : legal)
                if (!full_convex_position(s, pts, P, Q)) pool.push_back(s);
            break;
        case SearchMode::convex_polygons: {
            std::set<std::vector<std::size_t>> seen, out;
            for (const auto& s : legal) shrink_to_convex(s, pts, P, Q, seen, out);
            pool.assign(out.begin(), out.end());
            break;
        }
    }
    return finalize_report(cfg, g.vertices, g.edges.size(), max_size_sets(pool));
}

namespace {

// Rational-only pair admissibility for the oracle: integer mutual distance
// via the squared cross term, baseline collinearity via squared slopes.
// Never consults radicand classes.
std::optional<Int> oracle_pair_distance(const ApexCandidate& u, const ApexCandidate& v) {
    Rational dx = u.x - v.x;
    auto cross_abs = rational_sqrt(u.s * v.s);  // |y_u * y_v| if rational
    if (!cross_abs) return std::nullopt;
    Rational ycross = (u.sign == v.sign) ? *cross_abs : -*cross_abs;
    Rational d2 = dx * dx + u.s + v.s - 2 * ycross;
    auto root = rational_sqrt(d2);
    if (!root || den(*root) != 1) return std::nullopt;
    Int d = num(*root);
    if (d < 1) return std::nullopt;
    return d;
}

bool oracle_collinear_with(const ApexCandidate& u, const ApexCandidate& v,
                           const Rational& px) {
    // (x_u - px) * y_v == (x_v - px) * y_u, tested as equal signs plus equal
    // squares (|y_i| = sqrt(s_i) > 0).
    Rational xu = u.x - px, xv = v.x - px;
    int ls = sign_of(xu) * v.sign;
    int rs = sign_of(xv) * u.sign;
    if (ls != rs) return false;
    return xu * xu * v.s == xv * xv * u.s;
}

bool oracle_collinear3(const ApexCandidate& u, const ApexCandidate& v,
                       const ApexCandidate& w) {
    // cross(v-u, w-u) expands to C*y_u + B*y_v + A*y_w with the rational
    // coefficients below; zero iff C*y_u + B*y_v == -A*y_w, tested by sign
    // plus square. Requires sqrt(s_u*s_v) rational, which holds whenever the
    // pair already passed the integer-distance check.
    Rational A = v.x - u.x;
    Rational B = u.x - w.x;
    Rational C = w.x - v.x;

    int t1 = sign_of(C) * u.sign;  // sign of C*y_u
    int t2 = sign_of(B) * v.sign;  // sign of B*y_v
    int lhs_sign;
    if (t1 == 0) lhs_sign = t2;
    else if (t2 == 0) lhs_sign = t1;
    else if (t1 == t2) lhs_sign = t1;
    else {
        Rational m1 = C * C * u.s, m2 = B * B * v.s;
        lhs_sign = m1 == m2 ? 0 : (m1 > m2 ? t1 : t2);
    }
    int rhs_sign = -sign_of(A) * w.sign;
    if (lhs_sign != rhs_sign) return false;

    auto cross_uv = rational_sqrt(u.s * v.s);
    if (!cross_uv)
        throw std::logic_error("oracle_collinear3: pair without rational cross term");
    Rational lhs_sq =
        C * C * u.s + B * B * v.s + 2 * C * B * (u.sign * v.sign) * (*cross_uv);
    Rational rhs_sq = A * A * w.s;
    return lhs_sq == rhs_sq;
}

}  // namespace

SearchReport brute_force_oracle(const SearchConfig& cfg) {
    if (cfg.M > 12)
        throw std::domain_error("brute_force_oracle: frame guard requires M <= 12");
    auto verts = enumerate_apexes(cfg);
    const std::size_t n = verts.size();

    std::vector<std::vector<char>> ok(n, std::vector<char>(n, 0));
    std::size_t edge_count = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            bool good = oracle_pair_distance(verts[i], verts[j]).has_value() &&
                        !oracle_collinear_with(verts[i], verts[j], Rational(0)) &&
                        !oracle_collinear_with(verts[i], verts[j], Rational(cfg.k));
            ok[i][j] = ok[j][i] = good ? 1 : 0;
            if (good) ++edge_count;
        }

    std::vector<std::vector<std::size_t>> all_legal;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> dfs = [&](std::size_t start) {
        for (std::size_t j = start; j < n; ++j) {
            bool good = true;
            for (std::size_t m : cur)
                if (!ok[m][j]) {
                    good = false;
                    break;
                }
            if (good)
                for (std::size_t p = 0; p < cur.size() && good; ++p)
                    for (std::size_t q = p + 1; q < cur.size() && good; ++q)
                        if (oracle_collinear3(verts[cur[p]], verts[cur[q]], verts[j]))
                            good = false;
            if (!good) continue;
            cur.push_back(j);
            all_legal.push_back(cur);
            dfs(j + 1);
            cur.pop_back();
        }
    };
    dfs(0);

    std::vector<QuadPoint> pts;
    pts.reserve(n);
    for (const auto& v : verts) pts.push_back(apex_point(v));
    QuadPoint P = baseline_p(), Q = baseline_q(cfg.k);

    std::vector<std::vector<std::size_t>> pool;
    for (const auto& s : all_legal) {
        switch (cfg.mode) {
            case SearchMode::sets:
                pool.push_back(s);
                break;
            case SearchMode::convex_polygons:
                if (full_convex_position(s, pts, P, Q)) pool.push_back(s);
                break;
            case SearchMode::concave_polygons:
                if (!full_convex_position(s, pts, P, Q)) pool.push_back(s);
                break;
        }
    }
    return finalize_report(cfg, verts, edge_count, max_size_sets(pool));
}

}  // namespace diogon
