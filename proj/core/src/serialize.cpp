#include "diogon/serialize.hpp"

#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace diogon {

namespace {

const Int kInt64Min{std::numeric_limits<std::int64_t>::min()};
const Int kUint64Max{std::numeric_limits<std::uint64_t>::max()};

}  // namespace

nlohmann::json int_to_json(const Int& v) {
    if (v < 0) {
        if (v >= kInt64Min) return v.convert_to<std::int64_t>();
        return v.str();
    }
    if (v <= kUint64Max) return v.convert_to<std::uint64_t>();
    return v.str();
}

Int int_from_json(const nlohmann::json& j) {
    if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("int_from_json: expected integer or decimal string");
}

nlohmann::json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const nlohmann::json& j) {
    if (!j.is_string())
        throw std::invalid_argument("rational_from_json: expected 'num/den' string");
    return rational_from_string(j.get<std::string>());
}

nlohmann::json to_json(const QuadScalar& s) {
    return nlohmann::json{{"rat", to_string(s.rat_part())},
                          {"surd", to_string(s.surd_coeff())},
                          {"D", int_to_json(s.radicand())}};
}

QuadScalar quadscalar_from_json(const nlohmann::json& j) {
    return QuadScalar(rational_from_string(j.at("rat").get<std::string>()),
                      rational_from_string(j.at("surd").get<std::string>()),
                      int_from_json(j.at("D")));
}

nlohmann::json to_json(const QuadPoint& p) {
    return nlohmann::json{{"x", to_json(p.x())}, {"y", to_json(p.y())}};
}

QuadPoint quadpoint_from_json(const nlohmann::json& j) {
    return QuadPoint(quadscalar_from_json(j.at("x")), quadscalar_from_json(j.at("y")));
}

namespace {

template <typename Entry, typename Fn>
nlohmann::json matrix_to_json(const std::vector<std::vector<Entry>>& m, Fn&& f) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : m) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& e : row) r.push_back(f(e));
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace

nlohmann::json to_json(const DiophantineSet& s) {
    nlohmann::json j;
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& p : s.points) pts.push_back(to_json(p));
    j["points"] = std::move(pts);
    j["distance_matrix"] =
        matrix_to_json(s.distance_matrix, [](const Int& d) { return int_to_json(d); });
    if (s.scale_note) j["scale_note"] = int_to_json(*s.scale_note);
    return j;
}

DiophantineSet set_from_json(const nlohmann::json& j) {
    DiophantineSet s;
    for (const auto& p : j.at("points")) s.points.push_back(quadpoint_from_json(p));
    for (const auto& row : j.at("distance_matrix")) {
        std::vector<Int> r;
        for (const auto& e : row) r.push_back(int_from_json(e));
        s.distance_matrix.push_back(std::move(r));
    }
    if (j.contains("scale_note")) s.scale_note = int_from_json(j.at("scale_note"));
    return s;
}

nlohmann::json to_json(const QuasiDiophantineSet& s) {
    nlohmann::json j;
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& p : s.points) pts.push_back(to_json(p));
    j["points"] = std::move(pts);
    j["distance_matrix"] =
        matrix_to_json(s.distance_matrix, [](const Rational& d) { return to_string(d); });
    return j;
}

nlohmann::json to_json(const PythagoreanAngle& a) {
    return nlohmann::json{
        {"p", int_to_json(a.p)}, {"q", int_to_json(a.q)}, {"r", int_to_json(a.r)}};
}

nlohmann::json to_json(const ApexCandidate& c) {
    return nlohmann::json{{"a", int_to_json(c.a)},
                          {"b", int_to_json(c.b)},
                          {"k", int_to_json(c.k)},
                          {"sign", c.sign > 0 ? "+" : "-"},
                          {"x", to_string(c.x)},
                          {"s", to_string(c.s)},
                          {"D", int_to_json(c.D)},
                          {"y_coeff", to_string(c.y_coeff)}};
}

ApexCandidate apex_from_json(const nlohmann::json& j) {
    std::string sg = j.at("sign").get<std::string>();
    if (sg != "+" && sg != "-")
        throw std::invalid_argument("apex_from_json: sign must be '+' or '-'");
    return make_apex_candidate(int_from_json(j.at("k")), int_from_json(j.at("a")),
                               int_from_json(j.at("b")), sg == "+" ? +1 : -1);
}

nlohmann::json to_json(const Witness& w) {
    nlohmann::json j = to_json(w.set);
    j["baseline"] = nlohmann::json::array({0, 1});
    j["D"] = int_to_json(w.D);
    nlohmann::json apexes = nlohmann::json::array();
    for (const auto& c : w.apexes) apexes.push_back(to_json(c));
    j["apexes"] = std::move(apexes);
    j["convex"] = w.convex;
    j["no_interior_vertex"] = w.no_interior_vertex;
    return j;
}

Witness witness_from_json(const nlohmann::json& j) {
    Witness w;
    w.set = set_from_json(j);
    w.D = int_from_json(j.at("D"));
    for (const auto& a : j.at("apexes")) w.apexes.push_back(apex_from_json(a));
    w.convex = j.at("convex").get<bool>();
    w.no_interior_vertex = j.at("no_interior_vertex").get<bool>();
    return w;
}

nlohmann::json to_json(const SearchReport& rep) {
    nlohmann::json j;
    j["k"] = int_to_json(rep.k);
    j["M"] = int_to_json(rep.M);
    j["mode"] = to_string(rep.mode);
    if (rep.target_n) j["target_n"] = *rep.target_n;
    j["completeness_scope"] = rep.completeness_scope;
    j["apex_count"] = rep.apex_count;
    j["edge_count"] = rep.edge_count;
    j["max_n_found"] = rep.max_n_found;
    j["bound_4k"] = int_to_json(rep.bound_4k);
    j["exceeded"] = rep.exceeded;
    nlohmann::json ws = nlohmann::json::array();
    for (const auto& w : rep.witnesses) ws.push_back(to_json(w));
    j["witnesses"] = std::move(ws);
    return j;
}

SearchReport report_from_json(const nlohmann::json& j) {
    SearchReport rep;
    rep.k = int_from_json(j.at("k"));
    rep.M = int_from_json(j.at("M"));
    auto mode = search_mode_from_string(j.at("mode").get<std::string>());
    if (!mode) throw std::invalid_argument("report_from_json: unknown mode");
    rep.mode = *mode;
    if (j.contains("target_n")) rep.target_n = j.at("target_n").get<std::size_t>();
    rep.completeness_scope = j.at("completeness_scope").get<std::string>();
    rep.apex_count = j.at("apex_count").get<std::size_t>();
    rep.edge_count = j.at("edge_count").get<std::size_t>();
    rep.max_n_found = j.at("max_n_found").get<std::size_t>();
    rep.bound_4k = int_from_json(j.at("bound_4k"));
    rep.exceeded = j.at("exceeded").get<bool>();
    for (const auto& w : j.at("witnesses")) rep.witnesses.push_back(witness_from_json(w));
    return rep;
}

namespace {

nlohmann::json span_to_json(const ClaimedSpan& s) {
    return nlohmann::json{{"lo", s.lo}, {"hi", s.hi}, {"open", s.open}};
}

}  // namespace

nlohmann::json to_json(const BoundReport& rep) {
    nlohmann::json j;
    j["k"] = int_to_json(rep.k);
    j["n0_bound"] = int_to_json(rep.n0);
    j["concave_side_bound"] = int_to_json(rep.concave_side);
    j["concave_diagonal_bound"] = int_to_json(rep.concave_diagonal);
    j["convex_halfplane_bound"] = int_to_json(rep.convex_halfplane);
    if (rep.claimed) {
        nlohmann::json c;
        c["k"] = int_to_json(rep.claimed->k);
        if (rep.claimed->any) c["any"] = span_to_json(*rep.claimed->any);
        if (rep.claimed->convex) c["convex"] = span_to_json(*rep.claimed->convex);
        if (rep.claimed->concave) c["concave"] = span_to_json(*rep.claimed->concave);
        c["note"] = rep.claimed->note;
        j["claimed_range"] = std::move(c);
    }
    if (rep.search_max_n) j["search_max_n"] = *rep.search_max_n;
    j["consistent"] = rep.consistent;
    return j;
}

std::string canonical_dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

void write_text_atomic(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path() && !path.parent_path().empty())
        std::filesystem::create_directories(path.parent_path());
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw std::runtime_error("write_text_atomic: cannot open " + tmp.string());
        os.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!os) throw std::runtime_error("write_text_atomic: short write to " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

std::string read_text(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("read_text: cannot open " + path.string());
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

std::string lemma1_csv(const std::vector<Lemma1Row>& rows) {
    std::ostringstream os;
    os << "a,b,k,m,cosC1,cosC2,cosA1,cosA2,holds\n";
    for (const auto& r : rows)
        os << r.a.str() << "," << r.b.str() << "," << r.k.str() << "," << r.m.str()
           << "," << to_string(r.cos_c1) << "," << to_string(r.cos_c2) << ","
           << to_string(r.cos_a1) << "," << to_string(r.cos_a2) << ","
           << (r.holds ? "true" : "false") << "\n";
    return os.str();
}

std::string task_csv(const std::vector<TaskRow>& rows) {
    std::ostringstream os;
    os << "a,b,c,cos_alpha,cos_bound,holds\n";
    for (const auto& r : rows)
        os << r.a.str() << "," << r.b.str() << "," << r.c.str() << ","
           << to_string(r.cos_alpha) << "," << to_string(r.cos_bound) << ","
           << (r.holds ? "true" : "false") << "\n";
    return os.str();
}

std::string witness_summary_csv(const SearchReport& rep) {
    std::ostringstream os;
    os << "index,n,D,convex,no_interior_vertex,apexes\n";
    for (std::size_t i = 0; i < rep.witnesses.size(); ++i) {
        const Witness& w = rep.witnesses[i];
        os << i << "," << w.set.points.size() << "," << w.D.str() << ","
           << (w.convex ? "true" : "false") << ","
           << (w.no_interior_vertex ? "true" : "false") << ",";
        for (std::size_t a = 0; a < w.apexes.size(); ++a) {
            if (a) os << ";";
            os << w.apexes[a].a.str() << ":" << w.apexes[a].b.str() << ":"
               << (w.apexes[a].sign > 0 ? "+" : "-");
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace diogon
