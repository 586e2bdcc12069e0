#include "limbforge/json_io.hpp"

#include <cstdint>

#include "limbforge/error.hpp"

namespace limbforge {

Json graph_to_json(const WeightedGraph& g) {
    Json vs = Json::array();
    for (const auto& v : g.vertices()) vs.push_back({{"id", v.id}, {"weight", v.weight}});
    Json es = Json::array();
    for (const auto& [a, b] : g.edges()) es.push_back(Json::array({a, b}));
    Json out{{"vertices", std::move(vs)}, {"edges", std::move(es)}};
    if (g.root()) out["root"] = *g.root();
    return out;
}

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidArgument, "graph JSON: " + what); }

int as_int(const Json& j, const std::string& what) {
    if (!j.is_number_integer()) bad(what + " must be an integer");
    const auto v = j.get<long long>();
    if (v < INT32_MIN || v > INT32_MAX) bad(what + " is out of range");
    return static_cast<int>(v);
}

}  // namespace

WeightedGraph graph_from_json(const Json& j) {
    if (!j.is_object()) bad("expected an object");
    if (!j.contains("vertices") || !j["vertices"].is_array()) bad("missing \"vertices\" array");
    std::vector<Vertex> vs;
    for (const auto& v : j["vertices"]) {
        if (!v.is_object() || !v.contains("id")) bad("each vertex needs an \"id\"");
        Vertex x{as_int(v["id"], "vertex id"), 1};
        if (v.contains("weight")) x.weight = as_int(v["weight"], "vertex weight");
        vs.push_back(x);
    }
    std::vector<Edge> es;
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) bad("\"edges\" must be an array");
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2) bad("each edge must be a pair of ids");
            es.emplace_back(as_int(e[0], "edge endpoint"), as_int(e[1], "edge endpoint"));
        }
    }
    std::optional<VertexId> root;
    if (j.contains("root") && !j["root"].is_null()) root = as_int(j["root"], "root");
    return WeightedGraph(std::move(vs), std::move(es), root);
}

WeightedGraph graph_from_text(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorCode::InvalidArgument, std::string("malformed JSON: ") + e.what());
    }
    return graph_from_json(j);
}

Json tree_to_json(const CanonicalTree& t) { return graph_to_json(to_graph(t, 0)); }

Json big_to_json(const BigInt& v) { return v.str(); }

Json poly_to_json(const IntPolynomial& p) {
    Json cs = Json::array();
    for (const auto& c : p.coefficients()) cs.push_back(c.str());
    return {{"degree", p.degree()}, {"coefficients", std::move(cs)}};
}

std::string rational_to_string(const BigRational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

Json series_coefficients_json(const RationalSeries& s) {
    Json cs = Json::array();
    for (const auto& c : s.coefficients()) cs.push_back(rational_to_string(c));
    return cs;
}

Json coproduct_to_json(const std::vector<ForestTerm>& terms) {
    Json out = Json::array();
    for (const auto& term : terms) {
        Json left = Json::array();
        for (const auto& t : term.left) left.push_back(tree_to_json(t));
        out.push_back({{"left", std::move(left)},
                       {"right", term.right ? tree_to_json(*term.right) : Json(nullptr)},
                       {"coeff", term.coefficient.str()}});
    }
    return out;
}

Json census_row_to_json(const CensusRow& row) {
    Json out{{"n", row.n}, {"property", to_string(row.property)}};
    if (row.property == CensusProperty::has_k_cospectral_vertices) out["k"] = row.k;
    out["total"] = row.total.str();
    out["hits"] = row.hits.str();
    out["fraction"] = rational_to_string(row.fraction);
    return out;
}

}  // namespace limbforge
