#pragma once

// JSON encoding of graphs, verdicts, classification reports and sweep
// reports. Integers that fit in 64 bits are written as numbers, larger ones
// as decimal strings; decoding accepts both. Every document carries
// schema_version and kind at the top level.

#include "constructions.hpp"
#include "digraph.hpp"
#include "fano_criteria.hpp"
#include "lattice_polytope.hpp"
#include "oracle.hpp"

#include <nlohmann/json.hpp>

#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fanograph {

using Json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

// ---------------------------------------------------------------------------
// The reports the command line emits

/// Classification of one graph: both pipelines, their comparison and the
/// fingerprint.
struct GraphReport {
    std::string source;  // file path or family specifier
    Digraph graph;
    ClassificationReport geometric;
    GraphVerdict graph_verdict;
    std::optional<LatticeVector> witness_projected;  // Z^(d-1) coordinates
    Fingerprint fingerprint;
    std::optional<bool> predicted_smooth;  // from the family, when it states one
    std::vector<std::string> mismatches;

    bool agreement() const { return mismatches.empty(); }
    friend bool operator==(const GraphReport&, const GraphReport&) = default;
};

inline GraphReport make_graph_report(const Digraph& g, std::string source = {},
                                     std::optional<bool> predicted_smooth = std::nullopt) {
    GraphReport r;
    r.source = std::move(source);
    AgreementRecord rec = cross_validate(g);
    r.graph = g;
    r.geometric = rec.geometric;
    r.graph_verdict = rec.graph_verdict;
    r.mismatches = rec.mismatches;
    if (r.graph_verdict.smoothness && r.graph_verdict.smoothness->witness) {
        r.witness_projected = project_functional(r.graph_verdict.smoothness->witness->normal);
    }
    r.fingerprint = fingerprint(polytope_of(g));
    r.predicted_smooth = predicted_smooth;
    return r;
}

struct FacetEntry {
    LatticeVector normal;  // primitive, frame coordinates
    Integer offset = 0;
    std::vector<LatticeVector> vertices;  // ambient coordinates
    bool simplex = false;
    std::optional<Integer> determinant;  // simplex facets only

    friend bool operator==(const FacetEntry&, const FacetEntry&) = default;
};

struct FacetListing {
    std::string source;
    std::size_t dim = 0;
    std::vector<FacetEntry> facets;

    friend bool operator==(const FacetListing&, const FacetListing&) = default;
};

inline FacetListing make_facet_listing(const LatticePolytope& p, std::string source = {}) {
    FacetListing l;
    l.source = std::move(source);
    l.dim = p.dim();
    for (std::size_t f = 0; f < p.facets().size(); ++f) {
        FacetEntry e;
        e.normal = p.facets()[f].normal;
        e.offset = p.facets()[f].offset;
        for (std::size_t v : p.facet_vertices()[f]) e.vertices.push_back(p.vertices()[v]);
        e.simplex = e.vertices.size() == p.dim();
        if (e.simplex) e.determinant = facet_determinant(p, f);
        l.facets.push_back(std::move(e));
    }
    return l;
}

// ---------------------------------------------------------------------------
// Scalars

inline Json integer_to_json(const Integer& x) {
    if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max()) {
        return Json(static_cast<long long>(x));
    }
    return Json(x.str());
}

inline Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) return Integer(j.get<long long>());
    if (j.is_string()) return Integer(j.get<std::string>());
    throw std::invalid_argument("expected an integer");
}

inline Json vector_to_json(const LatticeVector& v) {
    Json a = Json::array();
    for (const Integer& x : v) a.push_back(integer_to_json(x));
    return a;
}

inline LatticeVector vector_from_json(const Json& j) {
    LatticeVector v;
    for (const Json& x : j) v.push_back(integer_from_json(x));
    return v;
}

namespace detail {

template <class T>
void optional_to_json(Json& j, const char* key, const std::optional<T>& v) {
    if (v) {
        j[key] = *v;
    } else {
        j[key] = nullptr;
    }
}

template <class T>
std::optional<T> optional_from_json(const Json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<T>();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// nlohmann hooks for the library types (found by argument-dependent lookup)

inline void to_json(Json& j, const Arrow& a) { j = Json::array({a.tail, a.head}); }
inline void from_json(const Json& j, Arrow& a) { a = {j.at(0).get<int>(), j.at(1).get<int>()}; }

inline void to_json(Json& j, const Digraph& g) {
    j = Json::object();
    j["vertices"] = g.vertex_count();
    j["arrows"] = g.arrows();
}
inline void from_json(const Json& j, Digraph& g) {
    g = Digraph::from_arrows(j.at("vertices").get<int>(), j.at("arrows").get<std::vector<Arrow>>());
}

inline void to_json(Json& j, const OrientedCycle& c) {
    std::string flags;
    for (Orientation o : c.orientations()) flags += o == Orientation::forward ? '+' : '-';
    j = Json::object();
    j["vertices"] = c.vertices();
    j["orientation"] = flags;
}
inline void from_json(const Json& j, OrientedCycle& c) {
    std::vector<Orientation> flags;
    for (char ch : j.at("orientation").get<std::string>()) {
        if (ch != '+' && ch != '-') throw std::invalid_argument("orientation flags are '+' or '-'");
        flags.push_back(ch == '+' ? Orientation::forward : Orientation::backward);
    }
    c = OrientedCycle(j.at("vertices").get<std::vector<Vertex>>(), std::move(flags));
}

inline void to_json(Json& j, const Hyperplane& h) {
    j = Json::object();
    j["normal"] = vector_to_json(h.normal);
    j["offset"] = integer_to_json(h.offset);
}
inline void from_json(const Json& j, Hyperplane& h) {
    h.normal = vector_from_json(j.at("normal"));
    h.offset = integer_from_json(j.at("offset"));
}

inline void to_json(Json& j, const ClassificationReport& r) {
    j = Json::object();
    j["dim"] = r.dim;
    j["ambient_dim"] = r.ambient_dim;
    j["full_dimensional"] = r.full_dimensional;
    j["fano"] = r.is_fano;
    j["terminal"] = r.is_terminal;
    j["gorenstein"] = r.is_gorenstein;
    j["simplicial"] = r.is_simplicial;
    j["smooth"] = r.is_smooth;
    j["vertices"] = r.vertex_count;
    j["facets"] = r.facet_count;
    j["boundary_lattice_points"] = r.boundary_lattice_point_count;
    j["interior_lattice_points"] = r.interior_lattice_point_count;
    detail::optional_to_json(j, "non_simplicial_facet", r.non_simplicial_facet_witness);
}
inline void from_json(const Json& j, ClassificationReport& r) {
    r.dim = j.at("dim").get<std::size_t>();
    r.ambient_dim = j.at("ambient_dim").get<std::size_t>();
    r.full_dimensional = j.at("full_dimensional").get<bool>();
    r.is_fano = j.at("fano").get<bool>();
    r.is_terminal = j.at("terminal").get<bool>();
    r.is_gorenstein = j.at("gorenstein").get<bool>();
    r.is_simplicial = j.at("simplicial").get<bool>();
    r.is_smooth = j.at("smooth").get<bool>();
    r.vertex_count = j.at("vertices").get<std::size_t>();
    r.facet_count = j.at("facets").get<std::size_t>();
    r.boundary_lattice_point_count = j.at("boundary_lattice_points").get<std::size_t>();
    r.interior_lattice_point_count = j.at("interior_lattice_points").get<std::size_t>();
    r.non_simplicial_facet_witness = detail::optional_from_json<std::size_t>(j, "non_simplicial_facet");
}

inline void to_json(Json& j, const SmoothnessVerdict& v) {
    j = Json::object();
    j["smooth"] = v.smooth;
    detail::optional_to_json(j, "obstruction", v.obstruction);
    detail::optional_to_json(j, "witness", v.witness);
}
inline void from_json(const Json& j, SmoothnessVerdict& v) {
    v.smooth = j.at("smooth").get<bool>();
    v.obstruction = detail::optional_from_json<OrientedCycle>(j, "obstruction");
    v.witness = detail::optional_from_json<Hyperplane>(j, "witness");
}

inline void to_json(Json& j, const GraphVerdict& v) {
    j = Json::object();
    j["spans_full_dimension"] = v.spans_full_dimension;
    j["every_arrow_in_directed_cycle"] = v.every_arrow_in_directed_cycle;
    detail::optional_to_json(j, "smoothness", v.smoothness);
}
inline void from_json(const Json& j, GraphVerdict& v) {
    v.spans_full_dimension = j.at("spans_full_dimension").get<bool>();
    v.every_arrow_in_directed_cycle = j.at("every_arrow_in_directed_cycle").get<bool>();
    v.smoothness = detail::optional_from_json<SmoothnessVerdict>(j, "smoothness");
}

inline void to_json(Json& j, const Fingerprint& f) {
    j = Json::object();
    j["dim"] = f.dim;
    j["vertices"] = f.vertex_count;
    j["facets"] = f.facet_count;
    j["boundary_lattice_points"] = f.boundary_lattice_point_count;
    j["normalized_volume"] = integer_to_json(f.normalized_volume);
    j["centrally_symmetric"] = f.centrally_symmetric;
    j["pseudo_symmetric"] = f.pseudo_symmetric;
}
inline void from_json(const Json& j, Fingerprint& f) {
    f.dim = j.at("dim").get<std::size_t>();
    f.vertex_count = j.at("vertices").get<std::size_t>();
    f.facet_count = j.at("facets").get<std::size_t>();
    f.boundary_lattice_point_count = j.at("boundary_lattice_points").get<std::size_t>();
    f.normalized_volume = integer_from_json(j.at("normalized_volume"));
    f.centrally_symmetric = j.at("centrally_symmetric").get<bool>();
    f.pseudo_symmetric = j.at("pseudo_symmetric").get<bool>();
}

inline void to_json(Json& j, const SymmetricCheck& s) {
    j = Json::object();
    j["simplicial"] = s.simplicial;
    j["smooth"] = s.smooth;
    j["no_even_cycle"] = s.no_even_cycle;
    j["blocks_edges_or_odd_cycles"] = s.blocks_edges_or_odd;
}
inline void from_json(const Json& j, SymmetricCheck& s) {
    s.simplicial = j.at("simplicial").get<bool>();
    s.smooth = j.at("smooth").get<bool>();
    s.no_even_cycle = j.at("no_even_cycle").get<bool>();
    s.blocks_edges_or_odd = j.at("blocks_edges_or_odd_cycles").get<bool>();
}

inline void to_json(Json& j, const AgreementRecord& r) {
    j = Json::object();
    j["graph"] = r.graph;
    j["graph_verdict"] = r.graph_verdict;
    j["geometric"] = r.geometric;
    detail::optional_to_json(j, "symmetric", r.symmetric);
    j["mismatches"] = r.mismatches;
}
inline void from_json(const Json& j, AgreementRecord& r) {
    r.graph = j.at("graph").get<Digraph>();
    r.graph_verdict = j.at("graph_verdict").get<GraphVerdict>();
    r.geometric = j.at("geometric").get<ClassificationReport>();
    r.symmetric = detail::optional_from_json<SymmetricCheck>(j, "symmetric");
    r.mismatches = j.at("mismatches").get<std::vector<std::string>>();
}

inline void to_json(Json& j, const SweepReport& r) {
    j = Json::object();
    j["max_vertices"] = r.max_vertices;
    j["scope"] = to_string(r.scope);
    j["chunk"] = Json::array({r.chunk_index, r.chunk_count});
    j["stride"] = r.stride;
    j["dedup_isomorphic"] = r.dedup_isomorphic;
    j["graphs_enumerated"] = r.graphs_enumerated;
    j["graphs_classified"] = r.graphs_classified;
    Json c = Json::object();
    c["smooth"] = r.smooth;
    c["simplicial_not_smooth"] = r.simplicial_not_smooth;
    c["non_simplicial"] = r.non_simplicial;
    c["not_fano"] = r.not_fano;
    c["not_full_dimensional"] = r.not_full_dimensional;
    j["counts"] = c;
    j["symmetric_checked"] = r.symmetric_checked;
    Json d = Json::array();
    for (const auto& x : r.discrepancies) {
        Json e = Json::object();
        e["index"] = x.index;
        e["record"] = x.record;
        d.push_back(std::move(e));
    }
    j["discrepancies"] = d;
}
inline void from_json(const Json& j, SweepReport& r) {
    r.max_vertices = j.at("max_vertices").get<int>();
    const auto scope = j.at("scope").get<std::string>();
    if (scope != "fano" && scope != "connected") throw std::invalid_argument("unknown sweep scope " + scope);
    r.scope = scope == "fano" ? SweepScope::fano : SweepScope::connected;
    r.chunk_index = j.at("chunk").at(0).get<std::uint64_t>();
    r.chunk_count = j.at("chunk").at(1).get<std::uint64_t>();
    r.stride = j.at("stride").get<std::uint64_t>();
    r.dedup_isomorphic = j.at("dedup_isomorphic").get<bool>();
    r.graphs_enumerated = j.at("graphs_enumerated").get<std::uint64_t>();
    r.graphs_classified = j.at("graphs_classified").get<std::uint64_t>();
    const Json& c = j.at("counts");
    r.smooth = c.at("smooth").get<std::uint64_t>();
    r.simplicial_not_smooth = c.at("simplicial_not_smooth").get<std::uint64_t>();
    r.non_simplicial = c.at("non_simplicial").get<std::uint64_t>();
    r.not_fano = c.at("not_fano").get<std::uint64_t>();
    r.not_full_dimensional = c.at("not_full_dimensional").get<std::uint64_t>();
    r.symmetric_checked = j.at("symmetric_checked").get<std::uint64_t>();
    r.discrepancies.clear();
    for (const Json& e : j.at("discrepancies")) {
        r.discrepancies.push_back({e.at("index").get<std::uint64_t>(), e.at("record").get<AgreementRecord>()});
    }
}

inline void to_json(Json& j, const GraphReport& r) {
    j = Json::object();
    j["source"] = r.source;
    j["graph"] = r.graph;
    j["geometric"] = r.geometric;
    j["graph_verdict"] = r.graph_verdict;
    if (r.witness_projected) {
        j["witness_projected"] = vector_to_json(*r.witness_projected);
    } else {
        j["witness_projected"] = nullptr;
    }
    j["fingerprint"] = r.fingerprint;
    detail::optional_to_json(j, "predicted_smooth", r.predicted_smooth);
    j["agreement"] = r.agreement();
    j["mismatches"] = r.mismatches;
}
inline void from_json(const Json& j, GraphReport& r) {
    r.source = j.at("source").get<std::string>();
    r.graph = j.at("graph").get<Digraph>();
    r.geometric = j.at("geometric").get<ClassificationReport>();
    r.graph_verdict = j.at("graph_verdict").get<GraphVerdict>();
    r.witness_projected.reset();
    if (j.contains("witness_projected") && !j.at("witness_projected").is_null()) {
        r.witness_projected = vector_from_json(j.at("witness_projected"));
    }
    r.fingerprint = j.at("fingerprint").get<Fingerprint>();
    r.predicted_smooth = detail::optional_from_json<bool>(j, "predicted_smooth");
    r.mismatches = j.at("mismatches").get<std::vector<std::string>>();
}

inline void to_json(Json& j, const FacetEntry& e) {
    j = Json::object();
    j["normal"] = vector_to_json(e.normal);
    j["offset"] = integer_to_json(e.offset);
    Json vs = Json::array();
    for (const auto& v : e.vertices) vs.push_back(vector_to_json(v));
    j["vertices"] = vs;
    j["simplex"] = e.simplex;
    if (e.determinant) {
        j["determinant"] = integer_to_json(*e.determinant);
    } else {
        j["determinant"] = nullptr;
    }
}
inline void from_json(const Json& j, FacetEntry& e) {
    e.normal = vector_from_json(j.at("normal"));
    e.offset = integer_from_json(j.at("offset"));
    e.vertices.clear();
    for (const Json& v : j.at("vertices")) e.vertices.push_back(vector_from_json(v));
    e.simplex = j.at("simplex").get<bool>();
    e.determinant.reset();
    if (!j.at("determinant").is_null()) e.determinant = integer_from_json(j.at("determinant"));
}

inline void to_json(Json& j, const FacetListing& l) {
    j = Json::object();
    j["source"] = l.source;
    j["dim"] = l.dim;
    j["facets"] = l.facets;
}
inline void from_json(const Json& j, FacetListing& l) {
    l.source = j.at("source").get<std::string>();
    l.dim = j.at("dim").get<std::size_t>();
    l.facets = j.at("facets").get<std::vector<FacetEntry>>();
}

// ---------------------------------------------------------------------------
// Documents

/// {"schema_version": 1, "kind": kind, <fields of body>}
template <class T>
Json make_document(const std::string& kind, const T& body) {
    Json doc = Json::object();
    doc["schema_version"] = schema_version;
    doc["kind"] = kind;
    Json b = body;
    for (auto it = b.begin(); it != b.end(); ++it) doc[it.key()] = it.value();
    return doc;
}

/// Checks schema_version and kind, then decodes the body.
template <class T>
T read_document(const Json& doc, const std::string& kind) {
    if (!doc.is_object() || doc.value("schema_version", -1) != schema_version) {
        throw std::invalid_argument("unsupported or missing schema_version");
    }
    if (doc.value("kind", std::string{}) != kind) throw std::invalid_argument("expected a '" + kind + "' document");
    Json body = doc;
    body.erase("schema_version");
    body.erase("kind");
    return body.get<T>();
}

}  // namespace fanograph
