#include "cased/io.h"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace cased {

using Json = nlohmann::ordered_json;

namespace {

Rational coordinate(const Json& j, const std::string& where) {
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(j.get<long long>());
    if (j.is_number())
        throw InputError(where + ": write non-integer coordinates as decimal strings "
                                 "(e.g. \"0.1\") so they stay exact");
    throw InputError(where + ": expected a number or numeric string");
}

int integer_field(const Json& j, const char* key, const std::string& where) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw InputError(where + "." + key + ": expected an integer");
    return j[key].get<int>();
}

} // namespace

Drawing parse_drawing(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed document: ") + e.what());
    }
    if (!doc.is_object())
        throw InputError("document root must be an object");

    Drawing d;
    if (doc.contains("casing_width"))
        d.casing_width = coordinate(doc["casing_width"], "casing_width");
    if (!doc.contains("vertices") || !doc["vertices"].is_array())
        throw InputError("vertices: expected an array");
    if (!doc.contains("edges") || !doc["edges"].is_array())
        throw InputError("edges: expected an array");

    size_t i = 0;
    for (const auto& jv : doc["vertices"]) {
        std::string where = "vertices[" + std::to_string(i++) + "]";
        if (!jv.is_object())
            throw InputError(where + ": expected an object");
        DrawingVertex v;
        v.id = integer_field(jv, "id", where);
        v.pos.x = coordinate(jv.contains("x") ? jv["x"] : Json(), where + ".x");
        v.pos.y = coordinate(jv.contains("y") ? jv["y"] : Json(), where + ".y");
        d.vertices.push_back(std::move(v));
    }
    i = 0;
    for (const auto& je : doc["edges"]) {
        std::string where = "edges[" + std::to_string(i++) + "]";
        if (!je.is_object())
            throw InputError(where + ": expected an object");
        DrawingEdge e;
        e.id = integer_field(je, "id", where);
        e.u = integer_field(je, "u", where);
        e.v = integer_field(je, "v", where);
        d.edges.push_back(e);
    }
    d.normalize();
    return d;
}

std::string serialize_drawing(const Drawing& d) {
    Json doc;
    doc["casing_width"] = format_exact(d.casing_width);
    doc["vertices"] = Json::array();
    for (const auto& v : d.vertices) {
        Json jv;
        jv["id"] = v.id;
        jv["x"] = format_exact(v.pos.x);
        jv["y"] = format_exact(v.pos.y);
        doc["vertices"].push_back(std::move(jv));
    }
    doc["edges"] = Json::array();
    for (const auto& e : d.edges) {
        Json je;
        je["id"] = e.id;
        je["u"] = e.u;
        je["v"] = e.v;
        doc["edges"].push_back(std::move(je));
    }
    return doc.dump(2) + "\n";
}

Drawing load_drawing(const std::string& path) { return parse_drawing(load_text(path)); }

std::string load_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void save_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw InputError("cannot write '" + path + "'");
    out << text;
}

namespace {

Json metrics_json(const Arrangement& arr, const ObjectiveReport& rep) {
    Json m;
    m["total_switches"] = rep.total_switches;
    m["max_switches"] = rep.max_switches;
    m["max_tunnels"] = rep.max_tunnels;
    m["max_tunnel_length"] = {{"exact", rep.max_tunnel_length.str()},
                              {"approx", format_approx(rep.max_tunnel_length.approx())}};
    if (rep.min_tunnel_distance_sq) {
        m["min_tunnel_distance"] = {
            {"squared", format_exact(*rep.min_tunnel_distance_sq)},
            {"approx", format_approx(std::sqrt(to_double(*rep.min_tunnel_distance_sq)))}};
    } else {
        m["min_tunnel_distance"] = "unbounded";
    }
    if (rep.odd_face_count)
        m["odd_face_count"] = *rep.odd_face_count;
    if (rep.switch_lower_bound)
        m["switch_lower_bound"] = *rep.switch_lower_bound;
    m["per_edge"] = Json::array();
    for (size_t e = 0; e < rep.per_edge.size(); ++e) {
        const EdgeMetrics& em = rep.per_edge[e];
        Json je;
        je["edge"] = arr.drawing.edges[e].id;
        je["switches"] = em.switches;
        je["tunnels"] = em.tunnels;
        je["bridges"] = em.bridges;
        je["tunnel_length"] = format_approx(em.tunnel_length_total.approx());
        if (em.min_tunnel_distance_sq)
            je["min_tunnel_distance_squared"] = format_exact(*em.min_tunnel_distance_sq);
        m["per_edge"].push_back(std::move(je));
    }
    return m;
}

} // namespace

std::string serialize_casing(const Arrangement& arr, const Casing& c,
                             const ObjectiveReport* report, const CasingProvenance& provenance) {
    if (c.a_on_top.size() != arr.crossing_count())
        throw Error("casing-mismatch");
    Json doc;
    doc["crossings"] = Json::array();
    for (const auto& cr : arr.crossings) {
        Json entry;
        entry["crossing"] = {{"edge_a", arr.drawing.edges[cr.edge_a].id},
                             {"edge_b", arr.drawing.edges[cr.edge_b].id}};
        entry["top"] = arr.drawing.edges[c.top(cr)].id;
        doc["crossings"].push_back(std::move(entry));
    }
    if (report)
        doc["metrics"] = metrics_json(arr, *report);
    doc["provenance"] = {{"model", provenance.model},
                         {"objective", provenance.objective},
                         {"version", provenance.version}};
    return doc.dump(2) + "\n";
}

Casing parse_casing(const std::string& text, const Arrangement& arr) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed casing document: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("crossings") || !doc["crossings"].is_array())
        throw InputError("casing document needs a crossings array");

    auto edge_index_of = [&](int id, const std::string& where) -> EdgeIndex {
        for (size_t e = 0; e < arr.drawing.edges.size(); ++e)
            if (arr.drawing.edges[e].id == id)
                return static_cast<EdgeIndex>(e);
        throw InputError(where + ": unknown edge id " + std::to_string(id));
    };

    Casing c;
    c.a_on_top.assign(arr.crossing_count(), false);
    std::vector<bool> seen(arr.crossing_count(), false);
    size_t i = 0;
    for (const auto& entry : doc["crossings"]) {
        std::string where = "crossings[" + std::to_string(i++) + "]";
        if (!entry.is_object() || !entry.contains("crossing"))
            throw InputError(where + ": expected an object with a crossing field");
        int ida = integer_field(entry["crossing"], "edge_a", where + ".crossing");
        int idb = integer_field(entry["crossing"], "edge_b", where + ".crossing");
        int top = integer_field(entry, "top", where);
        EdgeIndex a = edge_index_of(ida, where);
        EdgeIndex b = edge_index_of(idb, where);
        const Crossing* cr = arr.crossing_between(a, b);
        if (!cr)
            throw InputError(where + ": edges " + std::to_string(ida) + " and " +
                             std::to_string(idb) + " do not cross");
        if (seen[cr->id])
            throw InputError(where + ": duplicate crossing record");
        seen[cr->id] = true;
        if (top == ida)
            c.a_on_top[cr->id] = a == cr->edge_a;
        else if (top == idb)
            c.a_on_top[cr->id] = b == cr->edge_a;
        else
            throw InputError(where + ": top must be one of the two edges");
    }
    for (size_t cid = 0; cid < seen.size(); ++cid)
        if (!seen[cid])
            throw InputError("casing document misses a record for the crossing of edges " +
                             std::to_string(arr.drawing.edges[arr.crossings[cid].edge_a].id) +
                             " and " +
                             std::to_string(arr.drawing.edges[arr.crossings[cid].edge_b].id));
    return c;
}

} // namespace cased
