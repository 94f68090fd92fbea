#include "cjs/io.hpp"

#include <algorithm>

#include "cjs/clans.hpp"

namespace cjs {

namespace {

std::vector<std::string> string_list(const Json& j, const std::string& field) {
    if (!j.is_array()) throw StructureError("field '" + field + "' must be an array of strings");
    std::vector<std::string> out;
    for (const Json& e : j) {
        if (!e.is_string())
            throw StructureError("field '" + field + "' must be an array of strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

}  // namespace

Json structure_to_json(const FiniteJoinStructure& s) {
    Json j;
    j["elements"] = s.names();
    j["zero"] = s.name(s.zero());
    j["one"] = s.name(s.one());
    Json join = Json::array();
    for (int a = 0; a < s.size(); ++a)
        for (int b = a + 1; b < s.size(); ++b)
            join.push_back({s.name(a), s.name(b), s.name(s.join(a, b))});
    j["join"] = std::move(join);
    Json contact = Json::array();
    for (int a = 0; a < s.size(); ++a)
        for (int b = a; b < s.size(); ++b)
            if (s.contact(a, b)) contact.push_back({s.name(a), s.name(b)});
    j["contact"] = std::move(contact);
    return j;
}

StructureDescription description_from_json(const Json& j) {
    if (!j.is_object()) throw StructureError("structure document must be a JSON object");
    for (const char* field : {"elements", "zero", "one", "join", "contact"})
        if (!j.contains(field)) throw StructureError(std::string("missing field '") + field + "'");
    StructureDescription d;
    d.elements = string_list(j["elements"], "elements");
    if (!j["zero"].is_string()) throw StructureError("field 'zero' must be a string");
    if (!j["one"].is_string()) throw StructureError("field 'one' must be a string");
    d.zero = j["zero"].get<std::string>();
    d.one = j["one"].get<std::string>();
    if (!j["join"].is_array()) throw StructureError("field 'join' must be an array of triples");
    for (const Json& e : j["join"]) {
        if (!e.is_array() || e.size() != 3 || !e[0].is_string() || !e[1].is_string() ||
            !e[2].is_string())
            throw StructureError("field 'join' entries must be [a, b, result] string triples");
        d.join.push_back({e[0].get<std::string>(), e[1].get<std::string>(),
                          e[2].get<std::string>()});
    }
    if (!j["contact"].is_array())
        throw StructureError("field 'contact' must be an array of pairs");
    for (const Json& e : j["contact"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            throw StructureError("field 'contact' entries must be [a, b] string pairs");
        d.contact.push_back({e[0].get<std::string>(), e[1].get<std::string>()});
    }
    return d;
}

FiniteJoinStructure structure_from_json(const Json& j) {
    return FiniteJoinStructure::validate(description_from_json(j));
}

FiniteTopology topology_from_json(const Json& j) {
    if (!j.is_object()) throw StructureError("topology document must be a JSON object");
    for (const char* field : {"points", "opens"})
        if (!j.contains(field)) throw StructureError(std::string("missing field '") + field + "'");
    std::vector<std::string> points = string_list(j["points"], "points");
    if (points.size() > 16) throw StructureError("at most 16 points supported");
    if (!j["opens"].is_array())
        throw StructureError("field 'opens' must be an array of point lists");
    std::vector<Mask> opens;
    for (const Json& open : j["opens"]) {
        const std::vector<std::string> members = string_list(open, "opens");
        Mask m = 0;
        for (const std::string& p : members) {
            const auto it = std::find(points.begin(), points.end(), p);
            if (it == points.end()) throw StructureError("unknown point '" + p + "' in opens");
            m |= Mask{1} << (it - points.begin());
        }
        opens.push_back(m);
    }
    return FiniteTopology::validate(std::move(points), std::move(opens));
}

Json topology_to_json(const FiniteTopology& t) {
    Json j;
    j["points"] = t.points;
    Json opens = Json::array();
    for (Mask m : t.opens) {
        Json open = Json::array();
        for (size_t i = 0; i < t.points.size(); ++i)
            if (m >> i & 1) open.push_back(t.points[i]);
        opens.push_back(std::move(open));
    }
    j["opens"] = std::move(opens);
    return j;
}

Json embedding_to_json(const FiniteJoinStructure& s, const Embedding& e) {
    Json j;
    Json points = Json::array();
    for (Mask p : e.points) {
        Json members = Json::array();
        for (int el : mask_elements(p)) members.push_back(s.name(el));
        points.push_back(std::move(members));
    }
    j["points"] = std::move(points);
    if (e.target == TargetKind::Relational) {
        Json rel = Json::array();
        for (size_t a = 0; a < e.points.size(); ++a)
            for (size_t b = a; b < e.points.size(); ++b)
                if (e.relation[a][b]) rel.push_back({a, b});
        j["relation"] = std::move(rel);
    }
    Json map = Json::object();
    for (int el = 0; el < s.size(); ++el) map[s.name(el)] = e.image[el];
    j["map"] = std::move(map);
    return j;
}

Json valuation_to_json(const FiniteJoinStructure& s, const Valuation& v) {
    Json j = Json::object();
    for (const auto& [var, el] : v) j[var] = s.name(el);
    return j;
}

Json masks_to_json(const FiniteJoinStructure& s, const std::vector<Mask>& masks) {
    Json out = Json::array();
    for (Mask m : masks) {
        Json members = Json::array();
        for (int el : mask_elements(m)) members.push_back(s.name(el));
        out.push_back(std::move(members));
    }
    return out;
}

}  // namespace cjs
