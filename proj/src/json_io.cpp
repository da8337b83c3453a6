#include "json_io.hpp"

namespace qch {

namespace {

Int json_int(const Json& v, const char* where) {
    if (v.is_number_integer()) return Int(static_cast<long>(v.get<long long>()));
    if (v.is_string()) {
        try {
            return Int(v.get<std::string>());
        } catch (const std::invalid_argument&) {
        }
    }
    throw input_error(std::string(where) + ": expected an integer");
}

RingElement parse_entry(const RingSpec& ring, const Json& v) {
    if (ring.degree() == 1) {
        if (v.is_array()) throw input_error("entry: pair syntax is only valid over quadratic rings");
        return RingElement::integer(ring, json_int(v, "entry"));
    }
    if (v.is_array()) {
        if (v.size() != 2) throw input_error("entry: expected [a, b]");
        return RingElement(ring, json_int(v[0], "entry"), json_int(v[1], "entry"));
    }
    return RingElement::integer(ring, json_int(v, "entry"));
}

Json coord_json(const Int& v) {
    if (v.fits_slong_p()) return Json(v.get_si());
    return Json(v.get_str());  // the parser accepts decimal strings
}

Json entry_json(const RingElement& x) {
    if (x.ring().degree() == 1) return coord_json(x.a());
    return Json::array({coord_json(x.a()), coord_json(x.b())});
}

RingSpec parse_ring(const Json& v) {
    if (!v.is_object() || !v.contains("type")) throw input_error("ring: expected an object with a type");
    std::string type = v.at("type").get<std::string>();
    if (type == "Z" || type == "integers") return RingSpec::integers();
    if (type == "quadratic") {
        if (!v.contains("d")) throw input_error("ring: quadratic ring needs d");
        return RingSpec::quadratic(v.at("d").get<long>());
    }
    throw input_error("ring: unknown type '" + type + "'");
}

}  // namespace

Arrangement parse_arrangement(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& err) {
        throw input_error(std::string("arrangement file: ") + err.what());
    }
    if (!doc.is_object()) throw input_error("arrangement file: expected a JSON object");
    RingSpec ring = doc.contains("ring") ? parse_ring(doc.at("ring")) : RingSpec::integers();
    if (!doc.contains("vectors") || !doc.at("vectors").is_array())
        throw input_error("arrangement file: missing vectors list");
    const Json& vectors = doc.at("vectors");
    int rank = -1;
    if (doc.contains("rank")) rank = doc.at("rank").get<int>();
    std::vector<std::vector<RingElement>> columns;
    for (const Json& col : vectors) {
        if (!col.is_array()) throw input_error("arrangement file: each vector must be a list");
        std::vector<RingElement> column;
        for (const Json& entry : col) column.push_back(parse_entry(ring, entry));
        if (rank < 0) rank = static_cast<int>(column.size());
        columns.push_back(std::move(column));
    }
    if (rank < 0) throw input_error("arrangement file: empty vectors list needs an explicit rank");
    std::string name = doc.contains("name") ? doc.at("name").get<std::string>() : "";
    return Arrangement(ring, rank, std::move(columns), name);
}

Json arrangement_json(const Arrangement& a) {
    Json doc;
    if (!a.name().empty()) doc["name"] = a.name();
    doc["ring"] = ring_json(a.ring());
    doc["rank"] = a.space_rank();
    Json vectors = Json::array();
    for (int c = 0; c < a.size(); ++c) {
        Json col = Json::array();
        for (int i = 0; i < a.space_rank(); ++i) col.push_back(entry_json(a.column(c)[i]));
        vectors.push_back(std::move(col));
    }
    doc["vectors"] = std::move(vectors);
    return doc;
}

Ideal parse_ideal_spec(const RingSpec& ring, const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& err) {
        throw input_error(std::string("ideal spec: ") + err.what());
    }
    std::vector<RingElement> gens;
    if (doc.is_array()) {
        for (const Json& g : doc) gens.push_back(parse_entry(ring, g));
    } else {
        gens.push_back(parse_entry(ring, doc));
    }
    return Ideal::from_generators(ring, gens);
}

Json ring_json(const RingSpec& ring) {
    Json out;
    if (ring.kind == RingSpec::Kind::integers) {
        out["type"] = "Z";
    } else {
        out["type"] = "quadratic";
        out["d"] = ring.d;
    }
    return out;
}

Json ideal_json(const Ideal& a) {
    Json out;
    out["text"] = a.str();
    out["norm"] = a.norm().get_str();
    Json basis = Json::array();
    for (const RingElement& b : a.basis_elements()) basis.push_back(entry_json(b));
    out["basis"] = std::move(basis);
    return out;
}

Json unipoly_json(const UniPoly& p, const std::string& var) {
    Json out;
    out["text"] = p.str(var);
    Json coeffs = Json::array();
    for (int i = p.degree(); i >= 0; --i)
        if (p.coeff(i) != 0) coeffs.push_back(Json::array({i, 0, p.coeff(i).get_str()}));
    out["coefficients"] = std::move(coeffs);
    return out;
}

Json bipoly_json(const BiPoly& p, const std::string& var1, const std::string& var2) {
    Json out;
    out["text"] = p.str(var1, var2);
    Json coeffs = Json::array();
    for (const auto& [d1, d2, c] : p.ordered_terms())
        coeffs.push_back(Json::array({d1, d2, c.get_str()}));
    out["coefficients"] = std::move(coeffs);
    return out;
}

}  // namespace qch
