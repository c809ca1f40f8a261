#include <orbitcalc/io.hpp>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include <orbitcalc/errors.hpp>

namespace orbitcalc
{

using nlohmann::json;

namespace
{

json parse_document(const std::string &text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error &ex) {
        throw ParseError(std::string("malformed JSON: ") + ex.what());
    }
}

const json &field(const json &obj, const char *key)
{
    if (!obj.is_object() || !obj.contains(key)) {
        throw ParseError(std::string("missing field '") + key + "'");
    }
    return obj.at(key);
}

int int_field(const json &obj, const char *key)
{
    const json &v = field(obj, key);
    if (!v.is_number_integer()) {
        throw ParseError(std::string("field '") + key + "' must be an integer");
    }
    return v.get<int>();
}

std::string string_field(const json &obj, const char *key)
{
    const json &v = field(obj, key);
    if (!v.is_string()) {
        throw ParseError(std::string("field '") + key + "' must be a string");
    }
    return v.get<std::string>();
}

VanishingSequence to_sequence(const json &v)
{
    if (!v.is_array()) {
        throw ParseError("vanishing sequence must be an array of integers");
    }
    std::vector<int> orders;
    for (const auto &x : v) {
        if (!x.is_number_integer()) {
            throw ParseError("vanishing sequence must be an array of integers");
        }
        orders.push_back(x.get<int>());
    }
    return VanishingSequence(std::move(orders));
}

json from_sequence(const VanishingSequence &s)
{
    return json(s.orders());
}

Rational to_rational(const json &v)
{
    if (v.is_string()) {
        return parse_rational(v.get<std::string>());
    }
    if (v.is_number_integer()) {
        return parse_rational(v.dump());
    }
    throw ParseError("coefficient must be a decimal or p/q string");
}

const json &array_field(const json &obj, const char *key)
{
    const json &v = field(obj, key);
    if (!v.is_array()) {
        throw ParseError(std::string("field '") + key + "' must be an array");
    }
    return v;
}

} // namespace

std::string read_text_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

LinearSeries parse_series_json(const std::string &text)
{
    const json doc = parse_document(text);
    const int r = int_field(doc, "r");
    const int d = int_field(doc, "d");
    if (r < 0 || d < r) {
        throw InvalidSequence("need 0 <= r <= d");
    }
    const json &rows = array_field(doc, "basis");
    if (rows.size() != static_cast<std::size_t>(r + 1)) {
        throw ParseError("basis has " + std::to_string(rows.size()) + " forms, expected "
                         + std::to_string(r + 1));
    }
    std::vector<BinaryForm> basis;
    for (const auto &row : rows) {
        if (!row.is_array() || row.size() != static_cast<std::size_t>(d + 1)) {
            throw ParseError("each basis form needs " + std::to_string(d + 1) + " coefficients");
        }
        std::vector<Rational> coeffs;
        for (const auto &c : row) {
            coeffs.push_back(to_rational(c));
        }
        basis.emplace_back(std::move(coeffs));
    }
    return LinearSeries(std::move(basis));
}

std::string series_to_json(const LinearSeries &s)
{
    json rows = json::array();
    for (const auto &f : s.basis()) {
        json row = json::array();
        for (const auto &c : f.coeffs()) {
            row.push_back(to_string(c));
        }
        rows.push_back(std::move(row));
    }
    json doc;
    doc["r"] = s.r();
    doc["d"] = s.d();
    doc["basis"] = std::move(rows);
    return doc.dump(2);
}

RamificationProfile parse_profile_json(const std::string &text)
{
    const json doc = parse_document(text);
    const int r = int_field(doc, "r");
    const int d = int_field(doc, "d");
    std::vector<VanishingSequence> points;
    for (const auto &p : array_field(doc, "points")) {
        points.push_back(to_sequence(p));
    }
    return RamificationProfile(r, d, std::move(points));
}

std::string profile_to_json(const RamificationProfile &p)
{
    json pts = json::array();
    for (const auto &s : p.points()) {
        pts.push_back(from_sequence(s));
    }
    json doc;
    doc["r"] = p.r();
    doc["d"] = p.d();
    doc["points"] = std::move(pts);
    return doc.dump(2);
}

LabelledTree parse_tree_json(const std::string &text)
{
    const json doc = parse_document(text);
    LabelledTree t{int_field(doc, "r"), int_field(doc, "d"), {}, {}, {}};
    for (const auto &v : array_field(doc, "vertices")) {
        if (!v.is_string()) {
            throw ParseError("vertex names must be strings");
        }
        t.vertices.push_back(v.get<std::string>());
    }
    for (const auto &e : array_field(doc, "edges")) {
        VanishingSequence label_u = to_sequence(field(e, "label_u"));
        VanishingSequence label_v = e.contains("label_v") ? to_sequence(e.at("label_v"))
                                                           : complementary(label_u, t.d);
        t.edges.push_back({string_field(e, "u"), string_field(e, "v"), std::move(label_u), std::move(label_v)});
    }
    if (doc.contains("dangling")) {
        for (const auto &h : array_field(doc, "dangling")) {
            t.dangling.push_back({string_field(h, "vertex"), to_sequence(field(h, "label"))});
        }
    }
    return t;
}

std::string tree_to_json(const LabelledTree &t)
{
    json edges = json::array();
    for (const auto &e : t.edges) {
        edges.push_back({{"u", e.u}, {"v", e.v}, {"label_u", from_sequence(e.label_u)},
                         {"label_v", from_sequence(e.label_v)}});
    }
    json dangling = json::array();
    for (const auto &h : t.dangling) {
        dangling.push_back({{"vertex", h.vertex}, {"label", from_sequence(h.label)}});
    }
    json doc;
    doc["r"] = t.r;
    doc["d"] = t.d;
    doc["vertices"] = t.vertices;
    doc["edges"] = std::move(edges);
    doc["dangling"] = std::move(dangling);
    return doc.dump(2);
}

std::string schubert_to_json(const SchubertClass &c)
{
    // std::map already orders partitions lexicographically
    json out = json::array();
    for (const auto &[p, k] : c.terms()) {
        json coef = k.fits_slong_p() ? json(k.get_si()) : json(k.get_str());
        out.push_back({{"partition", p}, {"coef", std::move(coef)}});
    }
    return out.dump();
}

SchubertClass parse_schubert_json(int r, int d, const std::string &text)
{
    const json doc = parse_document(text);
    if (!doc.is_array()) {
        throw ParseError("Schubert class must be an array");
    }
    SchubertClass c(r, d);
    for (const auto &term : doc) {
        const json &parts = field(term, "partition");
        if (!parts.is_array()) {
            throw ParseError("partition must be an array");
        }
        std::vector<int> p;
        for (const auto &x : parts) {
            if (!x.is_number_integer()) {
                throw ParseError("partition entries must be integers");
            }
            p.push_back(x.get<int>());
        }
        const Rational k = to_rational(field(term, "coef"));
        if (!is_integer(k)) {
            throw ParseError("Schubert coefficients must be integers");
        }
        c.add(make_partition(std::move(p)), k.get_num());
    }
    return c;
}

std::string certificate_json(const Relation &rel, const RelationCheck &check)
{
    auto profile = [](const RamificationProfile &p) {
        json pts = json::array();
        for (const auto &s : p.points()) {
            pts.push_back(from_sequence(s));
        }
        return pts;
    };
    json rhs = json::array();
    for (const auto &p : rel.rhs) {
        rhs.push_back(profile(p));
    }
    json doc;
    doc["r"] = rel.r;
    doc["d"] = rel.d;
    doc["relation"] = to_string(rel);
    doc["lhs"] = profile(rel.lhs);
    doc["rhs"] = std::move(rhs);
    doc["lhs_class"] = to_string(check.lhs);
    doc["rhs_class"] = to_string(check.rhs);
    doc["difference"] = to_string(check.difference);
    doc["verified"] = check.holds;
    return doc.dump(2);
}

} // namespace orbitcalc
