#include "sl2reps/serialize.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace sl2reps {

using nlohmann::json;

namespace {

double rounded(double x, int precision)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, x);
    double y = std::strtod(buf, nullptr);
    return y == 0.0 ? 0.0 : y;  // no negative zero
}

const json& field(const json& j, const std::string& ptr, const char* key)
{
    if (!j.is_object()) throw schema_error(ptr.empty() ? "/" : ptr, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw schema_error(ptr + "/" + key, "missing");
    return *it;
}

long integer(const json& j, const std::string& ptr)
{
    if (!j.is_number_integer()) throw schema_error(ptr, "expected an integer");
    return j.get<long>();
}

const json& array(const json& j, const std::string& ptr)
{
    if (!j.is_array()) throw schema_error(ptr, "expected an array");
    return j;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

json to_json(const Cyclotomic& c, const JsonOptions& o)
{
    json coeffs = json::array();
    for (const auto& q : c.coeffs()) coeffs.push_back(rational_string(q));
    json j = {{"conductor", c.conductor()}, {"coeffs", coeffs}};
    if (o.approx) {
        auto z = c.approx();
        j["approx"] = {rounded(z.real(), o.precision), rounded(z.imag(), o.precision)};
    }
    return j;
}

Cyclotomic cyclotomic_from_json(const json& j, const std::string& ptr)
{
    long n = integer(field(j, ptr, "conductor"), ptr + "/conductor");
    if (n < 1) throw schema_error(ptr + "/conductor", "conductor must be positive");
    const json& cs = array(field(j, ptr, "coeffs"), ptr + "/coeffs");
    std::vector<mpq_class> coeffs;
    for (size_t k = 0; k < cs.size(); ++k) {
        std::string p = ptr + "/coeffs/" + std::to_string(k);
        if (!cs[k].is_string()) throw schema_error(p, "expected a rational string");
        try {
            coeffs.push_back(parse_rational(cs[k].get<std::string>()));
        } catch (const std::exception& e) {
            throw schema_error(p, e.what());
        }
    }
    return Cyclotomic::from_coeffs(n, coeffs);
}

json to_json(const CMatrix& m, const JsonOptions& o)
{
    json rows = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k), o));
        rows.push_back(std::move(row));
    }
    return rows;
}

CMatrix matrix_from_json(const json& j, const std::string& ptr)
{
    array(j, ptr);
    size_t rows = j.size();
    size_t cols = rows ? array(j[0], ptr + "/0").size() : 0;
    CMatrix m(rows, cols);
    for (size_t i = 0; i < rows; ++i) {
        std::string p = ptr + "/" + std::to_string(i);
        if (array(j[i], p).size() != cols) throw schema_error(p, "ragged matrix row");
        for (size_t k = 0; k < cols; ++k) m(i, k) = cyclotomic_from_json(j[i][k], p + "/" + std::to_string(k));
    }
    return m;
}

json to_json(const Rep& r, const JsonOptions& o)
{
    json t = json::array();
    for (const auto& x : r.t) t.push_back(to_json(x, o));
    return {{"labels", r.labels}, {"s", to_json(r.s, o)}, {"t", t}, {"level", r.level}, {"provenance", r.provenance}};
}

Rep rep_from_json(const json& j, const std::string& ptr)
{
    const json& lj = array(field(j, ptr, "labels"), ptr + "/labels");
    std::vector<std::string> labels;
    for (size_t i = 0; i < lj.size(); ++i) {
        if (!lj[i].is_string()) throw schema_error(ptr + "/labels/" + std::to_string(i), "expected a string");
        labels.push_back(lj[i].get<std::string>());
    }
    size_t d = labels.size();
    CMatrix s = matrix_from_json(field(j, ptr, "s"), ptr + "/s");
    if (s.rows() != d || s.cols() != d) throw schema_error(ptr + "/s", "s must be square of the label count");
    const json& tj = array(field(j, ptr, "t"), ptr + "/t");
    if (tj.size() != d) throw schema_error(ptr + "/t", "t must have one entry per label");
    std::vector<Cyclotomic> t;
    for (size_t i = 0; i < d; ++i) t.push_back(cyclotomic_from_json(tj[i], ptr + "/t/" + std::to_string(i)));
    json prov = json::object();
    if (j.contains("provenance")) {
        prov = j["provenance"];
        if (!prov.is_object()) throw schema_error(ptr + "/provenance", "expected an object");
    }
    long level = integer(field(j, ptr, "level"), ptr + "/level");
    Rep r;
    try {
        r = make_rep(std::move(labels), std::move(s), std::move(t), std::move(prov));
    } catch (const std::exception& e) {
        throw schema_error(ptr + "/t", e.what());
    }
    if (r.level != level)
        throw schema_error(ptr + "/level", "stored level " + std::to_string(level) + " differs from the order of t (" +
                                               std::to_string(r.level) + ")");
    return r;
}

json to_json(const IrrepRecord& r, const JsonOptions& o)
{
    return {{"rep", to_json(r.rep, o)},
            {"kind", r.kind},
            {"degree", r.rep.dim()},
            {"level", r.rep.level},
            {"certified_irreducible", r.certified_irreducible},
            {"commutant_dim", r.commutant_dim},
            {"symmetric", r.symmetric}};
}

json to_json(const Catalogue& c, const JsonOptions& o)
{
    json out = json::array();
    for (const auto& r : c.records) out.push_back(to_json(r, o));
    return out;
}

std::string catalogue_csv(const Catalogue& c)
{
    std::ostringstream os;
    os << "level,degree,kind,provenance,irreducible\n";
    for (const auto& r : c.records)
        os << r.rep.level << ',' << r.rep.dim() << ',' << csv_field(r.kind) << ',' << csv_field(r.rep.provenance.dump())
           << ',' << (r.certified_irreducible ? "true" : "false") << '\n';
    return os.str();
}

json to_json(const SymmetrizationResult& r, const JsonOptions& o)
{
    json j = {{"verdict", verdict_name(r.verdict)}};
    if (r.witness) {
        json w = json::array();
        for (size_t i : *r.witness) w.push_back(i + 1);
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    j["lhs"] = r.lhs ? to_json(*r.lhs, o) : json(nullptr);
    j["rhs"] = r.rhs ? to_json(*r.rhs, o) : json(nullptr);
    j["basis_change"] = r.basis_change ? to_json(*r.basis_change, o) : json(nullptr);
    if (r.result) j["result"] = to_json(*r.result, o);
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

json to_json(const CongruenceReport& r)
{
    return {{"pass", r.pass},
            {"level_ok", r.level_ok},
            {"witness", r.witness ? json(*r.witness) : json(nullptr)},
            {"seed", r.seed},
            {"n", r.n},
            {"trials", r.trials}};
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

json parse_json_text(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw schema_error("", std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace sl2reps
