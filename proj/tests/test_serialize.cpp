#include "doctest.h"
#include "sl2reps/serialize.hpp"
#include "sl2reps/weil.hpp"

using namespace sl2reps;
using nlohmann::json;

namespace {

bool contains_key(const json& j, const std::string& key)
{
    if (j.is_object()) {
        if (j.contains(key)) return true;
        for (const auto& [k, v] : j.items())
            if (contains_key(v, key)) return true;
    } else if (j.is_array()) {
        for (const auto& v : j)
            if (contains_key(v, key)) return true;
    }
    return false;
}

std::string pointer_of(const json& j)
{
    try {
        rep_from_json(j);
    } catch (const schema_error& e) {
        return e.pointer();
    }
    return "<none>";
}

}  // namespace

TEST_CASE("cyclotomic JSON")
{
    Cyclotomic x = Cyclotomic(1) / Cyclotomic(3) - root_of_unity(1, 3) / Cyclotomic(6);
    json j = to_json(x);
    CHECK(j["conductor"] == 3);
    CHECK(j["coeffs"] == json::array({"1/3", "-1/6"}));
    // 1/3 - (-1/2 + i sqrt(3)/2)/6 = 5/12 - i sqrt(3)/12
    CHECK(j["approx"][0].get<double>() == doctest::Approx(5.0 / 12));
    CHECK(j["approx"][1].get<double>() == doctest::Approx(-std::sqrt(3.0) / 12));
    CHECK(cyclotomic_from_json(j) == x);
    CHECK_FALSE(to_json(x, {false, 15}).contains("approx"));
    // Precision is significant digits.
    json k = to_json(Cyclotomic(1) / Cyclotomic(3), {true, 3});
    CHECK(k["approx"][0].get<double>() == 0.333);
    CHECK(k["approx"][1].get<double>() == 0.0);
    // Non-minimal input is reduced.
    json big = {{"conductor", 8}, {"coeffs", {"0", "0", "1", "0"}}};
    CHECK(cyclotomic_from_json(big) == imag_unit());
}

TEST_CASE("rep JSON round trip is byte-identical")
{
    std::vector<Rep> reps;
    for (const auto& rec : enumerate_irreps(2, 3).records) reps.push_back(rec.rep);
    for (const char* b : {"phi1", "phi2", "phi3", "phi4"}) reps.push_back(builtin_rep(b));
    reps.push_back(weil_matrices(QuadModule::make(ModuleKind::N, 3, 1)));
    for (const auto& r : reps) {
        for (bool approx : {true, false}) {
            JsonOptions o{approx, 15};
            std::string a = canonical_dump(to_json(r, o));
            Rep back = rep_from_json(parse_json_text(a));
            CHECK(back.s == r.s);
            CHECK(back.t == r.t);
            CHECK(back.labels == r.labels);
            CHECK(back.provenance == r.provenance);
            std::string b = canonical_dump(to_json(back, o));
            CHECK(a == b);
            CHECK(contains_key(json::parse(a), "approx") == approx);
        }
    }
}

TEST_CASE("schema errors point at the offending value")
{
    Rep r = builtin_rep("phi3");
    json good = to_json(r, {false, 15});
    CHECK(pointer_of(good) == "<none>");

    json j = good;
    j.erase("labels");
    CHECK(pointer_of(j) == "/labels");
    j = good;
    j["s"][1][2]["coeffs"][0] = "1/0";
    CHECK(pointer_of(j) == "/s/1/2/coeffs/0");
    j = good;
    j["s"][1][2]["coeffs"][0] = 5;
    CHECK(pointer_of(j) == "/s/1/2/coeffs/0");
    j = good;
    j["s"][2].erase(0);
    CHECK(pointer_of(j) == "/s/2");
    j = good;
    j["t"].erase(0);
    CHECK(pointer_of(j) == "/t");
    j = good;
    j["level"] = 7;
    CHECK(pointer_of(j) == "/level");
    j = good;
    j["t"][0]["conductor"] = 0;
    CHECK(pointer_of(j) == "/t/0/conductor");
    j = good;
    j["provenance"] = 3;
    CHECK(pointer_of(j) == "/provenance");
    CHECK_THROWS_AS(parse_json_text("{\"labels\": ["), schema_error);
}

TEST_CASE("symmetrization and congruence JSON")
{
    auto res = obstruction_test(builtin_rep("phi3"));
    json j = to_json(res);
    CHECK(j["verdict"] == verdict_name(Verdict::Obstructed));
    CHECK(j["witness"] == json::array({3, 4, 5}));
    CHECK(cyclotomic_from_json(j["lhs"]) == *res.lhs);
    CHECK(cyclotomic_from_json(j["rhs"]) == *res.rhs);
    CHECK(j["basis_change"].is_null());

    auto sym = obstruction_test(builtin_rep("phi1"));
    json k = to_json(sym);
    CHECK(k["witness"].is_null());

    CongruenceReport cr;
    cr.pass = false;
    cr.witness = "s t^2";
    cr.seed = 9;
    json c = to_json(cr);
    CHECK(c["pass"] == false);
    CHECK(c["witness"] == "s t^2");
    CHECK(c["seed"] == 9);
    cr.witness.reset();
    CHECK(to_json(cr)["witness"].is_null());
}

TEST_CASE("catalogue CSV and JSON")
{
    Catalogue c = enumerate_irreps(2, 2);
    std::string csv = catalogue_csv(c);
    std::istringstream is(csv);
    std::string line;
    std::getline(is, line);
    CHECK(line == "level,degree,kind,provenance,irreducible");
    size_t rows = 0;
    while (std::getline(is, line)) {
        ++rows;
        CHECK(line.back() == 'e');  // true / false
        CHECK(line.find(",\"{") != std::string::npos);
    }
    CHECK(rows == c.records.size());
    CHECK(csv.find("1,1,trivial,\"{\"\"family\"\":\"\"trivial\"\"}\",true\n") != std::string::npos);

    json arr = to_json(c);
    REQUIRE(arr.is_array());
    CHECK(arr.size() == c.records.size());
    for (size_t i = 0; i < arr.size(); ++i) {
        CHECK(arr[i]["degree"] == c.records[i].rep.dim());
        CHECK(rep_from_json(arr[i]["rep"], "/" + std::to_string(i) + "/rep").s == c.records[i].rep.s);
    }
}
