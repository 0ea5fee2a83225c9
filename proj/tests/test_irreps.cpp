#include <map>
#include <set>

#include "doctest.h"
#include "sl2reps/irreps.hpp"
#include "sl2reps/sl2.hpp"
#include "sl2reps/weil.hpp"

using namespace sl2reps;

namespace {

const Catalogue& catalogue(long p, int lambda)
{
    static std::map<std::pair<long, int>, Catalogue> cache;
    auto key = std::make_pair(p, lambda);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, enumerate_irreps(p, lambda)).first;
    return it->second;
}

std::multiset<size_t> degrees(const Catalogue& c)
{
    std::multiset<size_t> out;
    for (const auto& r : c.records) out.insert(r.rep.dim());
    return out;
}

bool divides(long a, long b) { return b % a == 0; }

}  // namespace

TEST_CASE("catalogue of SL2(Z/2) is that of S3")
{
    const auto& c = catalogue(2, 1);
    CHECK(degrees(c) == std::multiset<size_t>{1, 1, 2});
    CHECK(c.complete);
    CHECK(c.sum_of_squares == 6);
}

TEST_CASE("catalogue of SL2(Z/3)")
{
    const auto& c = catalogue(3, 1);
    CHECK(c.sum_of_squares == 24);
    auto d = degrees(c);
    for (size_t x : {1, 2, 3}) CHECK(d.count(x) >= 1);
    CHECK(d.count(2) >= 2);
}

TEST_CASE("catalogue of SL2(Z/4) contains the 3-dimensional special representation")
{
    const auto& c = catalogue(2, 2);
    CHECK(c.sum_of_squares == 48);
    bool found = false;
    for (const auto& r : c.records)
        if (r.kind == "special" && r.rep.dim() == 3 && r.rep.level == 4) found = true;
    CHECK(found);
}

TEST_CASE("completeness at desk scale")
{
    for (auto [p, lam] : std::vector<std::pair<long, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {2, 3}, {3, 2}}) {
        const auto& c = catalogue(p, lam);
        long n = 1;
        for (int i = 0; i < lam; ++i) n *= p;
        INFO("n=" << n);
        CHECK(c.group_order == group_order(n));
        CHECK(c.sum_of_squares == c.group_order);
        CHECK(c.complete);
        CHECK_FALSE(c.budget_exceeded);
    }
}

TEST_CASE("every catalogued record is a certified symmetric congruence irrep")
{
    uint64_t seed = 11;
    for (auto [p, lam] : std::vector<std::pair<long, int>>{{2, 3}, {3, 2}, {5, 1}}) {
        const auto& c = catalogue(p, lam);
        long n = 1;
        for (int i = 0; i < lam; ++i) n *= p;
        for (const auto& rec : c.records) {
            INFO(n << " " << rec.kind << " " << rec.rep.provenance.dump());
            CHECK(check_rep(rec.rep).ok());
            CHECK(rec.certified_irreducible);
            CHECK(rec.commutant_dim == 1);
            CHECK(rec.symmetric);
            CHECK(verify_symmetric(rec.rep));
            CHECK(divides(rec.rep.level, n));
            CHECK(verify_congruence(rec.rep, rec.rep.level, 5, seed++).pass);
            CHECK_NOTHROW(check_pure(rec.rep));
            CMatrix s2 = rec.rep.s * rec.rep.s;
            CHECK((s2.is_identity() || (s2.scaled(Cyclotomic(-1))).is_identity()));
            CHECK(rec.key == equivalence_key(rec.rep));
        }
        // Sorted by level, then degree.
        for (size_t i = 1; i < c.records.size(); ++i) {
            const auto& a = c.records[i - 1].rep;
            const auto& b = c.records[i].rep;
            CHECK((a.level < b.level || (a.level == b.level && a.dim() <= b.dim())));
        }
    }
}

TEST_CASE("catalogue entries are pairwise inequivalent")
{
    const auto& c = catalogue(2, 3);
    for (size_t i = 0; i < c.records.size(); ++i)
        for (size_t j = i + 1; j < c.records.size(); ++j) {
            const auto& a = c.records[i];
            const auto& b = c.records[j];
            if (a.rep.dim() != b.rep.dim() || a.rep.level != b.rep.level) continue;
            CHECK_FALSE(are_equivalent(a.rep, b.rep).equivalent);
        }
}

TEST_CASE("special representations are not standard")
{
    for (int lam : {2, 3, 4}) {
        const auto& c = catalogue(2, lam);
        for (const auto& sp : c.records) {
            if (sp.kind != "special") continue;
            for (const auto& st : c.records) {
                if (st.kind.rfind("standard", 0) != 0) continue;
                if (st.rep.dim() != sp.rep.dim() || st.rep.level != sp.rep.level) continue;
                CHECK_FALSE(are_equivalent(sp.rep, st.rep).equivalent);
            }
        }
    }
    // Standalone construction of all special rows with lambda <= 6.
    for (long r : {1, 3}) CHECK(special_irreps(4, r, 3, 1).rep.level == 16);
    for (long r : {1, 3})
        for (int c : {1, 2}) CHECK(special_irreps(5, r, 1, c).rep.dim() == 12);
    for (long r : {1, 3, 5, 7})
        for (long t : {1, 3}) {
            auto rec = special_irreps(6, r, t, 1);
            CHECK(rec.certified_irreducible);
            CHECK(rec.rep.level == 64);
        }
}

TEST_CASE("special t-eigenvalue of delta_(0,1) - delta_(4,1)")
{
    for (long r : {1, 3}) {
        auto rec = special_irreps(4, r, 3, 1);
        bool found = false;
        for (size_t i = 0; i < rec.rep.dim(); ++i)
            if (rec.rep.labels[i] == "delta_(0,1)-delta_(4,1)") {
                found = true;
                CHECK(rec.rep.t[i] == root_of_unity(3 * r, 4));
            }
        CHECK(found);
    }
}

TEST_CASE("plus/minus splits")
{
    auto u = unary_irreps(3, 1, 1);
    CHECK(u[0].rep.dim() == 2);
    CHECK(u[1].rep.dim() == 1);
    CHECK(u[0].kind == "unary_plus");
    CHECK_THROWS_AS(unary_irreps(2, 2, 1), invalid_module);

    // Extremal module: kappa is trivial, so nothing splits off.
    auto ext = QuadModule::make(ModuleKind::R, 2, 3, 1, 1, 1);
    auto g = aut_group(ext);
    for (const auto& chi : characters(ext, g)) {
        if (orbit_reps(ext, g, chi).theta_chi.empty()) continue;
        CHECK_FALSE(plus_minus_split(ext, g, chi).minus.has_value());
    }

    for (long n : {3, 5, 8, 9}) {
        for (const auto& m : modules_of_level(n, 81)) {
            if (m.kind() == ModuleKind::Unary) continue;
            auto gm = aut_group(m);
            for (const auto& chi : characters(m, gm)) {
                if (!chi.is_involution) continue;
                auto od = orbit_reps(m, gm, chi);
                if (od.theta_chi.empty()) continue;
                INFO(m.name() << " " << chi.name());
                auto sp = plus_minus_split(m, gm, chi);
                size_t total = sp.plus.dim() + (sp.minus ? sp.minus->dim() : 0);
                CHECK(total == od.theta_chi.size());
                CHECK(check_rep(sp.plus).ok());
                if (sp.minus) CHECK(check_rep(*sp.minus).ok());
            }
        }
    }
}

TEST_CASE("tensor and CRT composition")
{
    auto c4 = catalogue(2, 2);
    auto c3 = catalogue(3, 1);
    const Rep* two = nullptr;
    const Rep* six = nullptr;
    for (const auto& r : c3.records)
        if (r.rep.dim() == 2 && r.rep.level == 3) two = &r.rep;
    for (const auto& r : catalogue(2, 3).records)
        if (r.rep.dim() == 6) six = &r.rep;
    REQUIRE(two);
    REQUIRE(six);
    Rep triv = trivial_rep();
    Rep same = tensor(*two, triv);
    CHECK(same.s == two->s);
    CHECK(same.t == two->t);
    Rep big = tensor(*six, *two);
    CHECK(big.dim() == 12);
    CHECK(check_rep(big).ok());

    const Rep* three = nullptr;
    for (const auto& r : c4.records)
        if (r.rep.dim() == 3 && r.rep.level == 4) three = &r.rep;
    REQUIRE(three);
    Rep crt = crt_compose({*three, *two});
    CHECK(crt.level == 12);
    CHECK(crt.dim() == 6);
    CHECK(crt.provenance["family"] == "crt");
    CHECK(check_rep(crt).ok());
    CHECK(is_irreducible(crt).irreducible);
    CHECK_THROWS_AS(crt_compose({*three, *six}), std::invalid_argument);
}
