#include <random>
#include <set>

#include "doctest.h"
#include "sl2reps/quadmod.hpp"

using namespace sl2reps;

namespace {

std::vector<QuadModule> small_modules(size_t max_size)
{
    std::vector<QuadModule> out;
    for (long n : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32})
        for (auto& m : modules_of_level(n, max_size)) out.push_back(m);
    return out;
}

}  // namespace

TEST_CASE("module construction follows the parameter table")
{
    auto d2 = QuadModule::make(ModuleKind::D, 2, 1);
    CHECK(d2.size() == 4);
    CHECK(d2.eval_Q(d2.index(1, 1)) == mpq_class(1, 2));
    CHECK(d2.eval_B(d2.index(1, 0), d2.index(0, 1)) == mpq_class(1, 2));

    // Smallest t = 3 mod 4 with (-t/3) = -1; t = 3 itself gives (-3/3) = 0.
    auto n3 = QuadModule::make(ModuleKind::N, 3, 1);
    long t = 3;
    while (legendre_symbol(-t, 3) != -1) t += 4;
    CHECK(n3.t() == t);
    CHECK(n3.t() == 7);
    CHECK_THROWS_AS(QuadModule::make(ModuleKind::N, 3, 1, 0, 1, 3), invalid_module);

    auto r4 = QuadModule::make(ModuleKind::R, 2, 2, 0, 1, 3);
    CHECK(r4.d1() == 2);
    CHECK(r4.d2() == 2);
    CHECK(r4.eval_Q(r4.index(1, 0)) == mpq_class(1, 4));
    CHECK(r4.eval_Q(r4.index(0, 1)) == mpq_class(3, 4));
    CHECK(r4.eval_Q(r4.index(1, 1)) == 0);

    CHECK_THROWS_AS(QuadModule::make(ModuleKind::R, 2, 3, 2, 1, 1), invalid_module);
    CHECK_THROWS_AS(QuadModule::make(ModuleKind::R, 2, 3, 0, 2, 1), invalid_module);
    CHECK_THROWS_AS(QuadModule::make(ModuleKind::R, 3, 2, 0, 1, 1), invalid_module);
    CHECK_THROWS_AS(QuadModule::make(ModuleKind::Unary, 2, 2), invalid_module);
    CHECK_THROWS_AS(QuadModule::make(ModuleKind::Unary, 5, 1, 0, 3), invalid_module);
    CHECK_THROWS_AS(QuadModule::make(ModuleKind::D, 6, 1), invalid_module);
}

TEST_CASE("kappa on each type")
{
    auto d = QuadModule::make(ModuleKind::D, 5, 1);
    CHECK(d.kappa(d.index(1, 2)) == d.index(2, 1));
    auto ext = QuadModule::make(ModuleKind::R, 2, 4, 2, 1, 3);
    CHECK(ext.is_extremal());
    for (size_t a = 0; a < ext.size(); ++a) CHECK(ext.kappa(a) == a);
    auto u = QuadModule::make(ModuleKind::Unary, 7, 1);
    for (size_t a = 0; a < u.size(); ++a) CHECK(u.kappa(a) == u.neg(a));
}

TEST_CASE("automorphism groups")
{
    CHECK(aut_group(QuadModule::make(ModuleKind::D, 5, 1)).size() == 4);
    CHECK(aut_group(QuadModule::make(ModuleKind::N, 3, 1)).size() == 4);
    auto ext = QuadModule::make(ModuleKind::R, 2, 4, 2, 1, 3);
    auto g = aut_group(ext);
    for (size_t e = 0; e < g.size(); ++e) CHECK(g.mul[e][e] == g.identity);

    // Generators stated for R^2_32(r,1): (-1,0) and (9,2).
    auto r32 = QuadModule::make(ModuleKind::R, 2, 5, 2, 1, 1);
    auto g32 = aut_group(r32);
    auto m1 = g32.find(r32.element_name(r32.index(-1, 0)));
    auto a92 = g32.find(r32.element_name(r32.index(9, 2)));
    REQUIRE(m1);
    REQUIRE(a92);
    std::set<size_t> gen;
    size_t x = g32.identity;
    for (int i = 0; i < 2; ++i) {
        size_t y = x;
        for (int j = 0; j < 64; ++j) {
            gen.insert(y);
            y = g32.mul[y][*a92];
        }
        x = g32.mul[x][*m1];
    }
    CHECK(gen.size() == g32.size());
}

TEST_CASE("characters and primitivity")
{
    auto d9 = QuadModule::make(ModuleKind::D, 3, 2);
    auto g = aut_group(d9);
    auto chars = characters(d9, g);
    CHECK(chars.size() == g.size());
    CHECK(chars[0].order == 1);
    CHECK(chars[0].is_involution);
    size_t e4 = *g.find("4");
    for (const auto& c : chars) {
        bool nontrivial_on_4 = c.values[e4] != 0;
        REQUIRE(c.is_primitive.has_value());
        if (nontrivial_on_4) CHECK(*c.is_primitive);
        for (size_t e = 0; e < g.size(); ++e)
            for (size_t f = 0; f < g.size(); ++f)
                CHECK((c.values[e] + c.values[f]) % c.E == c.values[g.mul[e][f]]);
    }
    for (size_t i = 0; i < chars.size(); ++i) {
        size_t j = conjugate_index(chars, i);
        for (size_t e = 0; e < g.size(); ++e) CHECK((chars[i].values[e] + chars[j].values[e]) % chars[i].E == 0);
    }
    auto ext = QuadModule::make(ModuleKind::R, 2, 4, 2, 1, 3);
    for (const auto& c : characters(ext, aut_group(ext))) CHECK(!c.is_primitive.has_value());
}

TEST_CASE("module invariants, exhaustive up to 1024 elements")
{
    for (const auto& m : small_modules(1024)) {
        INFO(m.name());
        size_t n = m.size();
        // Q(-a) = Q(a), nondegenerate B.
        for (size_t a = 0; a < n; ++a) CHECK(m.q_num(m.neg(a)) == m.q_num(a));
        size_t degenerate = 0;
        for (size_t a = 1; a < n; ++a) {
            bool found = false;
            for (size_t b = 0; b < n && !found; ++b) found = m.b_num(a, b) != 0;
            if (!found) ++degenerate;
        }
        CHECK(degenerate == 0);
        auto g = aut_group(m);
        size_t bad = 0;
        for (size_t e = 0; e < g.size(); ++e)
            for (size_t a = 0; a < n; ++a) {
                if (m.q_num(g.action[e][a]) != m.q_num(a)) ++bad;
                // (kappa o e)^2 = id
                size_t b = m.kappa(g.action[e][a]);
                if (m.kappa(g.action[e][b]) != a) ++bad;
            }
        for (size_t a = 0; a < n; ++a)
            if (m.q_num(m.kappa(a)) != m.q_num(a) || m.kappa(m.kappa(a)) != a) ++bad;
        CHECK(bad == 0);
        if (m.has_ring()) {
            // Norm one and unitary elements agree with the group found.
            size_t count = 0;
            for (size_t e = 0; e < n; ++e)
                if (m.norm(e) == 1 % m.level() && m.ring_mul(e, m.ring_conj(e)) == m.one()) ++count;
            CHECK(count == g.size());
            if (m.p() != 2 || m.kind() == ModuleKind::N) {
                size_t by_norm = 0;
                for (size_t e = 0; e < n; ++e)
                    if (m.norm(e) == 1 % m.level()) ++by_norm;
                CHECK(by_norm == g.size());
            }
        }
    }
}

TEST_CASE("descriptor round trip")
{
    for (const auto& m : small_modules(64)) {
        auto back = QuadModule::from_descriptor(m.descriptor());
        CHECK(back.descriptor() == m.descriptor());
        CHECK(back.name() == m.name());
    }
}
