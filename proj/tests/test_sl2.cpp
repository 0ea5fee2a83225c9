#include <random>

#include "doctest.h"
#include "sl2reps/sl2.hpp"
#include "sl2reps/symm.hpp"
#include "sl2reps/weil.hpp"

using namespace sl2reps;

namespace {

// Counts 2x2 matrices over Z/n with determinant 1.
long brute_order(long n)
{
    long count = 0;
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b)
            for (long c = 0; c < n; ++c)
                for (long d = 0; d < n; ++d)
                    if (((a * d - b * c) % n + n) % n == 1 % n) ++count;
    return count;
}

Mat2 random_sl2(std::mt19937_64& rng, long n)
{
    std::uniform_int_distribution<long> e(0, n - 1);
    while (true) {
        Mat2 m{e(rng), e(rng), e(rng), e(rng)};
        mpz_class d = m.det() % n;
        if (d < 0) d += n;
        if (d == 1 % n) return m;
    }
}

}  // namespace

TEST_CASE("group order")
{
    CHECK(group_order(1) == 1);
    CHECK(group_order(2) == 6);
    CHECK(group_order(3) == 24);
    CHECK(group_order(4) == 48);
    for (long n = 1; n <= 12; ++n) CHECK(group_order(n) == brute_order(n));
    CHECK(group_order(8) == 384);
    CHECK(group_order(9) == 648);
}

TEST_CASE("generator matrices satisfy the presentation")
{
    Mat2 S = Mat2::S(), T = Mat2::T();
    Mat2 I;
    CHECK(power(S, 4) == I);
    Mat2 a = power(S, -1) * T;
    CHECK(a * a * a == S * S);
    CHECK(power(T, 5) * power(T, -5) == I);
}

TEST_CASE("word parsing and printing")
{
    SL2Word w = SL2Word::parse("s t^3 s^-1 t^-2");
    CHECK(w.to_string() == "s t^3 s^-1 t^-2");
    CHECK(SL2Word::parse(w.to_string()).matrix() == w.matrix());
    CHECK_THROWS_AS(SL2Word::parse("x^2"), std::invalid_argument);
    CHECK_THROWS_AS(SL2Word::parse("t^"), std::invalid_argument);
    SL2Word v;
    v.push('t', 2);
    v.push('t', -2);
    CHECK(v.letters.empty());
    v.push('s', 4);
    CHECK(v.letters.empty());
}

TEST_CASE("decompose_modn reproduces random matrices")
{
    std::mt19937_64 rng(20240601);
    for (long n = 1; n <= 16; ++n)
        for (int i = 0; i < 200; ++i) {
            Mat2 A = random_sl2(rng, n);
            SL2Word w = decompose_modn(A, n);
            INFO("n=" << n << " word=" << w.to_string());
            CHECK(w.matrix().reduced(n) == A.reduced(n));
        }
    CHECK_THROWS_AS(decompose_modn(Mat2{2, 0, 0, 1}, 5), std::invalid_argument);
}

TEST_CASE("congruence checks")
{
    auto m = QuadModule::make(ModuleKind::D, 3, 1);
    Rep w = weil_matrices(m);
    auto rep = verify_congruence(w, 3, 20, 7);
    CHECK(rep.pass);
    CHECK(rep.level_ok);
    CHECK(rep.seed == 7);
    // rho_3 has t-order 6 but is not congruence.
    auto bad = verify_congruence(builtin_rep("phi3"), 6, 50, 1);
    CHECK_FALSE(bad.pass);
    REQUIRE(bad.witness.has_value());
    SL2Word wit = SL2Word::parse(*bad.witness);
    Rep r3 = builtin_rep("phi3");
    CHECK(evaluate(wit, r3) != evaluate(decompose_modn(wit.matrix(), 6), r3));
}

TEST_CASE("word evaluation is a homomorphism")
{
    Rep w = weil_matrices(QuadModule::make(ModuleKind::N, 3, 1));
    std::mt19937_64 rng(3);
    for (int i = 0; i < 10; ++i) {
        SL2Word a = random_word(rng, 3), b = random_word(rng, 3);
        SL2Word ab = a;
        for (const auto& l : b.letters) ab.push(l.gen, l.exp);
        CHECK(evaluate(ab, w) == evaluate(a, w) * evaluate(b, w));
    }
}
