#include "doctest.h"
#include "sl2reps/linalg.hpp"
#include "sl2reps/symm.hpp"

using namespace sl2reps;

namespace {

Rep explicit_rep(const std::string& name)
{
    const auto& bp = builtin_perm_rep(name);
    MatrixRep m = permutation_rep(parse_cycles(bp.s_cycles, bp.points), parse_cycles(bp.t_cycles, bp.points));
    return rep_in_basis(m, *explicit_symmetric_basis(name), {});
}

Cyclotomic sqrt3i() { return imag_unit() * sqrt_rational(3); }

}  // namespace

TEST_CASE("cycle notation")
{
    Perm p = parse_cycles("(1245)(367)", 7);
    CHECK(p == Perm{1, 3, 5, 4, 0, 6, 2});
    CHECK(cycles_string(p) == "(1245)(367)");
    CHECK(cycles_string(parse_cycles("(1,2)(10,11)", 11)) == "(1,2)(10,11)");
    CHECK(cycles_string(parse_cycles("", 3)) == "()");
    CHECK_THROWS_AS(parse_cycles("(12)(23)", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_cycles("(18)", 7), std::invalid_argument);
    CHECK_THROWS_AS(parse_cycles("12", 7), std::invalid_argument);
    CHECK_THROWS_AS(permutation_rep(parse_cycles("(12)", 3), parse_cycles("(123)", 3)), not_sl2_action);
}

TEST_CASE("builtin permutation representations")
{
    long orders[] = {12, 10, 6, 6};
    int i = 0;
    for (const auto& bp : builtin_perm_reps()) {
        INFO(bp.name);
        Rep r = builtin_rep(bp.name);
        CHECK(r.dim() == 7);
        CHECK(r.level == orders[i++]);
        CHECK(check_rep(r).ok());
    }
}

TEST_CASE("rho_3 Fourier entries and obstruction")
{
    Rep r = builtin_rep("phi3");
    // 1-based (3,4), (3,5), (4,5) of the printed example.
    CHECK(r.s(2, 3) == (Cyclotomic(5) - sqrt3i()) / Cyclotomic(12));
    CHECK(r.s(3, 2) == r.s(2, 3).conj());
    CHECK(r.s(2, 4) == -(Cyclotomic(2) + sqrt3i()) / Cyclotomic(6));
    CHECK(r.s(3, 4) == -(Cyclotomic(2) + sqrt3i()) / Cyclotomic(6));
    auto res = obstruction_test(r);
    CHECK(res.verdict == Verdict::Obstructed);
    CHECK(*res.witness == std::vector<size_t>{2, 3, 4});
    CHECK(*res.lhs != *res.rhs);
    CHECK(diagonal_symmetrize(r).verdict == Verdict::Obstructed);
    CHECK(diagonal_symmetrize(builtin_rep("phi4")).verdict == Verdict::Obstructed);
}

TEST_CASE("explicit symmetric bases of rho_1 and rho_2")
{
    for (const char* name : {"phi1", "phi2"}) {
        INFO(name);
        Rep r = explicit_rep(name);
        CHECK(verify_symmetric(r));
        CHECK(check_rep(r).ok());
        CHECK(are_equivalent(r, builtin_rep(name)).equivalent);
    }
    CHECK_FALSE(explicit_symmetric_basis("phi3").has_value());
}

TEST_CASE("induced representation of rho_3 is symmetric")
{
    const auto& bp = builtin_perm_rep("phi3");
    Perm t = parse_cycles(bp.t_cycles, 7);
    MatrixRep m = permutation_rep(parse_cycles(bp.s_cycles, 7), t);
    Rep r = induce_restrict(m, fourier_eigenbasis(t), {});
    CHECK(r.dim() == 14);
    CHECK(check_rep(r).ok());
    CHECK(verify_symmetric(r));
    MatrixRep bad = m;
    bad.s = m.s.scaled(imag_unit());
    CHECK_THROWS_AS(induce_restrict(bad, fourier_eigenbasis(t), {}), std::invalid_argument);
}

TEST_CASE("diagonal gauge fixing")
{
    // Conjugate a symmetric rep by a diagonal unitary and recover symmetry.
    auto sb = symmetric_basis_unary(5, 2, 1, 1);
    Rep r = sb.rep;
    std::vector<Cyclotomic> d;
    for (size_t i = 0; i < r.dim(); ++i) d.push_back(root_of_unity(static_cast<long>(i * i + 1), 7));
    CMatrix D = CMatrix::diagonal(d);
    Rep twisted = r;
    twisted.s = D.conj_transpose() * r.s * D;
    REQUIRE_FALSE(twisted.s.is_symmetric());
    bool simple = true;
    for (size_t i = 0; i < r.dim(); ++i)
        for (size_t j = i + 1; j < r.dim(); ++j)
            if (r.t[i] == r.t[j]) simple = false;
    auto res = diagonal_symmetrize(twisted);
    if (simple) {
        CHECK(res.verdict == Verdict::Symmetrized);
        CHECK(verify_symmetric(*res.result));
        const CMatrix& U = *res.basis_change;
        CHECK(U.is_diagonal());
        CHECK((U.conj_transpose() * U).is_identity());
        CHECK(U.conj_transpose() * twisted.s * U == res.result->s);
    } else {
        CHECK(res.verdict != Verdict::Symmetrized);
    }
    CHECK(obstruction_test(r).verdict == Verdict::Symmetric);
}

TEST_CASE("special representations")
{
    struct Row {
        int lambda;
        long r, t;
        int chi;
        size_t dim;
        long level;
    };
    Row rows[] = {{2, 1, 3, 1, 3, 4},   {3, 1, 3, 1, 6, 8},   {4, 1, 3, 1, 6, 16},  {4, 3, 3, 1, 6, 16},
                  {5, 1, 1, 1, 12, 32}, {5, 3, 1, 2, 12, 32}, {6, 5, 3, 1, 12, 64}, {7, 1, 1, 2, 24, 128}};
    for (const auto& row : rows) {
        INFO(row.lambda << " " << row.r << " " << row.t << " " << row.chi);
        auto sb = symmetric_basis_special(row.lambda, row.r, row.t, row.chi);
        CHECK(sb.rep.dim() == row.dim);
        CHECK(sb.rep.level == row.level);
        CHECK(gram_matrix(sb.vectors).is_identity());
        CHECK(check_rep(sb.rep).ok());
        CHECK(verify_symmetric(sb.rep));
        CHECK(is_irreducible(sb.rep).irreducible);
        auto m = QuadModule::from_descriptor(sb.rep.provenance["module"]);
        for (const auto& v : sb.vectors) CHECK(fixed_by_antilinear_kappa(m, v));
        check_pure(sb.rep);
    }
    CHECK_THROWS_AS(symmetric_basis_special(2, 1, 1, 1), not_special);
    CHECK_THROWS_AS(symmetric_basis_special(5, 1, 1, 3), not_special);
    CHECK_THROWS_AS(symmetric_basis_special(1, 1, 1, 1), not_special);
}

TEST_CASE("unary representations")
{
    CHECK(symmetric_basis_unary(3, 1, 1, 1).rep.dim() == 2);
    CHECK(symmetric_basis_unary(3, 1, 1, -1).rep.dim() == 1);
    CHECK(symmetric_basis_unary(3, 2, 1, 1).rep.dim() == 4);
    CHECK_THROWS_AS(symmetric_basis_unary(2, 3, 1, 1), invalid_module);
    for (long p : {3, 5, 7})
        for (int lam = 1; lam <= 3; ++lam) {
            long q = 1;
            for (int i = 0; i < lam; ++i) q *= p;
            if (q > 125) continue;
            for (long r : {1L, p == 3 ? 2L : p == 5 ? 2L : 3L})
                for (int eps : {1, -1}) {
                    INFO(p << "^" << lam << " r=" << r << " eps=" << eps);
                    auto sb = symmetric_basis_unary(p, lam, r, eps);
                    size_t expect = lam == 1 ? static_cast<size_t>((p + eps) / 2) : static_cast<size_t>(q / (p * p) * (p * p - 1) / 2);
                    CHECK(sb.rep.dim() == expect);
                    CHECK(sb.rep.level == q);
                    CHECK(gram_matrix(sb.vectors).is_identity());
                    CHECK(check_rep(sb.rep).ok());
                    CHECK(verify_symmetric(sb.rep));
                    CHECK(is_irreducible(sb.rep).irreducible);
                    auto m = QuadModule::from_descriptor(sb.rep.provenance["module"]);
                    for (const auto& v : sb.vectors) CHECK(fixed_by_antilinear_kappa(m, v));
                }
        }
}

TEST_CASE("standard symmetric bases")
{
    for (long n : {3, 4, 5, 8, 9, 16, 25, 27}) {
        for (const auto& m : modules_of_level(n, 81)) {
            if (m.kind() == ModuleKind::Unary) continue;
            auto g = aut_group(m);
            for (const auto& chi : characters(m, g)) {
                if (orbit_reps(m, g, chi).theta_chi.empty()) continue;
                INFO(m.name() << " " << chi.name());
                auto sb = symmetric_basis_standard(m, g, chi);
                CHECK(gram_matrix(sb.vectors).is_identity());
                CHECK(check_rep(sb.rep).ok());
                CHECK(verify_symmetric(sb.rep));
                for (const auto& v : sb.vectors) CHECK(fixed_by_antilinear_kappa(m, v));
                const CMatrix& U = sb.basis_change;
                CHECK((U.conj_transpose() * U).is_identity());
                Rep ref = subspace_rep(m, g, chi);
                CHECK(U.conj_transpose() * ref.s * U == sb.rep.s);
            }
        }
    }
}

TEST_CASE("purity")
{
    CHECK(check_pure(symmetric_basis_unary(3, 1, 1, 1).rep) == Purity::ImaginaryReal);
    CHECK(check_pure(symmetric_basis_unary(3, 1, 1, -1).rep) == Purity::Real);
    CHECK(check_pure(symmetric_basis_unary(3, 2, 1, -1).rep) == Purity::ImaginaryReal);
    CHECK(check_pure(symmetric_basis_unary(5, 1, 1, 1).rep) == Purity::Real);
    CHECK(purity_name(Purity::ImaginaryReal) == "i-times-real");
}
