#include <map>

#include "doctest.h"
#include "sl2reps/weil.hpp"

using namespace sl2reps;

namespace {

std::vector<QuadModule> modules_up_to(size_t max_size)
{
    std::vector<QuadModule> out;
    for (long n : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32})
        for (auto& m : modules_of_level(n, max_size)) out.push_back(m);
    return out;
}

// Dense image of a basis vector.
std::vector<Cyclotomic> dense(const QuadModule& m, const RootVector& v)
{
    std::vector<Cyclotomic> out(m.size());
    for (const auto& [a, c] : v.expand().coeffs) out[a] = c;
    return out;
}

}  // namespace

TEST_CASE("Gauss sums")
{
    auto r3 = QuadModule::make(ModuleKind::Unary, 3, 1);
    CHECK(gauss_sum(r3) == Cyclotomic(1) + Cyclotomic(2) * zeta(3));
    for (long p : {2, 3, 5})
        for (int lam = 1; lam <= 3; ++lam) {
            long n = 1;
            for (int i = 0; i < lam; ++i) n *= p;
            if (n > 27) continue;
            auto d = QuadModule::make(ModuleKind::D, p, lam);
            // Direct summation of e(Q(a)) one root at a time.
            Cyclotomic direct;
            for (size_t a = 0; a < d.size(); ++a) direct += root_of_unity(d.q_num(a), d.level());
            CHECK(direct == Cyclotomic(n));
            CHECK(gauss_sum(d) == direct);
        }
    for (const auto& m : modules_up_to(256)) {
        Cyclotomic g = gauss_sum(m);
        CHECK(g * g.conj() == Cyclotomic(static_cast<long>(m.size())));
    }
}

TEST_CASE("dense Weil matrices of D_2")
{
    auto d2 = QuadModule::make(ModuleKind::D, 2, 1);
    CHECK(weil_scalar(d2) == Cyclotomic(mpq_class(1, 2)));
    Rep w = weil_matrices(d2);
    CHECK(w.level == 2);
    for (size_t a = 0; a < 4; ++a) {
        CHECK(w.t[a] == root_of_unity(d2.q_num(a), 2));
        for (size_t b = 0; b < 4; ++b)
            CHECK(w.s(a, b) == Cyclotomic(mpq_class(1, 2)) * root_of_unity(d2.b_num(a, b), 2));
    }
    CHECK(check_rep(w).ok());
    CHECK_THROWS_AS(weil_matrices(QuadModule::make(ModuleKind::D, 5, 2), 256), std::length_error);
}

TEST_CASE("structured checker agrees with dense relation checks")
{
    for (const auto& m : modules_up_to(64)) {
        INFO(m.name());
        WeilCheck wc = check_weil(m);
        RepCheck rc = check_rep(weil_matrices(m));
        CHECK(wc.ok());
        CHECK(rc.ok());
        CHECK(wc.unitary == rc.unitary);
        CHECK(wc.s_fourth == rc.s_fourth);
        CHECK(wc.presentation == rc.presentation);
        CHECK(wc.level_matches == rc.level_matches);
        CHECK(wc.symmetric == weil_matrices(m).s.is_symmetric());
        CHECK(wc.gauss_magnitude);
    }
}

TEST_CASE("orbit representatives")
{
    auto d5 = QuadModule::make(ModuleKind::D, 5, 1);
    auto g = aut_group(d5);
    auto chars = characters(d5, g);
    for (const auto& chi : chars) {
        auto od = orbit_reps(d5, g, chi);
        if (chi.order == 1) CHECK(od.theta_chi.size() == od.theta.size());
        else CHECK(od.theta_chi.size() == 6);
        CHECK(od.theta1.size() + od.theta2.size() + od.kappa_theta2.size() == od.theta_chi.size());
        CHECK(od.theta2.size() == od.kappa_theta2.size());
        for (size_t a : od.theta1) CHECK(g.action[od.mu.at(a)][a] == d5.kappa(a));
        for (size_t i = 0; i < od.theta2.size(); ++i) CHECK(d5.kappa(od.theta2[i]) == od.kappa_theta2[i]);
    }
    auto n3 = QuadModule::make(ModuleKind::N, 3, 1);
    auto gn = aut_group(n3);
    for (const auto& chi : characters(n3, gn))
        if (chi.is_primitive.value_or(false) && !chi.is_involution) CHECK(orbit_reps(n3, gn, chi).theta_chi.size() == 2);
}

TEST_CASE("character subspaces fill the module")
{
    for (const auto& m : modules_up_to(256)) {
        INFO(m.name());
        auto g = aut_group(m);
        size_t total = 0;
        for (const auto& chi : characters(m, g)) total += orbit_reps(m, g, chi).theta_chi.size();
        CHECK(total == m.size());
    }
}

TEST_CASE("character subspace reps are invariant, unitary and conjugation-paired")
{
    for (const auto& m : modules_up_to(81)) {
        auto g = aut_group(m);
        auto chars = characters(m, g);
        Rep full = weil_matrices(m);
        for (size_t ci = 0; ci < chars.size(); ++ci) {
            const auto& chi = chars[ci];
            auto od = orbit_reps(m, g, chi);
            if (od.theta_chi.empty()) {
                CHECK_THROWS_AS(subspace_rep(m, g, chi), std::domain_error);
                continue;
            }
            INFO(m.name() << " " << chi.name());
            auto basis = character_basis(m, g, chi, od);
            CHECK(gram_matrix(basis).is_identity());
            Rep r = restrict_weil(m, basis, {});
            CHECK(check_rep(r).ok());
            for (size_t i = 0; i < basis.size(); ++i) CHECK(r.t[i] == root_of_unity(m.q_num(od.theta_chi.empty() ? 0 : basis[i].terms[0].a), m.level()));
            // s f_j = sum_i S_ij f_i exactly: zero residual outside the span.
            std::vector<std::vector<Cyclotomic>> fd;
            for (const auto& b : basis) fd.push_back(dense(m, b));
            size_t n = m.size();
            bool residual_zero = true;
            for (size_t j = 0; j < basis.size() && residual_zero; ++j) {
                for (size_t a = 0; a < n; ++a) {
                    Cyclotomic lhs;
                    for (size_t b = 0; b < n; ++b)
                        if (!fd[j][b].is_zero()) lhs += full.s(a, b) * fd[j][b];
                    Cyclotomic rhs;
                    for (size_t i = 0; i < basis.size(); ++i)
                        if (!fd[i][a].is_zero()) rhs += r.s(i, j) * fd[i][a];
                    if (lhs != rhs) residual_zero = false;
                }
            }
            CHECK(residual_zero);
            // phi_kappa maps V^chi into V^conj(chi).
            std::vector<uint32_t> kap(n);
            for (size_t a = 0; a < n; ++a) kap[a] = static_cast<uint32_t>(m.kappa(a));
            for (const auto& b : basis) {
                auto v = dense(m, permute(b, kap));
                for (size_t e = 0; e < g.size(); ++e)
                    for (size_t a = 0; a < n; ++a)
                        CHECK(v[g.action[e][a]] == chi.value(e).conj() * v[a]);
            }
        }
    }
}

TEST_CASE("large module relation checks")
{
    auto d16 = QuadModule::make(ModuleKind::D, 2, 4);
    CHECK(check_weil(d16).ok());
    auto u = QuadModule::make(ModuleKind::Unary, 3, 5);
    WeilCheck wc = check_weil(u);
    CHECK(wc.ok());
    CHECK(wc.gauss_magnitude);
}
