#include "doctest.h"
#include "sl2reps/irreps.hpp"
#include "sl2reps/linalg.hpp"
#include "sl2reps/weil.hpp"

using namespace sl2reps;

namespace {

struct Primitive {
    QuadModule m;
    AutGroup g;
    std::vector<Character> chars;
    size_t index;
};

// First primitive non-involutive character of the module.
Primitive primitive_of(const QuadModule& m)
{
    AutGroup g = aut_group(m);
    auto chars = characters(m, g);
    for (size_t i = 0; i < chars.size(); ++i)
        if (chars[i].is_primitive.value_or(false) && !chars[i].is_involution) return {m, g, chars, i};
    throw std::logic_error("no primitive character");
}

// Reorders the basis of r by perm: new index i holds old index perm[i].
Rep permuted(const Rep& r, const std::vector<size_t>& perm)
{
    size_t n = r.dim();
    CMatrix s(n, n);
    std::vector<Cyclotomic> t(n);
    std::vector<std::string> labels(n);
    for (size_t i = 0; i < n; ++i) {
        t[i] = r.t[perm[i]];
        labels[i] = r.labels[perm[i]];
        for (size_t j = 0; j < n; ++j) s(i, j) = r.s(perm[i], perm[j]);
    }
    return make_rep(labels, s, t);
}

// Orbits of A whose stabilizer lies in ker chi, counted straight from the action table.
size_t orbit_count(const Primitive& pr)
{
    const auto& chi = pr.chars[pr.index];
    std::vector<char> seen(pr.m.size(), 0);
    size_t count = 0;
    for (size_t a = 0; a < pr.m.size(); ++a) {
        if (seen[a]) continue;
        bool ok = true;
        for (size_t e = 0; e < pr.g.size(); ++e) {
            seen[pr.g.action[e][a]] = 1;
            if (pr.g.action[e][a] == a && chi.values[e] % chi.E != 0) ok = false;
        }
        if (ok) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("exact row reduction")
{
    // Rows (1, 2, 3), (2, 4, 6), (0, 1, i): rank 2, kernel spanned by (-3 + 2i, -i, 1).
    Cyclotomic i = imag_unit();
    std::vector<ExactRow> rows = {{{0, 1}, {1, 2}, {2, 3}}, {{0, 2}, {1, 4}, {2, 6}}, {{1, 1}, {2, i}}};
    ExactRref r = exact_rref(rows, 3);
    CHECK(r.pivot_cols == std::vector<size_t>{0, 1});
    auto ns = nullspace(r, 3);
    REQUIRE(ns.size() == 1);
    CHECK(ns[0][0] == Cyclotomic(-3) + Cyclotomic(2) * i);
    CHECK(ns[0][1] == -i);
    CHECK(ns[0][2] == Cyclotomic(1));
}

TEST_CASE("irreducibility")
{
    auto tr = is_irreducible(trivial_rep());
    CHECK(tr.irreducible);
    CHECK(tr.commutant_dim == 1);

    auto d5 = QuadModule::make(ModuleKind::D, 5, 1);
    auto g = aut_group(d5);
    auto chars = characters(d5, g);
    auto triv = is_irreducible(subspace_rep(d5, g, chars.front()));
    CHECK_FALSE(triv.irreducible);
    CHECK(triv.commutant_dim >= 2);
    // The full Weil representation has a large commutant.
    CHECK(is_irreducible(weil_matrices(d5)).commutant_dim > 2);
}

TEST_CASE("primitive non-involutive characters give irreducible representations")
{
    struct Case {
        ModuleKind kind;
        long p;
        int lambda;
        size_t dim;  // 0: use the orbit count only
    };
    Case cases[] = {{ModuleKind::D, 5, 1, 6}, {ModuleKind::N, 5, 1, 4}, {ModuleKind::D, 3, 2, 0}, {ModuleKind::N, 3, 2, 0}};
    for (const auto& c : cases) {
        auto pr = primitive_of(QuadModule::make(c.kind, c.p, c.lambda));
        INFO(pr.m.name() << " " << pr.chars[pr.index].name());
        Rep w = subspace_rep(pr.m, pr.g, pr.chars[pr.index]);
        if (c.dim) CHECK(w.dim() == c.dim);
        CHECK(w.dim() == orbit_count(pr));
        auto ir = is_irreducible(w);
        CHECK(ir.irreducible);
        CHECK(ir.commutant_dim == 1);
        Rep wc = subspace_rep(pr.m, pr.g, pr.chars[conjugate_index(pr.chars, pr.index)]);
        auto eq = are_equivalent(w, wc);
        CHECK(eq.equivalent);
        REQUIRE(eq.intertwiner.has_value());
        CHECK(is_intertwiner(*eq.intertwiner, w, wc));
    }
}

TEST_CASE("equivalence")
{
    auto pr = primitive_of(QuadModule::make(ModuleKind::D, 5, 1));
    Rep w = subspace_rep(pr.m, pr.g, pr.chars[pr.index]);
    CHECK(are_equivalent(w, w).equivalent);
    std::vector<size_t> perm = {3, 1, 5, 0, 2, 4};
    auto eq = are_equivalent(w, permuted(w, perm));
    CHECK(eq.equivalent);
    CHECK(is_intertwiner(*eq.intertwiner, w, permuted(w, perm)));
    auto n5 = primitive_of(QuadModule::make(ModuleKind::N, 5, 1));
    Rep v = subspace_rep(n5.m, n5.g, n5.chars[n5.index]);
    auto ne = are_equivalent(w, v);
    CHECK_FALSE(ne.equivalent);
    CHECK(ne.certified);
    // Same degree, different characters of D_5 that are not conjugate.
    for (size_t i = 0; i < pr.chars.size(); ++i) {
        if (i == pr.index || i == conjugate_index(pr.chars, pr.index)) continue;
        if (!pr.chars[i].is_primitive.value_or(false) || pr.chars[i].is_involution) continue;
        CHECK_FALSE(are_equivalent(w, subspace_rep(pr.m, pr.g, pr.chars[i])).equivalent);
    }
}

TEST_CASE("intertwiner spaces")
{
    Rep w = weil_matrices(QuadModule::make(ModuleKind::D, 3, 1));
    auto sp = intertwiners(w, w, true);
    REQUIRE(sp.dimension.has_value());
    CHECK(*sp.dimension == sp.basis.size());
    CHECK(sp.nullity_mod_q >= *sp.dimension);
    for (const auto& X : sp.basis) CHECK(is_intertwiner(X, w, w));
    CHECK(certainly_invertible(CMatrix::identity(4)));
    CHECK_FALSE(certainly_invertible(CMatrix(2, 2)));
}
