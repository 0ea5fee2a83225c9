#include "sl2reps/linalg.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "sl2reps/field.hpp"

namespace sl2reps {

ExactRref exact_rref(const std::vector<ExactRow>& rows, size_t ncols)
{
    ExactRref out;
    std::vector<Cyclotomic> work(ncols);
    for (const auto& row : rows) {
        std::fill(work.begin(), work.end(), Cyclotomic());
        bool nz = false;
        for (const auto& [c, v] : row) {
            work[c] += v;
            nz = true;
        }
        if (!nz) continue;
        for (size_t b = 0; b < out.rows.size(); ++b) {
            Cyclotomic f = work[out.pivot_cols[b]];
            if (f.is_zero()) continue;
            const auto& br = out.rows[b];
            for (size_t c = 0; c < ncols; ++c)
                if (!br[c].is_zero()) work[c] -= f * br[c];
        }
        size_t piv = ncols;
        for (size_t c = 0; c < ncols; ++c)
            if (!work[c].is_zero()) {
                piv = c;
                break;
            }
        if (piv == ncols) continue;
        Cyclotomic iv = work[piv].inverse();
        for (size_t c = 0; c < ncols; ++c)
            if (!work[c].is_zero()) work[c] *= iv;
        for (auto& br : out.rows) {
            Cyclotomic f = br[piv];
            if (f.is_zero()) continue;
            for (size_t c = 0; c < ncols; ++c)
                if (!work[c].is_zero()) br[c] -= f * work[c];
        }
        out.rows.push_back(work);
        out.pivot_cols.push_back(piv);
    }
    return out;
}

std::vector<std::vector<Cyclotomic>> nullspace(const ExactRref& r, size_t ncols)
{
    std::vector<char> is_pivot(ncols, 0);
    for (size_t c : r.pivot_cols) is_pivot[c] = 1;
    std::vector<std::vector<Cyclotomic>> out;
    for (size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Cyclotomic> v(ncols);
        v[f] = Cyclotomic(1);
        for (size_t b = 0; b < r.rows.size(); ++b) v[r.pivot_cols[b]] = -r.rows[b][f];
        out.push_back(std::move(v));
    }
    return out;
}

bool is_intertwiner(const CMatrix& X, const Rep& from, const Rep& to)
{
    if (X.rows() != to.dim() || X.cols() != from.dim()) return false;
    for (size_t i = 0; i < X.rows(); ++i)
        for (size_t k = 0; k < X.cols(); ++k)
            if (!X(i, k).is_zero() && to.t[i] != from.t[k]) return false;
    return X * from.s == to.s * X;
}

namespace {

long joint_conductor(const std::vector<const CMatrix*>& ms, const std::vector<const std::vector<Cyclotomic>*>& vs)
{
    long L = 1;
    for (const auto* m : ms) L = detail::lcm_long(L, m->common_conductor());
    for (const auto* v : vs)
        for (const auto& x : *v) L = detail::lcm_long(L, x.conductor());
    return L;
}

// Runs `fn` with successive modular fields until no denominator vanishes.
template <class Fn>
auto with_field(long L, Fn fn)
{
    for (int which = 0;; ++which) {
        try {
            return fn(make_modular_field(L, which));
        } catch (const std::domain_error&) {
            if (which >= 3) throw;
        }
    }
}

struct System {
    size_t d1 = 0, d2 = 0;
    std::vector<long> uid;  // (i * d1 + k) -> unknown index or -1
    size_t unknowns = 0;
    // equations as (i, j) pairs with terms (unknown, source entry, sign)
    struct Term {
        size_t unknown;
        const Cyclotomic* value;
        bool negate;
    };
    std::vector<std::vector<Term>> rows;
};

System build_system(const Rep& from, const Rep& to)
{
    System sys;
    sys.d1 = from.dim();
    sys.d2 = to.dim();
    sys.uid.assign(sys.d1 * sys.d2, -1);
    for (size_t i = 0; i < sys.d2; ++i)
        for (size_t k = 0; k < sys.d1; ++k)
            if (to.t[i] == from.t[k]) sys.uid[i * sys.d1 + k] = static_cast<long>(sys.unknowns++);
    // (X S1 - S2 X)_{ij} = sum_k X_ik S1_kj - sum_k S2_ik X_kj
    for (size_t i = 0; i < sys.d2; ++i)
        for (size_t j = 0; j < sys.d1; ++j) {
            std::vector<System::Term> row;
            for (size_t k = 0; k < sys.d1; ++k) {
                long u = sys.uid[i * sys.d1 + k];
                if (u >= 0 && !from.s(k, j).is_zero()) row.push_back({static_cast<size_t>(u), &from.s(k, j), false});
            }
            for (size_t k = 0; k < sys.d2; ++k) {
                long u = sys.uid[k * sys.d1 + j];
                if (u >= 0 && !to.s(i, k).is_zero()) row.push_back({static_cast<size_t>(u), &to.s(i, k), true});
            }
            if (!row.empty()) sys.rows.push_back(std::move(row));
        }
    return sys;
}

ExactRow exact_row(const std::vector<System::Term>& terms)
{
    std::map<size_t, Cyclotomic> acc;
    for (const auto& t : terms) {
        if (t.negate) acc[t.unknown] -= *t.value;
        else acc[t.unknown] += *t.value;
    }
    ExactRow row;
    for (auto& [c, v] : acc)
        if (!v.is_zero()) row.emplace_back(c, v);
    return row;
}

CMatrix to_matrix(const System& sys, const std::vector<Cyclotomic>& v)
{
    CMatrix X(sys.d2, sys.d1);
    for (size_t i = 0; i < sys.d2; ++i)
        for (size_t k = 0; k < sys.d1; ++k) {
            long u = sys.uid[i * sys.d1 + k];
            if (u >= 0) X(i, k) = v[u];
        }
    return X;
}

// need_exact(nullity_mod_q) says whether the modular bound alone is not enough.
IntertwinerSpace solve(const Rep& from, const Rep& to, const std::function<bool(size_t)>& need_exact)
{
    IntertwinerSpace res;
    System sys = build_system(from, to);
    res.unknowns = sys.unknowns;
    res.equations = sys.rows.size();
    if (sys.unknowns == 0) {
        res.dimension = 0;
        return res;
    }
    long L = joint_conductor({&from.s, &to.s}, {&from.t, &to.t});
    ModRankResult mr = with_field(L, [&](const ModularField& F) {
        std::vector<ModRow> rows;
        rows.reserve(sys.rows.size());
        for (const auto& r : sys.rows) {
            ModRow mrow;
            for (const auto& t : r) {
                uint64_t v = F.map(*t.value);
                mrow.emplace_back(t.unknown, t.negate ? F.sub(0, v) : v);
            }
            rows.push_back(std::move(mrow));
        }
        return rank_mod(F, rows, sys.unknowns, sys.unknowns);
    });
    res.nullity_mod_q = sys.unknowns - mr.rank;
    if (res.nullity_mod_q == 0) {
        res.dimension = 0;
        return res;
    }
    if (!need_exact(res.nullity_mod_q)) return res;

    std::vector<ExactRow> pivots;
    for (size_t ri : mr.pivot_rows) pivots.push_back(exact_row(sys.rows[ri]));
    auto ns = nullspace(exact_rref(pivots, sys.unknowns), sys.unknowns);
    bool all_ok = true;
    for (const auto& v : ns) {
        CMatrix X = to_matrix(sys, v);
        if (!is_intertwiner(X, from, to)) {
            all_ok = false;
            break;
        }
        res.basis.push_back(std::move(X));
    }
    if (!all_ok) {
        // The modular prime lost rank; eliminate over every equation.
        std::vector<ExactRow> rows;
        for (const auto& r : sys.rows) rows.push_back(exact_row(r));
        ns = nullspace(exact_rref(rows, sys.unknowns), sys.unknowns);
        res.basis.clear();
        for (const auto& v : ns) res.basis.push_back(to_matrix(sys, v));
    }
    res.dimension = res.basis.size();
    return res;
}

}  // namespace

IntertwinerSpace intertwiners(const Rep& from, const Rep& to, bool exact_basis)
{
    return solve(from, to, [&](size_t) { return exact_basis; });
}

IrreducibilityResult is_irreducible(const Rep& r)
{
    IrreducibilityResult out;
    // The identity always commutes, so a modular nullity of 1 settles it.
    IntertwinerSpace sp = solve(r, r, [](size_t nul) { return nul > 1; });
    out.commutant_dim = sp.dimension ? *sp.dimension : sp.nullity_mod_q;
    if (r.dim() > 0 && out.commutant_dim == 0) throw std::logic_error("commutant lost the identity");
    out.certified = true;
    out.irreducible = out.commutant_dim == 1;
    return out;
}

bool certainly_invertible(const CMatrix& m)
{
    if (m.rows() != m.cols()) return false;
    size_t n = m.rows();
    if (n == 0) return true;
    long L = m.common_conductor();
    return with_field(L, [&](const ModularField& F) {
        std::vector<ModRow> rows(n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (!m(i, j).is_zero()) rows[i].emplace_back(j, F.map(m(i, j)));
        return rank_mod(F, rows, n, n).rank == n;
    });
}

namespace {

bool exactly_invertible(const CMatrix& m)
{
    if (certainly_invertible(m)) return true;
    std::vector<ExactRow> rows(m.rows());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) rows[i].emplace_back(j, m(i, j));
    return exact_rref(rows, m.cols()).pivot_cols.size() == m.rows();
}

}  // namespace

EquivalenceResult are_equivalent(const Rep& a, const Rep& b)
{
    EquivalenceResult out;
    out.certified = true;
    if (a.dim() != b.dim()) return out;
    std::vector<Cyclotomic> ta = a.t, tb = b.t;
    auto less = [](const Cyclotomic& x, const Cyclotomic& y) { return x.canonical_less(y); };
    std::sort(ta.begin(), ta.end(), less);
    std::sort(tb.begin(), tb.end(), less);
    if (ta != tb) return out;
    IntertwinerSpace sp = solve(a, b, [](size_t) { return true; });
    if (sp.basis.empty()) return out;
    CMatrix X = sp.basis[0];
    for (size_t k = 1; k < sp.basis.size() && !certainly_invertible(X); ++k)
        X = X + sp.basis[k].scaled(Cyclotomic(static_cast<long>(k + 1)));
    if (exactly_invertible(X)) {
        out.equivalent = true;
        out.intertwiner = X;
        return out;
    }
    // One-dimensional space: every intertwiner is a multiple of a singular one.
    out.certified = sp.basis.size() == 1;
    return out;
}

}  // namespace sl2reps
