#include "sl2reps/weil.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sl2reps {

namespace {

long mod_pos(long a, long n)
{
    long r = a % n;
    return r < 0 ? r + n : r;
}

// Smallest multiple of n that is a valid conductor (not 2 mod 4).
long working_modulus(long n) { return n % 4 == 2 ? 2 * n : n; }

// Power-basis numerators at conductor n of sum_e cnt[e] zeta_n^e.
void reduce_counts(long n, const std::vector<int64_t>& cnt, std::vector<int64_t>& out)
{
    long f = detail::phi(n);
    out.assign(cnt.begin(), cnt.end());
    const auto& tail = detail::cyclotomic_poly_tail(n);
    for (long k = n - 1; k >= f; --k) {
        int64_t v = out[k];
        if (v == 0) continue;
        out[k] = 0;
        for (const auto& [e, a] : tail) out[k - f + e] -= v * a;
    }
    out.resize(f);
}

bool all_zero(const std::vector<int64_t>& v)
{
    for (auto x : v)
        if (x != 0) return false;
    return true;
}

// Sparse power-basis terms of x at its own conductor, with the common denominator.
struct SparseElem {
    long n = 1;
    std::vector<std::pair<long, int64_t>> terms;
    mpz_class den = 1;
    bool small = true;
};

SparseElem sparse_of(const Cyclotomic& x)
{
    SparseElem s;
    s.n = x.conductor();
    s.den = x.denominator();
    const auto& num = x.numerators();
    for (size_t k = 0; k < num.size(); ++k) {
        if (num[k] == 0) continue;
        if (!num[k].fits_slong_p() || abs(num[k]) > (mpz_class(1) << 40)) s.small = false;
        s.terms.emplace_back(static_cast<long>(k), s.small ? num[k].get_si() : 0);
    }
    return s;
}

// x * (sum_e cnt[e] zeta_N^e) for the touched exponents.
Cyclotomic multiply_counts(const Cyclotomic& x, const SparseElem& sx, long N, const std::vector<int64_t>& cnt,
                           const std::vector<long>& touched, std::vector<int64_t>& acc)
{
    bool any = false;
    for (long e : touched)
        if (cnt[e] != 0) any = true;
    if (!any || x.is_zero()) return Cyclotomic();
    long C = detail::lcm_long(sx.n, N);
    if (sx.small) {
        acc.assign(C, 0);
        long fp = C / sx.n, fc = C / N;
        for (const auto& [kp, vp] : sx.terms)
            for (long e : touched) {
                if (cnt[e] == 0) continue;
                long idx = (kp * fp + e * fc) % C;
                acc[idx] += vp * cnt[e];
            }
        return Cyclotomic::from_counts(C, acc, sx.den);
    }
    std::vector<mpz_class> c(N);
    for (long e : touched) c[e] = static_cast<long>(cnt[e]);
    return x * Cyclotomic::from_counts(N, c);
}

}  // namespace

Cyclotomic gauss_sum(const QuadModule& m)
{
    long L = m.level();
    std::vector<int64_t> cnt(L, 0);
    for (size_t a = 0; a < m.size(); ++a) ++cnt[m.q_num(a)];
    return Cyclotomic::from_counts(L, cnt);
}

Cyclotomic weil_scalar(const QuadModule& m)
{
    return gauss_sum(m).scaled(mpq_class(1, static_cast<long>(m.size())));
}

Rep weil_matrices(const QuadModule& m, size_t max_size)
{
    size_t n = m.size();
    if (n > max_size) throw std::length_error("module too large for dense Weil matrices");
    long L = m.level();
    Cyclotomic c = weil_scalar(m);
    std::vector<Cyclotomic> table(L);
    for (long e = 0; e < L; ++e) table[e] = c * root_of_unity(e, L);
    CMatrix s(n, n);
    std::vector<Cyclotomic> t(n);
    std::vector<std::string> labels(n);
    for (size_t a = 0; a < n; ++a) {
        t[a] = root_of_unity(m.q_num(a), L);
        labels[a] = "delta_" + m.element_name(a);
        for (size_t b = 0; b < n; ++b) s(b, a) = table[m.b_num(a, b)];
    }
    nlohmann::json prov = {{"family", "weil"}, {"module", m.descriptor()}};
    return make_rep(std::move(labels), std::move(s), std::move(t), prov);
}

std::string WeilCheck::summary() const
{
    std::ostringstream os;
    os << "symmetric=" << symmetric << " unitary=" << unitary << " s^4=I:" << s_fourth
       << " (s^-1 t)^3=s^2:" << presentation << " level=" << level_matches << " |gamma|^2=|M|:" << gauss_magnitude;
    return os.str();
}

WeilCheck check_weil(const QuadModule& m)
{
    WeilCheck r;
    const size_t n = m.size();
    const long L = m.level();
    const long W = working_modulus(L);
    const long sc = W / L;
    std::vector<uint16_t> B(n * n), BT(n * n);
    std::vector<long> Q(n);
    for (size_t a = 0; a < n; ++a) Q[a] = m.q_num(a) * sc;
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) B[a * n + b] = static_cast<uint16_t>(m.b_num(a, b) * sc);
    r.symmetric = true;
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) {
            BT[b * n + a] = B[a * n + b];
            if (B[a * n + b] != B[b * n + a]) r.symmetric = false;
        }

    long lev = 1;
    for (size_t a = 0; a < n; ++a) lev = std::lcm(lev, L / std::gcd(m.q_num(a), L));
    r.level_matches = lev == L;

    Cyclotomic gamma = gauss_sum(m);
    r.gauss_magnitude = gamma * gamma.conj() == Cyclotomic(static_cast<long>(n));
    Cyclotomic c = gamma.scaled(mpq_class(1, static_cast<long>(n)));
    Cyclotomic cc = c * c.conj();

    // Unitarity target: sum_k zeta^(B(k,i)-B(k,j)) = delta_ij / |c|^2.
    bool unit_possible = cc.is_rational() && !cc.is_zero();
    int64_t diag_target = 0;
    if (unit_possible) {
        mpq_class inv = 1 / cc.rational_value();
        if (inv.get_den() != 1 || !inv.get_num().fits_slong_p())
            unit_possible = false;
        else
            diag_target = inv.get_num().get_si();
    }

    // Relation target: sum_k zeta^(B(j,k)-B(i,k)-Q(k)) = (1/c) zeta^(Q(i)+Q(j)-B(i,j)).
    Cyclotomic w = c.inverse();
    bool rel_possible = w.denominator() == 1;
    long C = detail::lcm_long(W, w.conductor());
    long fC = detail::phi(C);
    std::vector<std::vector<int64_t>> target(W);
    if (rel_possible) {
        for (long e = 0; e < W; ++e) {
            Cyclotomic x = w * root_of_unity(e, W);
            std::vector<mpz_class> num = x.embed_numerators(C);
            target[e].assign(fC, 0);
            for (long k = 0; k < fC; ++k) {
                if (!num[k].fits_slong_p() || x.denominator() != 1) rel_possible = false;
                else target[e][k] = num[k].get_si();
            }
        }
    }

    bool unitary = unit_possible, relation = rel_possible, monomial = true;
    std::vector<long> sq_col(n, -1);
    std::vector<std::vector<int64_t>> sq_val(n);
    std::vector<int64_t> cu(W), cs(W), cr(W), red, embed(C);
    for (size_t i = 0; i < n; ++i) {
        const uint16_t* Bi = &B[i * n];
        const uint16_t* BTi = &BT[i * n];
        for (size_t j = 0; j < n; ++j) {
            const uint16_t* Bj = &B[j * n];
            const uint16_t* BTj = &BT[j * n];
            std::fill(cu.begin(), cu.end(), 0);
            std::fill(cs.begin(), cs.end(), 0);
            std::fill(cr.begin(), cr.end(), 0);
            for (size_t k = 0; k < n; ++k) {
                long du = static_cast<long>(BTi[k]) - BTj[k];
                ++cu[du < 0 ? du + W : du];
                long ds = static_cast<long>(BTi[k]) + Bj[k];
                ++cs[ds >= W ? ds - W : ds];
                long dr = static_cast<long>(Bj[k]) - Bi[k] - Q[k];
                dr += (dr < 0) * W;
                dr += (dr < 0) * W;
                ++cr[dr];
            }
            if (unitary) {
                reduce_counts(W, cu, red);
                for (size_t k = 0; k < red.size(); ++k) {
                    int64_t want = (i == j && k == 0) ? diag_target : 0;
                    if (red[k] != want) unitary = false;
                }
            }
            reduce_counts(W, cs, red);
            if (!all_zero(red)) {
                if (sq_col[i] >= 0) monomial = false;
                sq_col[i] = static_cast<long>(j);
                sq_val[i] = red;
            }
            if (relation) {
                std::fill(embed.begin(), embed.end(), 0);
                for (long e = 0; e < W; ++e) embed[e * (C / W)] += cr[e];
                reduce_counts(C, embed, red);
                long e = mod_pos(Q[i] + Q[j] - B[i * n + j], W);
                if (red != target[e]) relation = false;
            }
        }
    }
    r.unitary = unitary;
    r.presentation = relation;
    if (monomial) {
        Cyclotomic c2 = c * c;
        std::vector<Cyclotomic> v(n);
        bool ok = true;
        for (size_t i = 0; i < n && ok; ++i) {
            if (sq_col[i] < 0) {
                ok = false;
                break;
            }
            std::vector<mpz_class> z(sq_val[i].size());
            for (size_t k = 0; k < z.size(); ++k) z[k] = static_cast<long>(sq_val[i][k]);
            v[i] = c2 * Cyclotomic::from_counts(W, z);
        }
        if (ok) {
            bool fourth = true, ident = true;
            for (size_t i = 0; i < n; ++i) {
                size_t j = static_cast<size_t>(sq_col[i]);
                if (j != i || !v[i].is_one()) ident = false;
                if (static_cast<size_t>(sq_col[j]) != i || !(v[i] * v[j]).is_one()) fourth = false;
            }
            r.s_fourth = fourth;
            r.s_squared_identity = ident;
        }
    }
    return r;
}

// ---------------------------------------------------------------------------

void RootVector::rescale(long newE)
{
    if (newE % E != 0) throw std::invalid_argument("rescale target must be a multiple");
    long f = newE / E;
    for (auto& t : terms) t.k = static_cast<int32_t>(t.k * f);
    E = newE;
}

void RootVector::compress()
{
    for (auto& t : terms) t.k = static_cast<int32_t>(mod_pos(t.k, E));
    std::sort(terms.begin(), terms.end(), [](const RootTerm& x, const RootTerm& y) {
        return x.a != y.a ? x.a < y.a : x.k < y.k;
    });
    std::vector<RootTerm> out;
    for (const auto& t : terms) {
        if (!out.empty() && out.back().a == t.a && out.back().k == t.k)
            out.back().mult += t.mult;
        else
            out.push_back(t);
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const RootTerm& t) { return t.mult == 0; }), out.end());
    terms = std::move(out);
}

LabeledVector RootVector::expand() const
{
    LabeledVector lv;
    lv.label = label;
    long N = working_modulus(E);
    std::map<size_t, std::vector<int64_t>> acc;
    for (const auto& t : terms) {
        auto& v = acc[t.a];
        if (v.empty()) v.assign(N, 0);
        v[mod_pos(t.k * (N / E), N)] += t.mult;
    }
    for (auto& [a, v] : acc) {
        Cyclotomic x = Cyclotomic::from_counts(N, v) * scale;
        if (!x.is_zero()) lv.coeffs[a] = x;
    }
    return lv;
}

RootVector times_root(const RootVector& v, long k, long n)
{
    RootVector out = v;
    out.rescale(detail::lcm_long(v.E, n));
    long f = out.E / n;
    for (auto& t : out.terms) t.k = static_cast<int32_t>(mod_pos(t.k + k * f, out.E));
    return out;
}

RootVector add_vectors(const RootVector& v, const RootVector& w)
{
    if (v.scale != w.scale) throw std::invalid_argument("add_vectors needs equal scales");
    RootVector a = v, b = w;
    long E = detail::lcm_long(v.E, w.E);
    a.rescale(E);
    b.rescale(E);
    a.terms.insert(a.terms.end(), b.terms.begin(), b.terms.end());
    a.compress();
    return a;
}

RootVector scaled_vector(const RootVector& v, const Cyclotomic& c)
{
    RootVector out = v;
    out.scale = v.scale * c;
    return out;
}

RootVector permute(const RootVector& v, const std::vector<uint32_t>& perm)
{
    RootVector out = v;
    for (auto& t : out.terms) t.a = perm[t.a];
    out.compress();
    return out;
}

RootVector conj_vector(const RootVector& v)
{
    RootVector out = v;
    out.scale = v.scale.conj();
    for (auto& t : out.terms) t.k = static_cast<int32_t>(mod_pos(-t.k, out.E));
    out.compress();
    return out;
}

bool same_function(const RootVector& v, const RootVector& w)
{
    LabeledVector a = v.expand(), b = w.expand();
    return a.coeffs == b.coeffs;
}

Cyclotomic inner_product(const RootVector& v, const RootVector& w)
{
    long E = detail::lcm_long(v.E, w.E);
    long N = working_modulus(E);
    long fv = N / v.E, fw = N / w.E;
    std::map<uint32_t, std::vector<const RootTerm*>> byA;
    for (const auto& t : w.terms) byA[t.a].push_back(&t);
    std::vector<int64_t> cnt(N, 0);
    bool any = false;
    for (const auto& t : v.terms) {
        auto it = byA.find(t.a);
        if (it == byA.end()) continue;
        for (const RootTerm* u : it->second) {
            cnt[mod_pos(static_cast<long>(t.k) * fv - static_cast<long>(u->k) * fw, N)] +=
                static_cast<int64_t>(t.mult) * u->mult;
            any = true;
        }
    }
    if (!any) return Cyclotomic();
    return Cyclotomic::from_counts(N, cnt) * (v.scale * w.scale.conj());
}

CMatrix gram_matrix(const std::vector<RootVector>& basis)
{
    size_t n = basis.size();
    CMatrix G(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) G(i, j) = inner_product(basis[i], basis[j]);
    return G;
}

CMatrix change_of_basis(const std::vector<RootVector>& from, const std::vector<RootVector>& to)
{
    CMatrix U(from.size(), to.size());
    for (size_t i = 0; i < from.size(); ++i)
        for (size_t j = 0; j < to.size(); ++j) U(i, j) = inner_product(to[j], from[i]);
    return U;
}

Rep restrict_weil(const QuadModule& m, const std::vector<RootVector>& basis_in, nlohmann::json provenance)
{
    size_t d = basis_in.size();
    long L = m.level();
    long E = 1;
    for (const auto& v : basis_in) E = detail::lcm_long(E, v.E);
    std::vector<RootVector> basis = basis_in;
    for (auto& v : basis) {
        v.rescale(E);
        v.compress();
        if (v.terms.empty()) throw std::domain_error("zero basis vector: " + v.label);
    }
    long N = working_modulus(detail::lcm_long(E, L));
    long fE = N / E, fL = N / L;

    std::vector<Cyclotomic> t(d);
    std::vector<std::string> labels(d);
    for (size_t i = 0; i < d; ++i) {
        long q = m.q_num(basis[i].terms[0].a);
        for (const auto& term : basis[i].terms)
            if (m.q_num(term.a) != q) throw std::domain_error("basis vector is not a t-eigenvector: " + basis[i].label);
        t[i] = root_of_unity(q, L);
        labels[i] = basis[i].label;
    }

    Cyclotomic c = weil_scalar(m);
    std::vector<Cyclotomic> scales;
    std::vector<size_t> sidx(d);
    for (size_t i = 0; i < d; ++i) {
        size_t k = 0;
        while (k < scales.size() && scales[k] != basis[i].scale) ++k;
        if (k == scales.size()) scales.push_back(basis[i].scale);
        sidx[i] = k;
    }
    size_t ns = scales.size();
    std::vector<Cyclotomic> pref(ns * ns);
    std::vector<SparseElem> spref(ns * ns);
    for (size_t a = 0; a < ns; ++a)
        for (size_t b = 0; b < ns; ++b) {
            // row scale a (conjugated), column scale b
            pref[a * ns + b] = c * scales[b] * scales[a].conj();
            spref[a * ns + b] = sparse_of(pref[a * ns + b]);
        }

    CMatrix s(d, d);
    std::vector<int64_t> cnt(N, 0), acc;
    std::vector<long> touched;
    std::vector<char> mark(N, 0);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) {
            touched.clear();
            for (const auto& tj : basis[j].terms)
                for (const auto& ti : basis[i].terms) {
                    long e = mod_pos((static_cast<long>(tj.k) - ti.k) * fE + m.b_num(tj.a, ti.a) * fL, N);
                    cnt[e] += static_cast<int64_t>(tj.mult) * ti.mult;
                    if (!mark[e]) {
                        mark[e] = 1;
                        touched.push_back(e);
                    }
                }
            size_t pi = sidx[i] * ns + sidx[j];
            s(i, j) = multiply_counts(pref[pi], spref[pi], N, cnt, touched, acc);
            for (long e : touched) {
                cnt[e] = 0;
                mark[e] = 0;
            }
        }
    return make_rep(std::move(labels), std::move(s), std::move(t), std::move(provenance));
}

// ---------------------------------------------------------------------------

OrbitData orbit_reps(const QuadModule& m, const AutGroup& g, const Character& chi)
{
    OrbitData od;
    size_t n = m.size();
    const size_t none = static_cast<size_t>(-1);
    od.rep_of.assign(n, none);
    auto open = [&](size_t a) {
        od.theta.push_back(a);
        for (size_t e = 0; e < g.size(); ++e) od.rep_of[g.action[e][a]] = a;
        size_t st = 0;
        for (size_t e = 0; e < g.size(); ++e)
            if (g.action[e][a] == a) ++st;
        od.stab_size[a] = st;
    };
    for (size_t a = 0; a < n; ++a) {
        if (od.rep_of[a] != none) continue;
        open(a);
        size_t b = m.kappa(a);
        if (od.rep_of[b] == none) open(b);
    }
    for (size_t a : od.theta) {
        bool ok = true;
        for (size_t e = 0; e < g.size() && ok; ++e)
            if (g.action[e][a] == a && chi.values[e] != 0) ok = false;
        if (ok) od.theta_chi.push_back(a);
    }
    std::sort(od.theta_chi.begin(), od.theta_chi.end());
    for (size_t a : od.theta_chi) {
        size_t ka = m.kappa(a);
        if (od.rep_of[ka] == a) {
            od.theta1.push_back(a);
            for (size_t e = 0; e < g.size(); ++e)
                if (g.action[e][a] == ka) {
                    od.mu[a] = e;
                    break;
                }
        } else {
            if (od.rep_of[ka] != ka) throw std::logic_error("kappa-closure of representatives violated");
            if (a < ka)
                od.theta2.push_back(a);
            else
                od.kappa_theta2.push_back(a);
        }
    }
    return od;
}

RootVector ftilde(const QuadModule& m, const AutGroup& g, const Character& chi, size_t a)
{
    RootVector v;
    v.label = "ftilde_" + m.element_name(a);
    v.E = chi.E;
    for (size_t e = 0; e < g.size(); ++e)
        v.terms.push_back({g.action[e][a], static_cast<int32_t>(chi.values[e]), 1});
    v.compress();
    return v;
}

RootVector f_chi(const QuadModule& m, const AutGroup& g, const Character& chi, size_t a, size_t stab)
{
    RootVector v = ftilde(m, g, chi, a);
    v.label = "f_" + m.element_name(a);
    v.scale = sqrt_rational(mpq_class(1, static_cast<long>(g.size() * stab)));
    return v;
}

std::vector<RootVector> character_basis(const QuadModule& m, const AutGroup& g, const Character& chi,
                                        const OrbitData& od)
{
    std::vector<RootVector> out;
    for (const auto* part : {&od.theta1, &od.theta2, &od.kappa_theta2})
        for (size_t a : *part) out.push_back(f_chi(m, g, chi, a, od.stab_size.at(a)));
    return out;
}

nlohmann::json character_provenance(const QuadModule& m, const Character& chi)
{
    nlohmann::json j;
    j["module"] = m.descriptor();
    j["chi"] = {{"exponents", chi.k}, {"order", chi.order}, {"index", chi.index}};
    return j;
}

Rep subspace_rep(const QuadModule& m, const AutGroup& g, const Character& chi)
{
    OrbitData od = orbit_reps(m, g, chi);
    if (od.theta_chi.empty()) throw std::domain_error("zero subspace");
    nlohmann::json prov = character_provenance(m, chi);
    prov["family"] = "weil_character";
    return restrict_weil(m, character_basis(m, g, chi, od), prov);
}

}  // namespace sl2reps
