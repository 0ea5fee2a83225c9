#include "sl2reps/symm.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace sl2reps {

namespace {

RootVector delta(const QuadModule& m, size_t a)
{
    RootVector v;
    v.label = "delta_" + m.element_name(a);
    v.terms.push_back({static_cast<uint32_t>(a), 0, 1});
    return v;
}

RootVector negated(const RootVector& v) { return times_root(v, 1, 2); }

RootVector difference(const RootVector& v, const RootVector& w)
{
    RootVector d = add_vectors(v, negated(w));
    d.label = v.label + "-" + w.label;
    return d;
}

RootVector sum(const RootVector& v, const RootVector& w)
{
    RootVector d = add_vectors(v, w);
    d.label = v.label + "+" + w.label;
    return d;
}

mpq_class norm_squared(const RootVector& v)
{
    Cyclotomic n2 = inner_product(v, v);
    if (!n2.is_rational() || n2.rational_value() <= 0) throw std::logic_error("basis vector norm is not a positive rational");
    return n2.rational_value();
}

RootVector normalized(RootVector v)
{
    mpq_class n2 = norm_squared(v);
    v.scale = v.scale * sqrt_rational(1 / n2);
    return v;
}

CMatrix identity_change(size_t n) { return CMatrix::identity(n); }

std::vector<uint32_t> kappa_perm(const QuadModule& m)
{
    std::vector<uint32_t> k(m.size());
    for (size_t a = 0; a < m.size(); ++a) k[a] = static_cast<uint32_t>(m.kappa(a));
    return k;
}

}  // namespace

SymmetricBasis symmetric_basis_standard(const QuadModule& m, const AutGroup& g, const Character& chi)
{
    OrbitData od = orbit_reps(m, g, chi);
    if (od.theta_chi.empty()) throw std::domain_error("zero subspace");
    std::vector<RootVector> ref = character_basis(m, g, chi, od);
    std::vector<RootVector> out;
    for (size_t a : od.theta1) {
        RootVector v = f_chi(m, g, chi, a, od.stab_size.at(a));
        Cyclotomic c = principal_sqrt(root_of_unity(-chi.values[od.mu.at(a)], chi.E));
        v = scaled_vector(v, c);
        v.label = "S_" + m.element_name(a);
        out.push_back(std::move(v));
    }
    Cyclotomic r2 = sqrt_rational(mpq_class(1, 2));
    std::vector<RootVector> minus;
    for (size_t a : od.theta2) {
        size_t ka = m.kappa(a);
        RootVector fa = f_chi(m, g, chi, a, od.stab_size.at(a));
        RootVector fk = f_chi(m, g, chi, ka, od.stab_size.at(ka));
        RootVector p = scaled_vector(add_vectors(fa, fk), r2);
        p.label = "S+_" + m.element_name(a);
        out.push_back(std::move(p));
        RootVector q = scaled_vector(add_vectors(fa, negated(fk)), imag_unit() * r2);
        q.label = "S-_" + m.element_name(a);
        minus.push_back(std::move(q));
    }
    for (auto& v : minus) out.push_back(std::move(v));
    nlohmann::json prov = character_provenance(m, chi);
    prov["family"] = "standard";
    SymmetricBasis sb;
    sb.rep = restrict_weil(m, out, prov);
    sb.basis_change = change_of_basis(ref, out);
    sb.vectors = std::move(out);
    return sb;
}

bool fixed_by_antilinear_kappa(const QuadModule& m, const RootVector& v)
{
    return same_function(conj_vector(permute(v, kappa_perm(m))), v);
}

// ---------------------------------------------------------------------------

namespace {

struct SpecialSetup {
    QuadModule m;
    AutGroup g;
    Character chi;
    int row;
};

size_t find_aut(const QuadModule& m, const AutGroup& g, long x, long y)
{
    auto e = g.find(m.element_name(m.index(x, y)));
    if (!e) throw std::logic_error("expected automorphism " + m.element_name(m.index(x, y)) + " is missing");
    return *e;
}

const Character& find_character(const std::vector<Character>& chars, const std::vector<std::pair<size_t, Cyclotomic>>& want)
{
    for (const auto& c : chars) {
        bool ok = true;
        for (const auto& [e, v] : want)
            if (c.value(e) != v) ok = false;
        if (ok) return c;
    }
    throw std::logic_error("prescribed character not found");
}

SpecialSetup special_setup(int lambda, long r, long t, int which_chi)
{
    auto reject = [&](const std::string& why) {
        std::ostringstream os;
        os << "not a special case: lambda=" << lambda << " r=" << r << " t=" << t << " chi=" << which_chi << " (" << why
           << ")";
        throw not_special(os.str());
    };
    auto in = [](long v, std::initializer_list<long> set) { return std::find(set.begin(), set.end(), v) != set.end(); };
    int sigma = 0, row = 0;
    switch (lambda) {
    case 2:
    case 3:
        if (r != 1 || t != 3 || which_chi != 1) reject("needs r=1, t=3, trivial character");
        row = lambda - 1;
        sigma = 0;
        break;
    case 4:
        if (!in(r, {1, 3}) || t != 3 || which_chi != 1) reject("needs r in {1,3}, t=3, trivial character");
        row = 3;
        sigma = 2;
        break;
    case 5:
        if (!in(r, {1, 3}) || t != 1 || !in(which_chi, {1, 2})) reject("needs r in {1,3}, t=1, character 1 or 2");
        row = which_chi == 1 ? 4 : 5;
        sigma = 2;
        break;
    case 6:
        if (!in(r, {1, 3, 5, 7}) || !in(t, {1, 3}) || which_chi != 1)
            reject("needs r in {1,3,5,7}, t in {1,3}, trivial character");
        row = 6;
        sigma = 4;
        break;
    default:
        if (lambda < 2) reject("lambda must be at least 2");
        if (lambda > 12) reject("lambda too large");
        if (!in(r, {1, 3, 5, 7}) || !in(t, {1, 3})) reject("needs r in {1,3,5,7}, t in {1,3}");
        row = 7;
        sigma = lambda - 3;
    }
    QuadModule m = QuadModule::make(ModuleKind::R, 2, lambda, sigma, r, t);
    AutGroup g = aut_group(m);
    auto chars = characters(m, g);
    if (row == 5) {
        size_t e92 = find_aut(m, g, 9, 2), em = find_aut(m, g, -1, 0);
        return {m, g, find_character(chars, {{e92, Cyclotomic(1)}, {em, Cyclotomic(-1)}}), row};
    }
    if (row == 7) {
        long a0 = 1 - (1L << (lambda - 4)) * t - (1L << (2 * lambda - 9));
        size_t alpha = find_aut(m, g, a0, 1), em = find_aut(m, g, -1, 0);
        long ord = g.order_of(alpha);
        if (static_cast<long>(g.size()) != 2 * ord) throw std::logic_error("automorphism group is not <(-1,0)> x <alpha>");
        if (which_chi < 0 || which_chi >= ord) reject("character exponent outside 0..ord(alpha)-1");
        return {m, g, find_character(chars, {{alpha, root_of_unity(which_chi, ord)}, {em, Cyclotomic(1)}}), row};
    }
    return {m, g, chars.front(), row};
}

}  // namespace

SymmetricBasis symmetric_basis_special(int lambda, long r, long t, int which_chi)
{
    SpecialSetup su = special_setup(lambda, r, t, which_chi);
    const QuadModule& m = su.m;
    auto D = [&](long x, long y) { return delta(m, m.index(x, y)); };
    auto F = [&](long x, long y) { return ftilde(m, su.g, su.chi, m.index(x, y)); };
    std::vector<RootVector> raw;
    switch (su.row) {
    case 1:
        raw = {D(1, 0), D(0, 1), difference(D(0, 0), D(1, 1))};
        break;
    case 2:
        raw = {difference(D(0, 0), D(2, 2)), difference(D(2, 0), D(0, 2)), sum(D(1, 0), D(-1, 0)),
               sum(D(1, 2), D(-1, 2)),        sum(D(0, 1), D(0, -1)),        sum(D(2, 1), D(2, -1))};
        break;
    case 3:
        raw = {sum(D(1, 0), D(-1, 0)), sum(D(3, 0), D(-3, 0)),        sum(D(1, 1), D(-1, 1)),
               sum(D(3, 1), D(-3, 1)), difference(D(0, 0), D(4, 0)), difference(D(0, 1), D(4, 1))};
        break;
    case 4:
    case 5:
        for (long x : {1, 3, 5, 7})
            for (long y : {0, 1}) raw.push_back(F(x, y));
        if (su.row == 5) {
            raw.push_back(F(4, 0));
            raw.push_back(F(4, 2));
        }
        if (su.row == 5) {
            raw.push_back(sum(F(2, 0), F(6, 0)));
            raw.push_back(sum(F(2, 2), F(6, 2)));
        } else {
            raw.push_back(difference(F(2, 0), F(6, 0)));
            raw.push_back(difference(F(2, 2), F(6, 2)));
        }
        if (su.row == 4) {
            raw.push_back(difference(F(0, 0), F(8, 0)));
            raw.push_back(difference(F(0, 2), F(8, 2)));
        }
        break;
    case 6:
        for (long x = 1; x <= 15; x += 2) raw.push_back(F(x, 0));
        raw.push_back(difference(F(0, 0), F(16, 0)));
        raw.push_back(difference(F(4, 0), F(12, 0)));
        raw.push_back(difference(F(2, 1), F(14, 1)));
        raw.push_back(difference(F(6, 1), F(10, 1)));
        break;
    default: {
        long half = 1L << (lambda - 1), quarter = 1L << (lambda - 2);
        long J = 1L << (lambda - 6), K = 1L << (lambda - 5);
        for (long x = 1; x < half; x += 2) raw.push_back(F(x, 0));
        for (long y : {0, 2})
            for (long j = 0; j < J; ++j) raw.push_back(F(4 - 2 * y + 8 * j, y));
        for (long y : {0, 2})
            for (long j = 0; j < J; ++j) raw.push_back(difference(F(2 * y + 8 * j, y), F(quarter - 2 * y - 8 * j, y)));
        for (long k = 0; k < K; ++k) raw.push_back(difference(F(2 + 4 * k, 0), F(quarter - 2 - 4 * k, 0)));
    }
    }
    // Drop zero vectors and repeats of an earlier line (f~ is constant on orbits up to a phase).
    std::vector<RootVector> vecs;
    for (auto& v : raw) {
        v.compress();
        if (v.terms.empty() || inner_product(v, v).is_zero()) continue;
        mpq_class n2 = norm_squared(v);
        bool repeat = false;
        for (const auto& w : vecs) {
            Cyclotomic ip = inner_product(v, w);
            if (ip.is_zero()) continue;
            if (ip * ip.conj() == Cyclotomic(n2 * norm_squared(w))) {
                repeat = true;
                break;
            }
            throw std::logic_error("special basis is not orthogonal at " + v.label);
        }
        if (!repeat) vecs.push_back(normalized(v));
    }
    nlohmann::json prov = character_provenance(m, su.chi);
    prov["family"] = "special";
    prov["row"] = su.row;
    prov["which_chi"] = which_chi;
    SymmetricBasis sb;
    sb.rep = restrict_weil(m, vecs, prov);
    sb.basis_change = identity_change(vecs.size());
    sb.vectors = std::move(vecs);
    return sb;
}

SymmetricBasis symmetric_basis_unary(long p, int lambda, long r, int epsilon)
{
    if (p == 2) throw invalid_module("unary modules need an odd prime");
    if (epsilon != 1 && epsilon != -1) throw std::invalid_argument("epsilon must be +1 or -1");
    QuadModule m = QuadModule::make(ModuleKind::Unary, p, lambda, 0, r);
    const long q = m.level();
    const int se = epsilon == 1 ? 0 : 1;  // sqrt(epsilon) = i^se
    const long E = 4 * p;
    auto sign = [](int e) { return e == 1 ? "+" : "-"; };
    auto f_tilde = [&](long x) {
        RootVector v;
        v.E = 4;
        v.terms.push_back({static_cast<uint32_t>(m.index(x, 0)), se, 1});
        v.terms.push_back({static_cast<uint32_t>(m.index(-x, 0)), -se, 1});
        v.compress();
        return v;
    };
    std::vector<RootVector> vecs;
    for (long x = 1; x <= (q - 1) / 2; ++x) {
        if (x % p == 0) continue;
        RootVector v = f_tilde(x);
        v.label = "f_{" + std::to_string(x) + "," + sign(epsilon) + "}";
        vecs.push_back(normalized(v));
    }
    // h_{y,k,eps,eta} = sum_a (w + conj w) f~_{py + a p^(lambda-1), eps}, w = sqrt(eta) e(ka/p)
    auto h = [&](long y, long k, int eta) {
        RootVector v;
        v.E = E;
        long pl1 = q / p;
        int sh = eta == 1 ? 0 : 1;
        for (long a = 0; a < p; ++a) {
            long x = p * y + a * pl1;
            long w = sh * p + 4 * k * a;  // exponent of w over E
            for (long wk : {w, -w}) {
                v.terms.push_back({static_cast<uint32_t>(m.index(x, 0)), static_cast<int32_t>(wk + se * p), 1});
                v.terms.push_back({static_cast<uint32_t>(m.index(-x, 0)), static_cast<int32_t>(wk - se * p), 1});
            }
        }
        v.compress();
        v.label = "h_{" + std::to_string(y) + "," + std::to_string(k) + "," + sign(epsilon) + "," + sign(eta) + "}";
        if (v.terms.empty()) throw std::logic_error("zero vector " + v.label);
        return normalized(v);
    };
    if (lambda == 1) {
        if (epsilon == 1) vecs.push_back(delta(m, 0));
    } else {
        long pl2 = q / (p * p);
        for (long y = 1; y <= (pl2 - 1) / 2; ++y)
            for (long k = 1; k <= (p - 1) / 2; ++k)
                for (int eta : {1, -1}) vecs.push_back(h(y, k, eta));
        for (long k = 1; k <= (p - 1) / 2; ++k) vecs.push_back(h(0, k, epsilon));
    }
    nlohmann::json prov;
    prov["family"] = "unary";
    prov["module"] = m.descriptor();
    prov["epsilon"] = epsilon;
    SymmetricBasis sb;
    sb.rep = restrict_weil(m, vecs, prov);
    sb.basis_change = identity_change(vecs.size());
    sb.vectors = std::move(vecs);
    return sb;
}

// ---------------------------------------------------------------------------

bool verify_symmetric(const Rep& r)
{
    return r.s.rows() == r.dim() && r.s.cols() == r.dim() && r.s.is_symmetric();
}

bool verify_symmetric(const CMatrix& s, const CMatrix& t)
{
    return s.rows() == s.cols() && t.rows() == s.rows() && t.cols() == s.cols() && s.is_symmetric() && t.is_diagonal();
}

std::string purity_name(Purity p) { return p == Purity::Real ? "real" : "i-times-real"; }

Purity check_pure(const Rep& r)
{
    bool real = true, imag = true;
    Cyclotomic i = imag_unit();
    for (size_t a = 0; a < r.dim(); ++a)
        for (size_t b = 0; b < r.dim(); ++b) {
            const Cyclotomic& x = r.s(a, b);
            if (x.is_zero()) continue;
            if (real && x != x.conj()) real = false;
            if (imag) {
                Cyclotomic y = i * x;
                if (y != y.conj()) imag = false;
            }
        }
    if (real) return Purity::Real;
    if (imag) return Purity::ImaginaryReal;
    throw std::logic_error("s is neither real nor i times real");
}

std::string verdict_name(Verdict v)
{
    switch (v) {
    case Verdict::Symmetric: return "Symmetric";
    case Verdict::Symmetrized: return "Symmetrized";
    case Verdict::Obstructed: return "Obstructed";
    case Verdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

namespace {

std::vector<size_t> simple_indices(const Rep& r)
{
    std::vector<size_t> out;
    for (size_t j = 0; j < r.dim(); ++j) {
        size_t count = 0;
        for (size_t k = 0; k < r.dim(); ++k)
            if (r.t[k] == r.t[j]) ++count;
        if (count == 1) out.push_back(j);
    }
    return out;
}

}  // namespace

SymmetrizationResult obstruction_test(const Rep& r)
{
    SymmetrizationResult res;
    if (r.s.is_symmetric()) {
        res.verdict = Verdict::Symmetric;
        res.result = r;
        res.basis_change = CMatrix::identity(r.dim());
        return res;
    }
    std::vector<size_t> simple = simple_indices(r);
    const CMatrix& s = r.s;
    for (size_t x = 0; x < simple.size(); ++x)
        for (size_t y = x + 1; y < simple.size(); ++y)
            for (size_t z = y + 1; z < simple.size(); ++z) {
                size_t j = simple[x], k = simple[y], l = simple[z];
                Cyclotomic lhs = s(j, k) * s(k, l) * s(l, j);
                Cyclotomic rhs = s(j, l) * s(l, k) * s(k, j);
                if (lhs != rhs) {
                    res.verdict = Verdict::Obstructed;
                    res.witness = std::vector<size_t>{j, k, l};
                    res.lhs = lhs;
                    res.rhs = rhs;
                    res.note = "triple products differ";
                    return res;
                }
            }
    res.verdict = Verdict::Inconclusive;
    res.note = "triple products agree on all simple-eigenvalue triples";
    return res;
}

SymmetrizationResult diagonal_symmetrize(const Rep& r)
{
    size_t n = r.dim();
    if (r.s.is_symmetric()) return obstruction_test(r);
    if (simple_indices(r).size() != n) {
        SymmetrizationResult res = obstruction_test(r);
        if (res.verdict == Verdict::Inconclusive) res.note = "repeated t-eigenvalues; " + res.note;
        return res;
    }
    SymmetrizationResult res;
    const CMatrix& s = r.s;
    for (size_t j = 0; j < n; ++j)
        for (size_t k = j + 1; k < n; ++k) {
            Cyclotomic a = s(j, k) * s(j, k).conj(), b = s(k, j) * s(k, j).conj();
            if (a != b) {
                res.verdict = Verdict::Obstructed;
                res.witness = std::vector<size_t>{j, k};
                res.lhs = a;
                res.rhs = b;
                res.note = "|s_jk| differs from |s_kj|";
                return res;
            }
        }
    std::vector<std::optional<Cyclotomic>> u2(n);
    for (size_t root = 0; root < n; ++root) {
        if (u2[root]) continue;
        u2[root] = Cyclotomic(1);
        std::deque<size_t> queue{root};
        while (!queue.empty()) {
            size_t j = queue.front();
            queue.pop_front();
            for (size_t k = 0; k < n; ++k) {
                if (k == j || s(j, k).is_zero()) continue;
                // u_k^2 s_jk = u_j^2 s_kj
                if (!u2[k]) {
                    u2[k] = *u2[j] * s(k, j) / s(j, k);
                    queue.push_back(k);
                } else if (*u2[k] * s(j, k) != *u2[j] * s(k, j)) {
                    res.verdict = Verdict::Obstructed;
                    res.witness = std::vector<size_t>{j, k};
                    res.lhs = *u2[k] * s(j, k);
                    res.rhs = *u2[j] * s(k, j);
                    res.note = "gauge ratios inconsistent around a cycle";
                    return res;
                }
            }
        }
    }
    std::vector<Cyclotomic> u(n);
    for (size_t j = 0; j < n; ++j) {
        try {
            u[j] = principal_sqrt(*u2[j]);
        } catch (const std::domain_error&) {
            res.verdict = Verdict::Inconclusive;
            res.note = "gauge ratio is not a root of unity";
            return res;
        }
    }
    CMatrix U = CMatrix::diagonal(u);
    CMatrix sym = U.conj_transpose() * s * U;
    if (!sym.is_symmetric()) throw std::logic_error("diagonal gauge did not symmetrize s");
    Rep out = r;
    out.s = sym;
    out.provenance["symmetrized"] = "diagonal";
    res.verdict = Verdict::Symmetrized;
    res.basis_change = U;
    res.result = out;
    return res;
}

// ---------------------------------------------------------------------------

Perm parse_cycles(const std::string& text, size_t n)
{
    Perm p(n);
    for (size_t i = 0; i < n; ++i) p[i] = static_cast<uint32_t>(i);
    std::vector<char> used(n, 0);
    size_t pos = 0;
    auto fail = [&](const std::string& why) { throw std::invalid_argument("bad cycle notation '" + text + "': " + why); };
    while (pos < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            continue;
        }
        if (text[pos] != '(') fail("expected '('");
        size_t close = text.find(')', pos);
        if (close == std::string::npos) fail("missing ')'");
        std::string body = text.substr(pos + 1, close - pos - 1);
        pos = close + 1;
        std::vector<long> pts;
        bool separated = body.find_first_of(", ") != std::string::npos;
        if (separated) {
            std::string tok;
            for (char& c : body)
                if (c == ',') c = ' ';
            std::istringstream js(body);
            while (js >> tok) {
                for (char c : tok)
                    if (!std::isdigit(static_cast<unsigned char>(c))) fail("non-digit point");
                pts.push_back(std::stol(tok));
            }
        } else {
            for (char c : body) {
                if (!std::isdigit(static_cast<unsigned char>(c))) fail("non-digit point");
                pts.push_back(c - '0');
            }
        }
        for (long x : pts) {
            if (x < 1 || static_cast<size_t>(x) > n) fail("point out of range");
            if (used[x - 1]) fail("point repeated");
            used[x - 1] = 1;
        }
        for (size_t i = 0; i < pts.size(); ++i)
            p[pts[i] - 1] = static_cast<uint32_t>(pts[(i + 1) % pts.size()] - 1);
    }
    return p;
}

std::string cycles_string(const Perm& p)
{
    std::ostringstream os;
    std::vector<char> seen(p.size(), 0);
    bool wide = p.size() >= 10;
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == i) continue;
        os << "(";
        size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = 1;
            if (wide && !first) os << ",";
            os << j + 1;
            first = false;
            j = p[j];
        }
        os << ")";
    }
    std::string s = os.str();
    return s.empty() ? "()" : s;
}

namespace {

Perm compose(const Perm& a, const Perm& b)
{
    Perm c(a.size());
    for (size_t j = 0; j < a.size(); ++j) c[j] = a[b[j]];
    return c;
}

Perm inverse(const Perm& a)
{
    Perm c(a.size());
    for (size_t j = 0; j < a.size(); ++j) c[a[j]] = static_cast<uint32_t>(j);
    return c;
}

bool is_identity(const Perm& a)
{
    for (size_t j = 0; j < a.size(); ++j)
        if (a[j] != j) return false;
    return true;
}

CMatrix perm_matrix(const Perm& p)
{
    CMatrix m(p.size(), p.size());
    for (size_t j = 0; j < p.size(); ++j) m(p[j], j) = Cyclotomic(1);
    return m;
}

}  // namespace

MatrixRep permutation_rep(const Perm& s, const Perm& t)
{
    if (s.size() != t.size()) throw not_sl2_action("s and t act on different point sets");
    Perm s2 = compose(s, s);
    if (!is_identity(compose(s2, s2))) throw not_sl2_action("s^4 is not the identity");
    Perm a = compose(inverse(s), t);
    if (compose(a, compose(a, a)) != s2) throw not_sl2_action("(s^-1 t)^3 differs from s^2");
    return {perm_matrix(s), perm_matrix(t)};
}

Eigenbasis fourier_eigenbasis(const Perm& t)
{
    size_t n = t.size();
    Eigenbasis b;
    b.vectors = CMatrix(n, n);
    size_t col = 0;
    for (size_t j = 0; j < n; ++j)
        if (t[j] == j) {
            b.vectors(j, col++) = Cyclotomic(1);
            b.eigenvalues.push_back(Cyclotomic(1));
            b.labels.push_back("e_" + std::to_string(j + 1));
        }
    std::vector<char> seen(n, 0);
    for (size_t start = 0; start < n; ++start) {
        if (seen[start] || t[start] == start) continue;
        std::vector<size_t> cyc;
        for (size_t j = start; !seen[j]; j = t[j]) {
            seen[j] = 1;
            cyc.push_back(j);
        }
        long len = static_cast<long>(cyc.size());
        Cyclotomic norm = sqrt_rational(mpq_class(1, len));
        for (long f = 0; f < len; ++f) {
            for (long a = 0; a < len; ++a) b.vectors(cyc[a], col) = norm * root_of_unity(f * a, len);
            b.eigenvalues.push_back(root_of_unity(-f, len));
            b.labels.push_back("c" + std::to_string(start + 1) + "_" + std::to_string(f));
            ++col;
        }
    }
    return b;
}

Rep rep_in_basis(const MatrixRep& m, const Eigenbasis& b, nlohmann::json provenance)
{
    const CMatrix& V = b.vectors;
    CMatrix Vh = V.conj_transpose();
    if (!(Vh * V).is_identity()) throw std::invalid_argument("eigenbasis is not orthonormal");
    if (m.t * V != V * CMatrix::diagonal(b.eigenvalues)) throw std::invalid_argument("basis vectors are not t-eigenvectors");
    return make_rep(b.labels, Vh * m.s * V, b.eigenvalues, std::move(provenance));
}

const std::vector<BuiltinPermRep>& builtin_perm_reps()
{
    static const std::vector<BuiltinPermRep> table = {
        {"phi1", "(12)(34)(56)", "(1245)(367)", 7},
        {"phi2", "(12)(34)(56)", "(12475)(36)", 7},
        {"phi3", "(12)(34)(67)", "(124735)", 7},
        {"phi4", "(12)(34)(67)", "(125473)", 7},
    };
    return table;
}

const BuiltinPermRep& builtin_perm_rep(const std::string& name)
{
    for (const auto& b : builtin_perm_reps())
        if (b.name == name) return b;
    throw std::invalid_argument("unknown builtin representation: " + name);
}

namespace {

// pref * sum_a e(f a / len) e_{t^a(start)}, normalized.
void add_cycle_vector(Eigenbasis& b, const Perm& t, size_t start, long f, const Cyclotomic& pref, const std::string& label)
{
    size_t n = t.size();
    std::vector<size_t> cyc;
    for (size_t j = start;;) {
        cyc.push_back(j);
        j = t[j];
        if (j == start) break;
    }
    long len = static_cast<long>(cyc.size());
    size_t col = b.eigenvalues.size();
    CMatrix grown(n, col + 1);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < col; ++j) grown(i, j) = b.vectors(i, j);
    Cyclotomic scale = pref * sqrt_rational(mpq_class(1, len));
    for (long a = 0; a < len; ++a) grown(cyc[a], col) = scale * root_of_unity(f * a, len);
    b.vectors = grown;
    b.eigenvalues.push_back(root_of_unity(-f, len));
    b.labels.push_back(label);
}

}  // namespace

std::optional<Eigenbasis> explicit_symmetric_basis(const std::string& name)
{
    const auto& bp = builtin_perm_rep(name);
    Perm t = parse_cycles(bp.t_cycles, bp.points);
    Eigenbasis b;
    b.vectors = CMatrix(bp.points, 0);
    Cyclotomic z8 = zeta(8), z5 = zeta(5), i = imag_unit();
    if (name == "phi1") {
        add_cycle_vector(b, t, 0, 0, Cyclotomic(1), "c1_0");
        add_cycle_vector(b, t, 0, 1, z8.conj(), "c1_1");
        add_cycle_vector(b, t, 0, 2, -i, "c1_2");
        add_cycle_vector(b, t, 0, 3, z8, "c1_3");
        for (long f = 0; f < 3; ++f) add_cycle_vector(b, t, 2, f, root_of_unity(f, 3), "c3_" + std::to_string(f));
        return b;
    }
    if (name == "phi2") {
        add_cycle_vector(b, t, 0, 0, Cyclotomic(1), "c1_0");
        add_cycle_vector(b, t, 0, 1, -(z5 * z5), "c1_1");
        add_cycle_vector(b, t, 0, 2, z5.conj(), "c1_2");
        add_cycle_vector(b, t, 0, 3, z5, "c1_3");
        add_cycle_vector(b, t, 0, 4, -(z5 * z5 * z5), "c1_4");
        add_cycle_vector(b, t, 2, 0, Cyclotomic(1), "c3_0");
        add_cycle_vector(b, t, 2, 1, -i, "c3_1");
        return b;
    }
    return std::nullopt;
}

Rep builtin_rep(const std::string& name)
{
    const auto& bp = builtin_perm_rep(name);
    Perm s = parse_cycles(bp.s_cycles, bp.points), t = parse_cycles(bp.t_cycles, bp.points);
    nlohmann::json prov = {{"family", "permutation"}, {"name", name}, {"s", bp.s_cycles}, {"t", bp.t_cycles},
                           {"basis", "fourier"}};
    return rep_in_basis(permutation_rep(s, t), fourier_eigenbasis(t), prov);
}

Rep induce_restrict(const MatrixRep& m, const Eigenbasis& b, nlohmann::json provenance)
{
    size_t n = m.s.rows();
    auto is_real = [](const CMatrix& x) {
        for (size_t i = 0; i < x.rows(); ++i)
            for (size_t j = 0; j < x.cols(); ++j)
                if (x(i, j) != x(i, j).conj()) return false;
        return true;
    };
    if (!is_real(m.s) || !is_real(m.t)) throw std::invalid_argument("induction needs real generators");
    CMatrix st = m.s.transpose(), tt = m.t.transpose();
    if (!(m.s * st).is_identity() || !(m.t * tt).is_identity()) throw std::invalid_argument("induction needs orthogonal generators");
    if (!(m.s * m.s).is_identity()) throw std::invalid_argument("induction needs s^2 = I");
    CMatrix a = m.s * m.t;
    if (!(a * a * a).is_identity()) throw std::invalid_argument("induction needs (s t)^3 = I");

    MatrixRep big{CMatrix(2 * n, 2 * n), CMatrix(2 * n, 2 * n)};
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            big.s(i, j) = m.s(i, j);
            big.s(n + i, n + j) = st(i, j);
            big.t(i, j) = m.t(i, j);
            big.t(n + i, n + j) = tt(i, j);
        }
    size_t d = b.eigenvalues.size();
    Eigenbasis eb;
    eb.vectors = CMatrix(2 * n, 2 * d);
    Cyclotomic r2 = sqrt_rational(mpq_class(1, 2));
    size_t col = 0;
    for (int eps : {1, -1}) {
        Cyclotomic se = eps == 1 ? Cyclotomic(1) : imag_unit();
        for (size_t j = 0; j < d; ++j) {
            for (size_t i = 0; i < n; ++i) {
                Cyclotomic top = se * b.vectors(i, j) * r2;
                eb.vectors(i, col) = top;
                eb.vectors(n + i, col) = top.conj();
            }
            eb.eigenvalues.push_back(b.eigenvalues[j]);
            eb.labels.push_back(std::string(eps == 1 ? "+" : "-") + b.labels[j]);
            ++col;
        }
    }
    return rep_in_basis(big, eb, std::move(provenance));
}

}  // namespace sl2reps
