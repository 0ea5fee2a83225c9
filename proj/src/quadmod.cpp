#include "sl2reps/quadmod.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace sl2reps {

namespace {

long mod_pos(long a, long n)
{
    long r = a % n;
    return r < 0 ? r + n : r;
}

long ipow(long b, int e)
{
    long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

long inverse_mod(long a, long m)
{
    long g = m, x = 0, x1 = 1, a1 = mod_pos(a, m);
    while (a1 != 0) {
        long q = g / a1;
        std::tie(g, a1) = std::make_pair(a1, g - q * a1);
        std::tie(x, x1) = std::make_pair(x1, x - q * x1);
    }
    if (g != 1) throw std::invalid_argument("not invertible");
    return mod_pos(x, m);
}

}  // namespace

bool is_prime_long(long n)
{
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

int legendre_symbol(long a, long p)
{
    long r = mod_pos(a, p);
    if (r == 0) return 0;
    for (long x = 1; x < p; ++x)
        if (x * x % p == r) return 1;
    return -1;
}

long smallest_nonresidue(long p)
{
    for (long u = 2; u < p; ++u)
        if (legendre_symbol(u, p) == -1) return u;
    throw std::invalid_argument("no quadratic nonresidue");
}

std::string kind_name(ModuleKind k)
{
    switch (k) {
    case ModuleKind::D: return "D";
    case ModuleKind::N: return "N";
    case ModuleKind::R: return "R_sigma";
    case ModuleKind::Unary: return "R_unary";
    }
    return "?";
}

ModuleKind parse_kind(const std::string& s)
{
    if (s == "D") return ModuleKind::D;
    if (s == "N") return ModuleKind::N;
    if (s == "R" || s == "R_sigma") return ModuleKind::R;
    if (s == "U" || s == "unary" || s == "R_unary") return ModuleKind::Unary;
    throw invalid_module("unknown module kind: " + s);
}

QuadModule QuadModule::make(ModuleKind kind, long p, int lambda, int sigma, long r, long t)
{
    QuadModule m;
    m.kind_ = kind;
    m.p_ = p;
    m.lambda_ = lambda;
    m.sigma_ = sigma;
    m.r_ = r;
    m.t_ = t;
    if (!is_prime_long(p)) throw invalid_module("p must be prime");
    if (lambda < 1) throw invalid_module("lambda must be positive");
    if (lambda > 30) throw invalid_module("lambda too large");
    m.level_ = ipow(p, lambda);
    if (p % 2 == 1) m.u_ = smallest_nonresidue(p);
    switch (kind) {
    case ModuleKind::D:
        m.sigma_ = 0;
        m.r_ = 1;
        m.t_ = 0;
        m.d1_ = m.d2_ = m.level_;
        break;
    case ModuleKind::N:
        m.sigma_ = 0;
        m.r_ = 1;
        m.d1_ = m.d2_ = m.level_;
        if (p == 2) {
            m.t_ = 0;
            m.c0_ = 1;
        } else {
            if (t == 0) {
                for (long c = 3;; c += 4)
                    if (legendre_symbol(-c, p) == -1) {
                        m.t_ = c;
                        break;
                    }
            }
            m.c0_ = (1 + m.t_) / 4;
        }
        break;
    case ModuleKind::R:
        if (t == 0) m.t_ = 1;
        if (p == 2) {
            m.d1_ = ipow(2, lambda - 1);
            m.d2_ = (sigma >= 0 && sigma <= lambda - 2) ? ipow(2, lambda - sigma - 1) : 1;
        } else {
            m.d1_ = m.level_;
            m.d2_ = (sigma >= 1 && sigma <= lambda - 1) ? ipow(p, lambda - sigma) : 1;
        }
        break;
    case ModuleKind::Unary:
        m.sigma_ = 0;
        m.t_ = 0;
        m.d1_ = m.level_;
        m.d2_ = 1;
        break;
    }
    m.validate();
    m.qtab_.resize(m.size());
    for (long x = 0; x < m.d1_; ++x)
        for (long y = 0; y < m.d2_; ++y) m.qtab_[x * m.d2_ + y] = static_cast<int32_t>(m.q_formula(x, y));
    return m;
}

void QuadModule::validate() const
{
    switch (kind_) {
    case ModuleKind::D: break;
    case ModuleKind::N:
        if (p_ != 2) {
            if (t_ <= 0) throw invalid_module("N_{p^lambda}, p odd, other parameters: t in N");
            if (t_ % 4 != 3) throw invalid_module("N_{p^lambda}, p odd, other parameters: t = 3 mod 4");
            if (legendre_symbol(-t_, p_) != -1)
                throw invalid_module("N_{p^lambda}, p odd, other parameters: (-t/p) = -1");
        }
        break;
    case ModuleKind::R:
        if (p_ == 2) {
            if (lambda_ < 2) throw invalid_module("R^sigma_{2^lambda}, p^lambda column: lambda >= 2");
            if (sigma_ < 0 || sigma_ > lambda_ - 2)
                throw invalid_module("R^sigma_{2^lambda}, other parameters: 0 <= sigma <= lambda-2");
            if (r_ <= 0 || t_ <= 0 || r_ % 2 == 0 || t_ % 2 == 0)
                throw invalid_module("R^sigma_{2^lambda}, other parameters: r,t in N and odd");
        } else {
            if (lambda_ < 2) throw invalid_module("R^sigma_{p^lambda}, p odd, p^lambda column: lambda >= 2");
            if (sigma_ < 1 || sigma_ > lambda_ - 1)
                throw invalid_module("R^sigma_{p^lambda}, p odd, other parameters: 1 <= sigma <= lambda-1");
            if ((r_ != 1 && r_ != u_) || (t_ != 1 && t_ != u_))
                throw invalid_module("R^sigma_{p^lambda}, p odd, other parameters: r,t in {1,u}");
        }
        break;
    case ModuleKind::Unary:
        if (p_ == 2) throw invalid_module("R_{p^lambda}(r), p^lambda column: p odd");
        if (r_ != 1 && r_ != u_) throw invalid_module("R_{p^lambda}(r), other parameters: r in {1,u}");
        break;
    }
}

long QuadModule::q_formula(long x, long y) const
{
    long L = level_;
    long v = 0;
    switch (kind_) {
    case ModuleKind::D: v = x * y; break;
    case ModuleKind::N: v = x * x + x * y + c0_ * y * y; break;
    case ModuleKind::R: v = r_ * (x * x + ipow(p_, sigma_) * t_ * (y * y % L)); break;
    case ModuleKind::Unary: v = r_ * (x * x % L); break;
    }
    return mod_pos(v, L);
}

size_t QuadModule::index(long x, long y) const
{
    return static_cast<size_t>(mod_pos(x, d1_) * d2_ + mod_pos(y, d2_));
}

std::string QuadModule::element_name(size_t a) const
{
    auto [x, y] = coords(a);
    if (kind_ == ModuleKind::Unary) return "(" + std::to_string(x) + ")";
    return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

long QuadModule::b_num(size_t a, size_t b) const
{
    return mod_pos(static_cast<long>(qtab_[add(a, b)]) - qtab_[a] - qtab_[b], level_);
}

mpq_class QuadModule::eval_Q(size_t a) const
{
    mpq_class q(qtab_[a], level_);
    q.canonicalize();
    return q;
}

mpq_class QuadModule::eval_B(size_t a, size_t b) const
{
    mpq_class q(b_num(a, b), level_);
    q.canonicalize();
    return q;
}

size_t QuadModule::add(size_t a, size_t b) const
{
    auto [x1, y1] = coords(a);
    auto [x2, y2] = coords(b);
    return index(x1 + x2, y1 + y2);
}

size_t QuadModule::neg(size_t a) const
{
    auto [x, y] = coords(a);
    return index(-x, -y);
}

size_t QuadModule::scale(long k, size_t a) const
{
    auto [x, y] = coords(a);
    return index(mod_pos(k, d1_) * x, mod_pos(k, d2_) * y);
}

size_t QuadModule::kappa(size_t a) const
{
    auto [x, y] = coords(a);
    switch (kind_) {
    case ModuleKind::D: return index(y, x);
    case ModuleKind::N: return index(x + y, -y);
    case ModuleKind::R: return index(x, -y);
    case ModuleKind::Unary: return index(-x, 0);
    }
    return a;
}

size_t QuadModule::ring_mul(size_t a, size_t b) const
{
    if (!has_ring()) throw std::logic_error("module has no quotient-ring structure");
    auto [x1, y1] = coords(a);
    auto [x2, y2] = coords(b);
    if (kind_ == ModuleKind::N)
        return index(mod_pos(x1 * x2 - c0_ * mod_pos(y1 * y2, d1_), d1_), mod_pos(x1 * y2 + y1 * x2 + y1 * y2, d2_));
    long ps = ipow(p_, sigma_) * t_;
    return index(mod_pos(x1 * x2 - ps * mod_pos(y1 * y2, d1_), d1_), mod_pos(x1 * y2 + y1 * x2, d2_));
}

size_t QuadModule::ring_conj(size_t a) const
{
    if (!has_ring()) throw std::logic_error("module has no quotient-ring structure");
    return kappa(a);
}

long QuadModule::norm(size_t a) const
{
    auto [x, y] = coords(a);
    long L = level_;
    if (kind_ == ModuleKind::N) return mod_pos(x * x + x * y + c0_ * y * y, L);
    if (kind_ == ModuleKind::R) return mod_pos(x * x + ipow(p_, sigma_) * t_ * (y * y % L), L);
    throw std::logic_error("norm is defined for N and R types");
}

std::string QuadModule::name() const
{
    std::ostringstream os;
    switch (kind_) {
    case ModuleKind::D: os << "D_" << level_; break;
    case ModuleKind::N:
        os << "N_" << level_;
        if (p_ != 2) os << "(t=" << t_ << ")";
        break;
    case ModuleKind::R: os << "R^" << sigma_ << "_" << level_ << "(" << r_ << "," << t_ << ")"; break;
    case ModuleKind::Unary: os << "R_" << level_ << "(" << r_ << ")"; break;
    }
    return os.str();
}

nlohmann::json QuadModule::descriptor() const
{
    nlohmann::json j;
    j["kind"] = kind_name(kind_);
    j["p"] = p_;
    j["lambda"] = lambda_;
    j["sigma"] = kind_ == ModuleKind::R ? nlohmann::json(sigma_) : nlohmann::json(nullptr);
    j["r"] = (kind_ == ModuleKind::R || kind_ == ModuleKind::Unary) ? nlohmann::json(r_) : nlohmann::json(nullptr);
    j["t"] = (kind_ == ModuleKind::R || (kind_ == ModuleKind::N && p_ != 2)) ? nlohmann::json(t_)
                                                                               : nlohmann::json(nullptr);
    j["elementary_divisors"] = {d1_, d2_};
    return j;
}

QuadModule QuadModule::from_descriptor(const nlohmann::json& j)
{
    auto get = [&](const char* key, long dflt) -> long {
        if (!j.contains(key) || j[key].is_null()) return dflt;
        if (!j[key].is_number_integer()) throw invalid_module(std::string("descriptor field is not an integer: ") + key);
        return j[key].get<long>();
    };
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw invalid_module("module descriptor needs a string \"kind\"");
    ModuleKind k = parse_kind(j["kind"].get<std::string>());
    QuadModule m = make(k, get("p", 0), static_cast<int>(get("lambda", 0)), static_cast<int>(get("sigma", 0)),
                        get("r", 1), get("t", 0));
    if (j.contains("elementary_divisors")) {
        auto ed = j["elementary_divisors"];
        if (!ed.is_array() || ed.size() != 2 || ed[0] != m.d1_ || ed[1] != m.d2_)
            throw invalid_module("elementary_divisors do not match the module parameters");
    }
    return m;
}

// ---------------------------------------------------------------------------

std::optional<size_t> AutGroup::find(const std::string& name) const
{
    for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return i;
    return std::nullopt;
}

long AutGroup::order_of(size_t e) const
{
    long k = 1;
    size_t x = e;
    while (x != identity) {
        x = mul[x][e];
        ++k;
    }
    return k;
}

namespace {

void decompose(AutGroup& g)
{
    size_t n = g.size();
    std::vector<long> ord(n);
    for (size_t e = 0; e < n; ++e) ord[e] = g.order_of(e);
    for (long ell : detail::prime_factors(static_cast<long>(n))) {
        std::vector<size_t> P;
        for (size_t e = 0; e < n; ++e) {
            long o = ord[e];
            while (o % ell == 0) o /= ell;
            if (o == 1) P.push_back(e);
        }
        std::vector<char> inH(n, 0);
        inH[g.identity] = 1;
        size_t hsize = 1;
        while (hsize < P.size()) {
            size_t best = n;
            long bestq = 0;
            for (size_t h : P) {
                long k = 1;
                size_t x = h;
                while (!inH[x]) {
                    x = g.mul[x][h];
                    ++k;
                }
                if (k > bestq) {
                    bestq = k;
                    best = h;
                }
            }
            size_t lift = n;
            for (size_t x = 0; x < n && lift == n; ++x)
                if (inH[x] && ord[g.mul[best][x]] == bestq) lift = g.mul[best][x];
            if (lift == n) throw std::logic_error("abelian decomposition failed");
            g.gens.push_back(lift);
            g.orders.push_back(bestq);
            std::vector<size_t> cur;
            for (size_t x = 0; x < n; ++x)
                if (inH[x]) cur.push_back(x);
            size_t pw = lift;
            for (long j = 1; j < bestq; ++j) {
                for (size_t x : cur) inH[g.mul[x][pw]] = 1;
                pw = g.mul[pw][lift];
            }
            hsize = static_cast<size_t>(std::count(inH.begin(), inH.end(), 1));
        }
    }
    g.exponent = 1;
    for (long o : g.orders) g.exponent = std::lcm(g.exponent, o);
    g.coords.assign(n, {});
    std::vector<char> seen(n, 0);
    size_t r = g.gens.size(), filled = 0;
    std::vector<long> k(r, 0);
    while (true) {
        size_t x = g.identity;
        for (size_t i = 0; i < r; ++i)
            for (long j = 0; j < k[i]; ++j) x = g.mul[x][g.gens[i]];
        if (seen[x]) throw std::logic_error("generators are not independent");
        seen[x] = 1;
        g.coords[x] = k;
        ++filled;
        bool done = true;
        for (size_t i = r; i > 0; --i) {
            if (++k[i - 1] < g.orders[i - 1]) {
                done = false;
                break;
            }
            k[i - 1] = 0;
        }
        if (done) break;
    }
    if (filled != n) throw std::logic_error("generators do not cover the group");
}

}  // namespace

std::vector<QuadModule> modules_of_level(long n, size_t max_size, size_t* skipped)
{
    std::vector<QuadModule> out;
    if (n < 2) return out;
    long p = detail::prime_factors(n).front();
    int lambda = 0;
    for (long v = n; v > 1; v /= p) {
        if (v % p != 0) throw std::invalid_argument("level must be a prime power");
        ++lambda;
    }
    auto keep = [&](QuadModule m) {
        if (m.size() <= max_size) out.push_back(std::move(m));
        else if (skipped) ++*skipped;
    };
    keep(QuadModule::make(ModuleKind::D, p, lambda));
    keep(QuadModule::make(ModuleKind::N, p, lambda));
    if (p == 2) {
        for (int sigma = 0; sigma <= lambda - 2; ++sigma)
            for (long r : {1, 3, 5, 7})
                for (long t : {1, 3, 5, 7}) keep(QuadModule::make(ModuleKind::R, p, lambda, sigma, r, t));
    } else {
        long u = smallest_nonresidue(p);
        for (int sigma = 1; sigma <= lambda - 1; ++sigma)
            for (long r : {1L, u})
                for (long t : {1L, u}) keep(QuadModule::make(ModuleKind::R, p, lambda, sigma, r, t));
        for (long r : {1L, u}) keep(QuadModule::make(ModuleKind::Unary, p, lambda, 0, r));
    }
    return out;
}

AutGroup aut_group(const QuadModule& m)
{
    AutGroup g;
    size_t n = m.size();
    auto add_elem = [&](const std::string& name, std::vector<uint32_t> act) {
        g.names.push_back(name);
        g.action.push_back(std::move(act));
    };
    long L = m.level();
    switch (m.kind()) {
    case ModuleKind::D:
        for (long e = 1; e < L; ++e) {
            if (std::gcd(e, L) != 1) continue;
            long ei = inverse_mod(e, L);
            std::vector<uint32_t> act(n);
            for (size_t a = 0; a < n; ++a) {
                auto [x, y] = m.coords(a);
                act[a] = static_cast<uint32_t>(m.index(ei * x, e * y));
            }
            add_elem(std::to_string(e), std::move(act));
        }
        break;
    case ModuleKind::N:
    case ModuleKind::R:
        for (size_t e = 0; e < n; ++e) {
            if (m.norm(e) != 1 % L) continue;
            if (m.ring_mul(e, m.ring_conj(e)) != m.one()) continue;
            std::vector<uint32_t> act(n);
            for (size_t a = 0; a < n; ++a) act[a] = static_cast<uint32_t>(m.ring_mul(e, a));
            add_elem(m.element_name(e), std::move(act));
        }
        break;
    case ModuleKind::Unary:
        for (long e : {1L, -1L}) {
            std::vector<uint32_t> act(n);
            for (size_t a = 0; a < n; ++a) act[a] = static_cast<uint32_t>(m.scale(e, a));
            add_elem(std::to_string(e), std::move(act));
        }
        break;
    }
    size_t k = g.size();
    std::map<std::vector<uint32_t>, size_t> lookup;
    for (size_t e = 0; e < k; ++e) lookup[g.action[e]] = e;
    std::vector<uint32_t> id(n);
    std::iota(id.begin(), id.end(), 0);
    g.identity = lookup.at(id);
    g.mul.assign(k, std::vector<uint32_t>(k));
    g.inv.assign(k, 0);
    std::vector<uint32_t> comp(n);
    for (size_t e = 0; e < k; ++e)
        for (size_t f = 0; f < k; ++f) {
            for (size_t a = 0; a < n; ++a) comp[a] = g.action[e][g.action[f][a]];
            auto it = lookup.find(comp);
            if (it == lookup.end()) throw std::logic_error("automorphism set is not closed");
            g.mul[e][f] = static_cast<uint32_t>(it->second);
            if (it->second == g.identity) g.inv[e] = static_cast<uint32_t>(f);
        }
    decompose(g);
    return g;
}

std::vector<size_t> fixing_subgroup(const QuadModule& m, const AutGroup& g)
{
    std::vector<size_t> out;
    for (size_t e = 0; e < g.size(); ++e) {
        bool ok = true;
        for (size_t a = 0; a < m.size() && ok; ++a) {
            size_t pa = m.scale(m.p(), a);
            if (g.action[e][pa] != pa) ok = false;
        }
        if (ok) out.push_back(e);
    }
    return out;
}

std::string Character::name() const
{
    std::ostringstream os;
    os << "chi[";
    for (size_t i = 0; i < k.size(); ++i) os << (i ? "," : "") << k[i];
    os << "]";
    return os.str();
}

std::vector<Character> characters(const QuadModule& m, const AutGroup& g)
{
    std::vector<Character> out;
    std::vector<size_t> F;
    if (!m.is_extremal()) F = fixing_subgroup(m, g);
    size_t r = g.gens.size();
    std::vector<long> k(r, 0);
    while (true) {
        Character c;
        c.k = k;
        c.E = g.exponent;
        c.values.resize(g.size());
        for (size_t e = 0; e < g.size(); ++e) {
            long v = 0;
            for (size_t i = 0; i < r; ++i) v += k[i] * g.coords[e][i] * (g.exponent / g.orders[i]);
            c.values[e] = v % g.exponent;
        }
        c.order = 1;
        for (size_t i = 0; i < r; ++i) c.order = std::lcm(c.order, g.orders[i] / std::gcd(g.orders[i], k[i]));
        c.is_involution = c.order <= 2;
        if (!m.is_extremal()) {
            bool prim = false;
            for (size_t e : F)
                if (c.values[e] != 0) prim = true;
            c.is_primitive = prim;
        }
        c.index = out.size();
        out.push_back(std::move(c));
        size_t i = r;
        bool done = true;
        while (i > 0) {
            --i;
            if (++k[i] < g.orders[i]) {
                done = false;
                break;
            }
            k[i] = 0;
        }
        if (done) break;
    }
    return out;
}

size_t conjugate_index(const std::vector<Character>& chars, size_t i)
{
    const Character& c = chars[i];
    for (size_t j = 0; j < chars.size(); ++j) {
        bool ok = true;
        for (size_t e = 0; e < c.values.size() && ok; ++e)
            if ((c.values[e] + chars[j].values[e]) % c.E != 0) ok = false;
        if (ok) return j;
    }
    throw std::logic_error("conjugate character missing");
}

}  // namespace sl2reps
