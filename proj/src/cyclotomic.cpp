#include "sl2reps/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace sl2reps {

namespace detail {

std::vector<long> prime_factors(long n)
{
    std::vector<long> out;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

long phi(long n)
{
    long r = n;
    for (long p : prime_factors(n)) r = r / p * (p - 1);
    return r;
}

long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

namespace {

std::mutex poly_mutex;
std::map<long, std::vector<long>> dense_cache;
std::map<long, std::vector<std::pair<long, long>>> tail_cache;

// Dense coefficients of the m-th cyclotomic polynomial, lowest degree first.
const std::vector<long>& dense_cyclotomic(long m)
{
    auto it = dense_cache.find(m);
    if (it != dense_cache.end()) return it->second;
    std::vector<long> poly(m + 1, 0);
    poly[0] = -1;
    poly[m] = 1;
    for (long d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        const std::vector<long> div = dense_cyclotomic(d);
        long dd = static_cast<long>(div.size()) - 1;
        long deg = static_cast<long>(poly.size()) - 1;
        std::vector<long> quot(deg - dd + 1, 0);
        for (long k = deg; k >= dd; --k) {
            long c = poly[k];
            if (c == 0) continue;
            quot[k - dd] = c;
            for (long j = 0; j <= dd; ++j) poly[k - dd + j] -= c * div[j];
        }
        poly = quot;
    }
    return dense_cache.emplace(m, poly).first->second;
}

}  // namespace

const std::vector<std::pair<long, long>>& cyclotomic_poly_tail(long n)
{
    std::lock_guard<std::mutex> lock(poly_mutex);
    auto it = tail_cache.find(n);
    if (it != tail_cache.end()) return it->second;
    long rad = 1;
    for (long p : prime_factors(n)) rad *= p;
    const std::vector<long>& base = dense_cyclotomic(rad);
    long stretch = n / rad;
    std::vector<std::pair<long, long>> tail;
    for (size_t j = 0; j + 1 < base.size(); ++j)
        if (base[j] != 0) tail.emplace_back(static_cast<long>(j) * stretch, base[j]);
    return tail_cache.emplace(n, tail).first->second;
}

}  // namespace detail

using detail::phi;

namespace {

long mod_pos(long a, long n)
{
    long r = a % n;
    return r < 0 ? r + n : r;
}

long inverse_mod(long a, long m)
{
    if (m == 1) return 0;
    long old_r = mod_pos(a, m), r = m, old_s = 1, s = 0;
    while (r != 0) {
        long q = old_r / r;
        long tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    return mod_pos(old_s, m);
}

// Reduce a polynomial (coefficients indexed by exponent, any length) modulo Phi_n.
template <typename T>
void reduce_mod_phi(long n, std::vector<T>& c)
{
    long f = phi(n);
    const auto& tail = detail::cyclotomic_poly_tail(n);
    for (long k = static_cast<long>(c.size()) - 1; k >= f; --k) {
        if (c[k] == 0) continue;
        T v = c[k];
        c[k] = 0;
        for (const auto& [e, a] : tail) c[k - f + e] -= v * a;
    }
    c.resize(f);
}

// counts indexed by exponent mod n (length n) with n == 2 mod 4 folded to n/2.
std::vector<mpz_class> fold_half(long n, const std::vector<mpz_class>& c)
{
    long m = n / 2;
    std::vector<mpz_class> d(m);
    long h = (m + 1) / 2;
    for (long k = 0; k < static_cast<long>(c.size()); ++k) {
        if (c[k] == 0) continue;
        long idx = (k % n) * h % m;
        if (k % 2 == 0)
            d[idx] += c[k];
        else
            d[idx] -= c[k];
    }
    return d;
}

bool all_zero(const std::vector<mpz_class>& c)
{
    for (const auto& v : c)
        if (v != 0) return false;
    return true;
}

// Power-basis vector at conductor n (length phi(n)) -> minimal conductor form.
void minimize(long& n, std::vector<mpz_class>& c)
{
    if (all_zero(c)) {
        n = 1;
        c.assign(1, 0);
        return;
    }
    bool changed = true;
    while (changed && n > 1) {
        changed = false;
        for (long p : detail::prime_factors(n)) {
            if (n % (p * p) == 0) {
                bool ok = true;
                for (size_t k = 0; k < c.size() && ok; ++k)
                    if (k % p != 0 && c[k] != 0) ok = false;
                if (!ok) continue;
                std::vector<mpz_class> d(c.size() / p);
                for (size_t i = 0; i < d.size(); ++i) d[i] = c[i * p];
                n /= p;
                if (n % 4 == 2) {
                    d.resize(n);
                    d = fold_half(n, d);
                    n /= 2;
                    reduce_mod_phi(n, d);
                }
                c = std::move(d);
                changed = true;
                break;
            }
            if (p == 2) continue;
            long m = n / p;
            long u = inverse_mod(m, p);
            long v = inverse_mod(p, m);
            std::vector<std::vector<mpz_class>> y(p, std::vector<mpz_class>(m));
            for (long k = 0; k < static_cast<long>(c.size()); ++k) {
                if (c[k] == 0) continue;
                y[(k * u) % p][m == 1 ? 0 : (k * v) % m] += c[k];
            }
            for (auto& yj : y) reduce_mod_phi(m, yj);
            bool ok = true;
            for (long j = 1; j + 1 < p && ok; ++j)
                if (y[j] != y[p - 1]) ok = false;
            if (!ok) continue;
            std::vector<mpz_class> d(y[0].size());
            for (size_t i = 0; i < d.size(); ++i) d[i] = y[0][i] - y[p - 1][i];
            c = std::move(d);
            n = m;
            changed = true;
            break;
        }
    }
}

// Product of two power-basis vectors at conductor m reduced mod Phi_m, computed in
// 128-bit integers; nullopt when an intermediate would overflow.
std::optional<std::vector<mpz_class>> small_product(long m, const std::vector<mpz_class>& x,
                                                    const std::vector<mpz_class>& y)
{
    const mpz_class lim = mpz_class(1) << 40;
    std::vector<std::pair<long, int64_t>> tx, ty;
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        if (abs(x[i]) > lim) return std::nullopt;
        tx.emplace_back(static_cast<long>(i), x[i].get_si());
    }
    for (size_t i = 0; i < y.size(); ++i) {
        if (y[i] == 0) continue;
        if (abs(y[i]) > lim) return std::nullopt;
        ty.emplace_back(static_cast<long>(i), y[i].get_si());
    }
    long f = phi(m);
    std::vector<__int128> c(2 * f, 0);
    for (const auto& [i, vi] : tx)
        for (const auto& [j, vj] : ty) c[i + j] += (__int128)vi * vj;
    const auto& tail = detail::cyclotomic_poly_tail(m);
    const __int128 cap = (__int128)1 << 120;
    for (long k = 2 * f - 1; k >= f; --k) {
        __int128 v = c[k];
        if (v == 0) continue;
        c[k] = 0;
        for (const auto& [e, a] : tail) {
            __int128 d;
            if (__builtin_mul_overflow(v, (__int128)a, &d) || __builtin_sub_overflow(c[k - f + e], d, &c[k - f + e]))
                return std::nullopt;
            if (c[k - f + e] > cap || c[k - f + e] < -cap) return std::nullopt;
        }
    }
    std::vector<mpz_class> out(f);
    for (long k = 0; k < f; ++k) {
        __int128 v = c[k];
        if (v == 0) continue;
        bool neg = v < 0;
        unsigned __int128 u = neg ? -(unsigned __int128)v : (unsigned __int128)v;
        mpz_class hi = static_cast<unsigned long>(u >> 64), lo = static_cast<unsigned long>(u & ~0ul);
        mpz_class z = (hi << 64) + lo;
        out[k] = neg ? mpz_class(-z) : z;
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------

class CyclotomicBuilder {
public:
    static Cyclotomic make(long n, std::vector<mpz_class> c, mpz_class den)
    {
        if (n % 4 == 2) {
            c.resize(std::max<size_t>(c.size(), static_cast<size_t>(n)));
            c = fold_half(n, c);
            n /= 2;
        }
        reduce_mod_phi(n, c);
        minimize(n, c);
        Cyclotomic out;
        out.n_ = n;
        out.num_ = std::move(c);
        out.den_ = std::move(den);
        out.normalize_den();
        return out;
    }
    static Cyclotomic make_reduced(long n, std::vector<mpz_class> c, mpz_class den)
    {
        minimize(n, c);
        Cyclotomic out;
        out.n_ = n;
        out.num_ = std::move(c);
        out.den_ = std::move(den);
        out.normalize_den();
        return out;
    }
};

Cyclotomic::Cyclotomic() : n_(1), num_(1, 0), den_(1) {}

Cyclotomic::Cyclotomic(long v) : n_(1), num_(1, v), den_(1) {}

Cyclotomic::Cyclotomic(const mpq_class& q) : n_(1), num_(1, q.get_num()), den_(q.get_den())
{
    normalize_den();
}

void Cyclotomic::normalize_den()
{
    if (den_ == 0) throw division_by_zero();
    if (den_ < 0) {
        den_ = -den_;
        for (auto& v : num_) v = -v;
    }
    mpz_class g = den_;
    for (const auto& v : num_) {
        if (g == 1) break;
        if (v != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    if (all_zero(num_)) {
        n_ = 1;
        num_.assign(1, 0);
        den_ = 1;
        return;
    }
    if (g != 1) {
        den_ /= g;
        for (auto& v : num_) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    }
}

Cyclotomic Cyclotomic::from_coeffs(long n, const std::vector<mpq_class>& coeffs)
{
    if (n < 1) throw std::invalid_argument("conductor must be positive");
    mpz_class den = 1;
    for (const auto& q : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    std::vector<mpz_class> c(n);
    for (size_t k = 0; k < coeffs.size(); ++k) {
        mpz_class v = coeffs[k].get_num() * (den / coeffs[k].get_den());
        c[k % n] += v;
    }
    return CyclotomicBuilder::make(n, std::move(c), den);
}

Cyclotomic Cyclotomic::from_counts(long n, const std::vector<mpz_class>& counts, const mpz_class& den)
{
    std::vector<mpz_class> c(n);
    for (size_t k = 0; k < counts.size(); ++k)
        if (counts[k] != 0) c[k % n] += counts[k];
    return CyclotomicBuilder::make(n, std::move(c), den);
}

Cyclotomic Cyclotomic::from_counts(long n, const std::vector<int64_t>& counts, const mpz_class& den)
{
    // Fold and reduce in machine integers when safe, then switch to mpz.
    std::vector<int64_t> c(n, 0);
    int64_t maxabs = 0;
    for (size_t k = 0; k < counts.size(); ++k) {
        c[k % n] += counts[k];
    }
    for (auto v : c) maxabs = std::max<int64_t>(maxabs, v < 0 ? -v : v);
    long m = n;
    if (m % 4 != 2 && maxabs < (int64_t(1) << 40) && n < 1000000) {
        const auto& tail = detail::cyclotomic_poly_tail(m);
        long f = phi(m);
        int64_t bound = maxabs;
        int64_t tsum = 0;
        for (const auto& t : tail) tsum += t.second < 0 ? -t.second : t.second;
        bool safe = true;
        for (long k = m - 1; k >= f; --k) {
            if (c[k] == 0) continue;
            int64_t v = c[k];
            c[k] = 0;
            for (const auto& [e, a] : tail) c[k - f + e] -= v * a;
            bound += (v < 0 ? -v : v) * tsum;
            if (bound > (int64_t(1) << 60)) {
                safe = false;
                break;
            }
        }
        if (safe) {
            std::vector<mpz_class> z(f);
            for (long k = 0; k < f; ++k) z[k] = static_cast<long>(c[k]);
            return CyclotomicBuilder::make_reduced(m, std::move(z), den);
        }
        c.assign(n, 0);
        for (size_t k = 0; k < counts.size(); ++k) c[k % n] += counts[k];
    }
    std::vector<mpz_class> z(n);
    for (long k = 0; k < n; ++k) z[k] = static_cast<long>(c[k]);
    return CyclotomicBuilder::make(n, std::move(z), den);
}

std::vector<mpq_class> Cyclotomic::coeffs() const
{
    std::vector<mpq_class> out(num_.size());
    for (size_t k = 0; k < num_.size(); ++k) {
        out[k] = mpq_class(num_[k], den_);
        out[k].canonicalize();
    }
    return out;
}

bool Cyclotomic::is_zero() const { return n_ == 1 && num_[0] == 0; }

bool Cyclotomic::is_one() const { return n_ == 1 && num_[0] == 1 && den_ == 1; }

mpq_class Cyclotomic::rational_value() const
{
    if (n_ != 1) throw std::logic_error("element is not rational");
    mpq_class q(num_[0], den_);
    q.canonicalize();
    return q;
}

std::vector<mpz_class> Cyclotomic::embed_numerators(long m) const
{
    if (m % n_ != 0) throw std::invalid_argument("embedding target is not a multiple of the conductor");
    if (m == n_) return num_;
    if (m % 4 == 2) throw std::invalid_argument("embedding target is 2 mod 4");
    long step = m / n_;
    std::vector<mpz_class> c(m);
    for (size_t k = 0; k < num_.size(); ++k) c[k * step] = num_[k];
    reduce_mod_phi(m, c);
    return c;
}

Cyclotomic Cyclotomic::galois(long k) const
{
    if (n_ == 1) return *this;
    long kk = mod_pos(k, n_);
    if (std::gcd(kk, n_) != 1) throw std::invalid_argument("Galois exponent not coprime to conductor");
    std::vector<mpz_class> c(n_);
    for (size_t j = 0; j < num_.size(); ++j)
        if (num_[j] != 0) c[(static_cast<long>(j) * kk) % n_] += num_[j];
    return CyclotomicBuilder::make(n_, std::move(c), den_);
}

Cyclotomic Cyclotomic::conj() const { return galois(-1); }

Cyclotomic Cyclotomic::operator-() const
{
    Cyclotomic out = *this;
    for (auto& v : out.num_) v = -v;
    return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o)
{
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    long m = detail::lcm_long(n_, o.n_);
    std::vector<mpz_class> a = embed_numerators(m);
    std::vector<mpz_class> b = o.embed_numerators(m);
    mpz_class den;
    if (den_ == o.den_) {
        for (size_t k = 0; k < a.size(); ++k) a[k] += b[k];
        den = den_;
    } else {
        for (size_t k = 0; k < a.size(); ++k) a[k] = a[k] * o.den_ + b[k] * den_;
        den = den_ * o.den_;
    }
    *this = CyclotomicBuilder::make_reduced(m, std::move(a), den);
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic Cyclotomic::scaled(const mpq_class& q) const
{
    if (q == 0) return Cyclotomic();
    Cyclotomic out = *this;
    for (auto& v : out.num_) v *= q.get_num();
    out.den_ *= q.get_den();
    out.normalize_den();
    return out;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b)
{
    if (a.is_zero() || b.is_zero()) return Cyclotomic();
    if (a.n_ == 1) return b.scaled(mpq_class(a.num_[0], a.den_));
    if (b.n_ == 1) return a.scaled(mpq_class(b.num_[0], b.den_));
    long m = detail::lcm_long(a.n_, b.n_);
    std::vector<mpz_class> x = a.embed_numerators(m);
    std::vector<mpz_class> y = b.embed_numerators(m);
    if (auto fast = small_product(m, x, y)) return CyclotomicBuilder::make_reduced(m, std::move(*fast), a.den_ * b.den_);
    std::vector<mpz_class> c(m);
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (size_t j = 0; j < y.size(); ++j) {
            if (y[j] == 0) continue;
            size_t k = i + j;
            if (k >= static_cast<size_t>(m)) k -= m;
            mpz_addmul(c[k].get_mpz_t(), x[i].get_mpz_t(), y[j].get_mpz_t());
        }
    }
    return CyclotomicBuilder::make(m, std::move(c), a.den_ * b.den_);
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) { return *this = *this * o; }

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) { return *this = *this * o.inverse(); }

Cyclotomic Cyclotomic::inverse() const
{
    if (is_zero()) throw division_by_zero();
    if (n_ == 1) return Cyclotomic(mpq_class(den_, num_[0]));
    Cyclotomic c = conj();
    Cyclotomic nrm = *this * c;
    if (nrm.is_rational()) return c.scaled(1 / nrm.rational_value());
    // General case: solve num * y = den in the power basis by fraction-free elimination.
    long f = phi(n_);
    const auto& tail = detail::cyclotomic_poly_tail(n_);
    std::vector<std::vector<mpz_class>> mat(f, std::vector<mpz_class>(f + 1));
    std::vector<mpz_class> col = num_;
    for (long j = 0; j < f; ++j) {
        for (long i = 0; i < f; ++i) mat[i][j] = col[i];
        mpz_class top = col[f - 1];
        for (long i = f - 1; i > 0; --i) col[i] = col[i - 1];
        col[0] = 0;
        if (top != 0)
            for (const auto& [e, a] : tail) col[e] -= top * a;
    }
    mat[0][f] = den_;
    mpz_class prev = 1, tmp;
    for (long k = 0; k < f; ++k) {
        long piv = -1;
        for (long i = k; i < f; ++i)
            if (mat[i][k] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) throw division_by_zero();
        std::swap(mat[k], mat[piv]);
        for (long i = k + 1; i < f; ++i) {
            for (long j = k + 1; j <= f; ++j) {
                mpz_mul(tmp.get_mpz_t(), mat[i][j].get_mpz_t(), mat[k][k].get_mpz_t());
                mpz_submul(tmp.get_mpz_t(), mat[i][k].get_mpz_t(), mat[k][j].get_mpz_t());
                mpz_divexact(mat[i][j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
            }
            mat[i][k] = 0;
        }
        prev = mat[k][k];
    }
    std::vector<mpq_class> sol(f);
    for (long i = f - 1; i >= 0; --i) {
        mpq_class acc(mat[i][f]);
        for (long j = i + 1; j < f; ++j)
            if (sol[j] != 0) acc -= mpq_class(mat[i][j]) * sol[j];
        sol[i] = acc / mpq_class(mat[i][i]);
    }
    return from_coeffs(n_, sol);
}

bool Cyclotomic::operator==(const Cyclotomic& o) const
{
    return n_ == o.n_ && den_ == o.den_ && num_ == o.num_;
}

bool Cyclotomic::canonical_less(const Cyclotomic& o) const
{
    if (n_ != o.n_) return n_ < o.n_;
    if (den_ != o.den_) return den_ < o.den_;
    for (size_t k = 0; k < num_.size(); ++k)
        if (num_[k] != o.num_[k]) return num_[k] < o.num_[k];
    return false;
}

std::complex<double> Cyclotomic::approx() const
{
    long double re = 0, im = 0;
    double d = den_.get_d();
    for (size_t k = 0; k < num_.size(); ++k) {
        if (num_[k] == 0) continue;
        long double c = num_[k].get_d() / d;
        long double ang = 2.0L * 3.14159265358979323846264338327950288L * static_cast<long double>(k) /
                          static_cast<long double>(n_);
        re += c * std::cos(ang);
        im += c * std::sin(ang);
    }
    return {static_cast<double>(re), static_cast<double>(im)};
}

std::string Cyclotomic::to_string() const
{
    if (n_ == 1) return rational_string(rational_value());
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < num_.size(); ++k) {
        if (num_[k] == 0) continue;
        mpq_class c(num_[k], den_);
        c.canonicalize();
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        mpq_class a = abs(c);
        bool unit = (a == 1);
        if (k == 0) {
            os << rational_string(a);
            continue;
        }
        if (!unit) os << rational_string(a) << "*";
        os << "z" << n_;
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

// ---------------------------------------------------------------------------

Cyclotomic root_of_unity(long k, long n)
{
    if (n < 1) throw std::invalid_argument("root_of_unity: n must be positive");
    long kk = mod_pos(k, n);
    long g = std::gcd(kk, n);
    if (kk == 0) return Cyclotomic(1);
    kk /= g;
    long m = n / g;
    std::vector<mpz_class> c(m);
    c[kk] = 1;
    return CyclotomicBuilder::make(m, std::move(c), 1);
}

Cyclotomic zeta(long n) { return root_of_unity(1, n); }

Cyclotomic imag_unit() { return root_of_unity(1, 4); }

std::optional<std::pair<long, long>> as_root_of_unity(const Cyclotomic& x)
{
    if (x.is_zero()) return std::nullopt;
    std::complex<double> z = x.approx();
    if (std::abs(std::abs(z) - 1.0) > 1e-3) return std::nullopt;
    long n = x.conductor();
    double a = std::arg(z) / (2 * M_PI);
    if (a < 0) a += 1;
    std::vector<long> cands = {n};
    if (n % 2 == 1) cands.push_back(2 * n);
    for (long m : cands) {
        long k = mod_pos(std::lround(a * static_cast<double>(m)), m);
        if (root_of_unity(k, m) == x) {
            long g = std::gcd(k, m);
            if (k == 0) return std::make_pair(0L, 1L);
            return std::make_pair(k / g, m / g);
        }
    }
    // The floating hint only speeds up the search; fall back to a full scan.
    for (long m : cands)
        for (long k = 0; k < m; ++k)
            if (root_of_unity(k, m) == x) {
                if (k == 0) return std::make_pair(0L, 1L);
                long g = std::gcd(k, m);
                return std::make_pair(k / g, m / g);
            }
    return std::nullopt;
}

long order_of_root(const Cyclotomic& x)
{
    auto r = as_root_of_unity(x);
    if (!r) throw not_root_of_unity();
    return r->second;
}

namespace {

int legendre(long a, long p)
{
    long r = mod_pos(a, p);
    if (r == 0) return 0;
    // Euler's criterion
    unsigned long long base = static_cast<unsigned long long>(r), e = (p - 1) / 2, acc = 1;
    unsigned long long pp = static_cast<unsigned long long>(p);
    while (e) {
        if (e & 1) acc = static_cast<unsigned long long>((__uint128_t)acc * base % pp);
        base = static_cast<unsigned long long>((__uint128_t)base * base % pp);
        e >>= 1;
    }
    return acc == 1 ? 1 : -1;
}

Cyclotomic sqrt_prime(long p)
{
    static std::mutex mu;
    static std::map<long, Cyclotomic> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(p);
        if (it != cache.end()) return it->second;
    }
    Cyclotomic out;
    if (p == 2) {
        out = root_of_unity(1, 8) + root_of_unity(7, 8);
    } else {
        std::vector<mpz_class> c(p);
        for (long x = 1; x < p; ++x) c[x] = legendre(x, p);
        Cyclotomic g = Cyclotomic::from_counts(p, c);
        out = (p % 4 == 1) ? g : -(imag_unit() * g);
    }
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(p, out);
    return out;
}

bool perfect_square(const mpz_class& v, mpz_class& root)
{
    if (v < 0) return false;
    if (mpz_perfect_square_p(v.get_mpz_t()) == 0) return false;
    mpz_sqrt(root.get_mpz_t(), v.get_mpz_t());
    return true;
}

}  // namespace

Cyclotomic sqrt_rational(const mpq_class& q)
{
    if (q < 0) throw nonrepresentable_sqrt();
    if (q == 0) return Cyclotomic();
    mpz_class a = q.get_num() * q.get_den();
    mpz_class den = q.get_den();
    if (!a.fits_ulong_p()) throw nonrepresentable_sqrt();
    unsigned long n = a.get_ui();
    unsigned long sq = 1;
    std::vector<long> free_primes;
    for (unsigned long p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) sq *= p;
        if (e % 2 == 1) free_primes.push_back(static_cast<long>(p));
    }
    if (n > 1) free_primes.push_back(static_cast<long>(n));
    Cyclotomic out(mpq_class(mpz_class(sq), den));
    for (long p : free_primes) out *= sqrt_prime(p);
    return out;
}

Cyclotomic principal_sqrt(const Cyclotomic& u)
{
    if (u.is_zero()) return Cyclotomic();
    if (u.is_rational()) {
        mpq_class q = u.rational_value();
        if (q > 0) return sqrt_rational(q);
        return imag_unit() * sqrt_rational(-q);
    }
    Cyclotomic r2 = u * u.conj();
    if (!r2.is_rational()) throw nonrepresentable_sqrt();
    mpq_class q = r2.rational_value();
    mpz_class rn, rd;
    if (!perfect_square(q.get_num(), rn) || !perfect_square(q.get_den(), rd)) throw nonrepresentable_sqrt();
    mpq_class r(rn, rd);
    r.canonicalize();
    Cyclotomic z = u.scaled(1 / r);
    auto root = as_root_of_unity(z);
    if (!root) throw nonrepresentable_sqrt();
    return sqrt_rational(r) * root_of_unity(root->first, 2 * root->second);
}

std::string rational_string(const mpq_class& q)
{
    mpq_class c = q;
    c.canonicalize();
    return c.get_str();
}

mpq_class parse_rational(const std::string& s)
{
    if (s.empty()) throw std::invalid_argument("empty rational string");
    size_t slash = s.find('/');
    auto valid_int = [](const std::string& t, bool allow_sign) {
        if (t.empty()) return false;
        size_t i = 0;
        if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    if (slash == std::string::npos) {
        if (!valid_int(s, true)) throw std::invalid_argument("malformed rational: " + s);
        return mpq_class(mpz_class(s));
    }
    std::string a = s.substr(0, slash), b = s.substr(slash + 1);
    if (!valid_int(a, true) || !valid_int(b, false)) throw std::invalid_argument("malformed rational: " + s);
    mpz_class den(b);
    if (den == 0) throw std::invalid_argument("zero denominator: " + s);
    mpq_class q(mpz_class(a), den);
    q.canonicalize();
    return q;
}

}  // namespace sl2reps
