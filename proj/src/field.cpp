#include "sl2reps/field.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>

namespace sl2reps {

namespace {

int64_t abs64(int64_t v) { return v < 0 ? -v : v; }

}  // namespace

FieldMatrix::FieldMatrix(long L, size_t rows, size_t cols)
    : L_(L), f_(detail::phi(L)), r_(rows), c_(cols), num_(rows * cols * detail::phi(L), 0)
{
    if (L % 4 == 2) throw std::invalid_argument("FieldMatrix conductor is 2 mod 4");
}

FieldMatrix FieldMatrix::from(const CMatrix& m, long L)
{
    FieldMatrix out(L, m.rows(), m.cols());
    mpz_class den = 1;
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m(i, j).denominator().get_mpz_t());
    if (!den.fits_slong_p()) throw std::overflow_error("FieldMatrix denominator");
    out.den_ = den.get_si();
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) {
            const Cyclotomic& x = m(i, j);
            if (x.is_zero()) continue;
            if (L % x.conductor() != 0) throw std::invalid_argument("entry outside Q(zeta_L)");
            std::vector<mpz_class> e = x.embed_numerators(L);
            mpz_class fac = den / x.denominator();
            int64_t* dst = &out.num_[(i * m.cols() + j) * out.f_];
            for (long k = 0; k < out.f_; ++k) {
                if (e[k] == 0) continue;
                mpz_class v = e[k] * fac;
                if (!v.fits_slong_p() || abs(v) > (mpz_class(1) << 62))
                    throw std::overflow_error("FieldMatrix entry");
                dst[k] = v.get_si();
            }
        }
    return out;
}

CMatrix FieldMatrix::to_cmatrix() const
{
    CMatrix out(r_, c_);
    mpz_class den = static_cast<long>(den_);
    std::vector<mpz_class> z(f_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < c_; ++j) {
            const int64_t* src = &num_[(i * c_ + j) * f_];
            bool any = false;
            for (long k = 0; k < f_; ++k) {
                z[k] = static_cast<long>(src[k]);
                any = any || src[k] != 0;
            }
            if (!any) continue;
            out(i, j) = Cyclotomic::from_counts(L_, z, den);
        }
    return out;
}

void FieldMatrix::normalize()
{
    int64_t g = den_;
    for (int64_t v : num_) {
        if (g == 1) break;
        if (v != 0) g = std::gcd(g, abs64(v));
    }
    if (g > 1) {
        den_ /= g;
        for (auto& v : num_) v /= g;
    }
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& o) const
{
    if (c_ != o.r_ || L_ != o.L_) throw std::invalid_argument("FieldMatrix shape mismatch");
    using Terms = std::vector<std::pair<int, int64_t>>;
    auto terms_of = [](const FieldMatrix& m) {
        std::vector<Terms> t(m.r_ * m.c_);
        for (size_t e = 0; e < t.size(); ++e) {
            const int64_t* src = &m.num_[e * m.f_];
            for (long k = 0; k < m.f_; ++k)
                if (src[k] != 0) t[e].emplace_back(static_cast<int>(k), src[k]);
        }
        return t;
    };
    std::vector<Terms> ta = terms_of(*this), tb = terms_of(o);
    const auto& tail = detail::cyclotomic_poly_tail(L_);
    FieldMatrix out(L_, r_, o.c_);
    if (__builtin_mul_overflow(den_, o.den_, &out.den_)) throw std::overflow_error("FieldMatrix denominator");
    std::vector<__int128> acc(2 * f_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < o.c_; ++j) {
            std::fill(acc.begin(), acc.end(), 0);
            bool any = false;
            for (size_t k = 0; k < c_; ++k) {
                const Terms& x = ta[i * c_ + k];
                if (x.empty()) continue;
                const Terms& y = tb[k * o.c_ + j];
                if (y.empty()) continue;
                any = true;
                for (const auto& [ea, va] : x)
                    for (const auto& [eb, vb] : y) {
                        __int128 p = (__int128)va * vb;
                        if (__builtin_add_overflow(acc[ea + eb], p, &acc[ea + eb]))
                            throw std::overflow_error("FieldMatrix product");
                    }
            }
            if (!any) continue;
            for (long k = 2 * f_ - 1; k >= f_; --k) {
                __int128 v = acc[k];
                if (v == 0) continue;
                acc[k] = 0;
                for (const auto& [e, a] : tail) {
                    __int128 d;
                    if (__builtin_mul_overflow(v, (__int128)a, &d) ||
                        __builtin_sub_overflow(acc[k - f_ + e], d, &acc[k - f_ + e]))
                        throw std::overflow_error("FieldMatrix reduction");
                }
            }
            int64_t* dst = &out.num_[(i * o.c_ + j) * f_];
            const __int128 lim = (__int128)1 << 62;
            for (long k = 0; k < f_; ++k) {
                if (acc[k] > lim || acc[k] < -lim) throw std::overflow_error("FieldMatrix entry");
                dst[k] = static_cast<int64_t>(acc[k]);
            }
        }
    out.normalize();
    return out;
}

bool FieldMatrix::operator==(const FieldMatrix& o) const
{
    return L_ == o.L_ && r_ == o.r_ && c_ == o.c_ && den_ == o.den_ && num_ == o.num_;
}

bool FieldMatrix::is_identity() const
{
    if (r_ != c_) return false;
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < c_; ++j) {
            const int64_t* src = &num_[(i * c_ + j) * f_];
            for (long k = 0; k < f_; ++k) {
                int64_t want = (i == j && k == 0) ? den_ : 0;
                if (src[k] != want) return false;
            }
        }
    return true;
}

// ---------------------------------------------------------------------------

uint64_t ModularField::pow(uint64_t a, uint64_t e) const
{
    uint64_t r = 1 % q;
    a %= q;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

uint64_t ModularField::map(const Cyclotomic& x) const
{
    if (x.is_zero()) return 0;
    long n = x.conductor();
    if (L % n != 0) throw std::invalid_argument("element outside Q(zeta_L)");
    long step = L / n;
    uint64_t acc = 0;
    const auto& num = x.numerators();
    for (size_t k = 0; k < num.size(); ++k) {
        if (num[k] == 0) continue;
        uint64_t c = mpz_fdiv_ui(num[k].get_mpz_t(), q);
        acc = add(acc, mul(c, powers[(static_cast<long>(k) * step) % L]));
    }
    uint64_t d = mpz_fdiv_ui(x.denominator().get_mpz_t(), q);
    if (d == 0) throw std::domain_error("denominator divisible by modulus");
    return mul(acc, inv(d));
}

namespace {

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m)
{
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = static_cast<uint64_t>((__uint128_t)r * a % m);
        a = static_cast<uint64_t>((__uint128_t)a * a % m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(uint64_t n)
{
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These bases are a deterministic witness set for all 64-bit integers.
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool comp = true;
        for (int r = 1; r < s; ++r) {
            x = static_cast<uint64_t>((__uint128_t)x * x % n);
            if (x == n - 1) {
                comp = false;
                break;
            }
        }
        if (comp) return false;
    }
    return true;
}

ModularField make_modular_field(long L, int which)
{
    static std::mutex mu;
    static std::map<std::pair<long, int>, ModularField> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({L, which});
    if (it != cache.end()) return it->second;

    ModularField F;
    F.L = L;
    uint64_t start = (uint64_t(1) << 62) / static_cast<uint64_t>(L) * static_cast<uint64_t>(L) + 1;
    int found = -1;
    for (uint64_t q = start; q > static_cast<uint64_t>(L); q -= static_cast<uint64_t>(L)) {
        if (!is_prime_u64(q)) continue;
        if (++found < which) continue;
        F.q = q;
        break;
    }
    std::vector<long> primes = detail::prime_factors(L);
    for (uint64_t g = 2;; ++g) {
        uint64_t w = powmod_u64(g, (F.q - 1) / static_cast<uint64_t>(L), F.q);
        bool ok = true;
        for (long p : primes)
            if (powmod_u64(w, static_cast<uint64_t>(L / p), F.q) == 1) ok = false;
        if (ok) {
            F.omega = w;
            break;
        }
    }
    F.powers.resize(L);
    F.powers[0] = 1;
    for (long k = 1; k < L; ++k) F.powers[k] = F.mul(F.powers[k - 1], F.omega);
    cache.emplace(std::make_pair(L, which), F);
    return F;
}

ModRankResult rank_mod(const ModularField& F, const std::vector<ModRow>& rows, size_t ncols,
                       size_t rank_cap)
{
    ModRankResult res;
    // Echelon basis: each stored row is normalized to 1 at its pivot and is zero
    // at every other stored pivot column.
    std::vector<std::vector<uint64_t>> basis;
    std::vector<uint64_t> work(ncols);
    for (size_t ri = 0; ri < rows.size() && res.rank < rank_cap; ++ri) {
        std::fill(work.begin(), work.end(), 0);
        bool nz = false;
        for (const auto& [c, v] : rows[ri]) {
            work[c] = F.add(work[c], v % F.q);
            nz = true;
        }
        if (!nz) continue;
        for (size_t b = 0; b < basis.size(); ++b) {
            uint64_t f = work[res.pivot_cols[b]];
            if (f == 0) continue;
            const auto& br = basis[b];
            for (size_t c = 0; c < ncols; ++c)
                if (br[c] != 0) work[c] = F.sub(work[c], F.mul(f, br[c]));
        }
        size_t piv = ncols;
        for (size_t c = 0; c < ncols; ++c)
            if (work[c] != 0) {
                piv = c;
                break;
            }
        if (piv == ncols) continue;
        uint64_t iv = F.inv(work[piv]);
        for (size_t c = 0; c < ncols; ++c)
            if (work[c] != 0) work[c] = F.mul(work[c], iv);
        for (size_t b = 0; b < basis.size(); ++b) {
            uint64_t f = basis[b][piv];
            if (f == 0) continue;
            for (size_t c = 0; c < ncols; ++c)
                if (work[c] != 0) basis[b][c] = F.sub(basis[b][c], F.mul(f, work[c]));
        }
        basis.push_back(work);
        res.pivot_rows.push_back(ri);
        res.pivot_cols.push_back(piv);
        ++res.rank;
    }
    return res;
}

}  // namespace sl2reps
