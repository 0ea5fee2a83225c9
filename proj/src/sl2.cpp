#include "sl2reps/sl2.hpp"

#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sl2reps {

namespace {

mpz_class mod_pos(const mpz_class& x, long n)
{
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

long sym_residue(long x, long n)
{
    long r = ((x % n) + n) % n;
    return 2 * r > n ? r - n : r;
}

}  // namespace

Mat2 Mat2::reduced(long n) const { return {mod_pos(a, n), mod_pos(b, n), mod_pos(c, n), mod_pos(d, n)}; }

Mat2 operator*(const Mat2& x, const Mat2& y)
{
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Mat2 power(const Mat2& x, long k)
{
    Mat2 base = x;
    if (k < 0) {
        base = {x.d, -x.b, -x.c, x.a};
        k = -k;
    }
    Mat2 r;
    while (k) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

void SL2Word::push(char gen, long exp)
{
    if (gen != 's' && gen != 't') throw std::invalid_argument("unknown generator");
    if (!letters.empty() && letters.back().gen == gen) {
        letters.back().exp += exp;
        if (gen == 's') letters.back().exp = sym_residue(letters.back().exp, 4);
        if (letters.back().exp == 0) letters.pop_back();
        return;
    }
    if (gen == 's') exp = sym_residue(exp, 4);
    if (exp != 0) letters.push_back({gen, exp});
}

Mat2 SL2Word::matrix() const
{
    Mat2 m;
    for (const auto& l : letters) m = m * power(l.gen == 's' ? Mat2::S() : Mat2::T(), l.exp);
    return m;
}

std::string SL2Word::to_string() const
{
    std::ostringstream os;
    for (size_t i = 0; i < letters.size(); ++i) {
        if (i) os << ' ';
        os << letters[i].gen;
        if (letters[i].exp != 1) os << '^' << letters[i].exp;
    }
    return os.str();
}

SL2Word SL2Word::parse(const std::string& text)
{
    SL2Word w;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        if (tok[0] != 's' && tok[0] != 't') throw std::invalid_argument("bad word token: " + tok);
        long e = 1;
        if (tok.size() > 1) {
            if (tok[1] != '^' || tok.size() < 3) throw std::invalid_argument("bad word token: " + tok);
            size_t pos = 0;
            e = std::stol(tok.substr(2), &pos);
            if (pos != tok.size() - 2) throw std::invalid_argument("bad word token: " + tok);
        }
        w.letters.push_back({tok[0], e});
    }
    return w;
}

SL2Word decompose_modn(const Mat2& A, long n)
{
    if (n < 1) throw std::invalid_argument("modulus must be positive");
    Mat2 R = A.reduced(n);
    if (mod_pos(R.det(), n) != 1 % n) throw std::invalid_argument("matrix does not have determinant 1 mod n");
    SL2Word w;
    if (n == 1) return w;
    // Lift the first column to a coprime integer pair.
    mpz_class a = sym_residue(R.a.get_si(), n), c = sym_residue(R.c.get_si(), n);
    mpz_class g;
    while (true) {
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
        if (c == 0)
            c = n;
        else
            a += n;
    }
    // Complete to B = (a x; c y) in SL2(Z).
    mpz_class x, y, gg;
    mpz_gcdext(gg.get_mpz_t(), y.get_mpz_t(), x.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
    x = -x;  // a*y - c*x = 1
    Mat2 B{a, x, c, y};
    // A = B * t^m mod n with m read off from B^-1 A.
    Mat2 Binv{B.d, -B.b, -B.c, B.a};
    Mat2 C = (Binv * R).reduced(n);
    long m = sym_residue(C.b.get_si(), n);
    // Euclid on the first column: B = W * M with M upper triangular at the end.
    Mat2 M = B;
    while (M.c != 0) {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), M.a.get_mpz_t(), M.c.get_mpz_t());
        long qq = q.get_si();
        M = Mat2::S() * (power(Mat2::T(), -qq) * M);
        w.push('t', sym_residue(qq, n));
        w.push('s', -1);
    }
    if (M.a < 0) {
        w.push('s', 2);
        M = Mat2{-M.a, -M.b, -M.c, -M.d};
    }
    w.push('t', sym_residue(M.b.get_si() + m, n));
    return w;
}

CMatrix evaluate(const SL2Word& w, const Rep& r)
{
    size_t d = r.dim();
    CMatrix acc = CMatrix::identity(d);
    CMatrix s2, s3;
    for (const auto& l : w.letters) {
        if (l.gen == 't') {
            std::vector<Cyclotomic> tk(d);
            for (size_t j = 0; j < d; ++j) tk[j] = root_power(r.t[j], l.exp);
            for (size_t i = 0; i < d; ++i)
                for (size_t j = 0; j < d; ++j)
                    if (!acc(i, j).is_zero()) acc(i, j) *= tk[j];
            continue;
        }
        long e = ((l.exp % 4) + 4) % 4;
        if (e == 0) continue;
        if (e >= 2 && s2.rows() == 0) s2 = r.s * r.s;
        if (e == 3 && s3.rows() == 0) s3 = s2 * r.s;
        acc = acc * (e == 1 ? r.s : e == 2 ? s2 : s3);
    }
    return acc;
}

SL2Word random_word(std::mt19937_64& rng, long n)
{
    std::uniform_int_distribution<int> nblocks(1, 24), coin(0, 1);
    std::uniform_int_distribution<long> ex(-n, n);
    SL2Word w;
    int k = nblocks(rng);
    char g = coin(rng) ? 's' : 't';
    for (int i = 0; i < k; ++i) {
        w.push(g, ex(rng));
        g = g == 's' ? 't' : 's';
    }
    return w;
}

CongruenceReport verify_congruence(const Rep& r, long n, int trials, uint64_t seed)
{
    CongruenceReport rep;
    rep.seed = seed;
    rep.n = n;
    rep.trials = trials;
    try {
        rep.level_ok = level_of(r.t) == n;
    } catch (const not_root_of_unity&) {
        rep.level_ok = false;
    }
    rep.pass = rep.level_ok;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < trials; ++i) {
        SL2Word w = random_word(rng, n);
        SL2Word v = decompose_modn(w.matrix(), n);
        if (evaluate(w, r) != evaluate(v, r)) {
            rep.pass = false;
            rep.witness = w.to_string();
            break;
        }
    }
    return rep;
}

mpz_class group_order(long n)
{
    if (n < 1) throw std::invalid_argument("group_order needs n >= 1");
    mpz_class r = mpz_class(n) * n * n;
    for (long p : detail::prime_factors(n)) r = r / (p * p) * (p * p - 1);
    return r;
}

}  // namespace sl2reps
