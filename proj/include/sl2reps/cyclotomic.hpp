#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace sl2reps {

class division_by_zero : public std::domain_error {
public:
    division_by_zero() : std::domain_error("cyclotomic division by zero") {}
};

class not_root_of_unity : public std::domain_error {
public:
    not_root_of_unity() : std::domain_error("not a root of unity") {}
};

class nonrepresentable_sqrt : public std::domain_error {
public:
    nonrepresentable_sqrt() : std::domain_error("non-representable square root") {}
};

// Exact element of Q(zeta_N).  Stored in the power basis zeta_N^0 .. zeta_N^{phi(N)-1}
// modulo the N-th cyclotomic polynomial, with N minimal and never 2 mod 4.  The
// coefficients are integer numerators over one positive common denominator.
class Cyclotomic {
public:
    Cyclotomic();
    Cyclotomic(long v);  // NOLINT: implicit from integers is convenient
    explicit Cyclotomic(const mpq_class& q);

    // Element sum_k coeffs[k] * zeta_n^k; any length, any n >= 1.
    static Cyclotomic from_coeffs(long n, const std::vector<mpq_class>& coeffs);
    // Element (sum_k counts[k] * zeta_n^k) / den with counts indexed by k mod n.
    static Cyclotomic from_counts(long n, const std::vector<mpz_class>& counts,
                                  const mpz_class& den = 1);
    static Cyclotomic from_counts(long n, const std::vector<int64_t>& counts,
                                  const mpz_class& den = 1);

    long conductor() const { return n_; }
    std::vector<mpq_class> coeffs() const;
    const std::vector<mpz_class>& numerators() const { return num_; }
    const mpz_class& denominator() const { return den_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const { return n_ == 1; }
    mpq_class rational_value() const;  // requires is_rational()

    Cyclotomic conj() const;
    Cyclotomic galois(long k) const;  // zeta -> zeta^k, gcd(k, N) = 1
    Cyclotomic inverse() const;
    // Power-basis coefficients in Q(zeta_m) for a multiple m of the conductor.
    std::vector<mpz_class> embed_numerators(long m) const;

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& operator/=(const Cyclotomic& o);
    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }
    Cyclotomic scaled(const mpq_class& q) const;

    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }
    // Total order on canonical forms (conductor, denominator, numerators); not a field order.
    bool canonical_less(const Cyclotomic& o) const;

    std::complex<double> approx() const;
    std::string to_string() const;

private:
    long n_ = 1;
    std::vector<mpz_class> num_;
    mpz_class den_ = 1;

    void normalize_den();
    friend class CyclotomicBuilder;
};

// e(k/n) = exp(2 pi i k / n)
Cyclotomic root_of_unity(long k, long n);
Cyclotomic zeta(long n);
Cyclotomic imag_unit();

// Returns (k, n) with x = e(k/n), 0 <= k < n, gcd(k, n) = 1, if x is a root of unity.
std::optional<std::pair<long, long>> as_root_of_unity(const Cyclotomic& x);
long order_of_root(const Cyclotomic& x);

// Square root of a positive rational, exact in a cyclotomic field.
Cyclotomic sqrt_rational(const mpq_class& q);
// Principal square root of (nonnegative rational) * (root of unity).
Cyclotomic principal_sqrt(const Cyclotomic& u);

std::string rational_string(const mpq_class& q);
mpq_class parse_rational(const std::string& s);

namespace detail {
long phi(long n);
std::vector<long> prime_factors(long n);
long lcm_long(long a, long b);
// Nonzero low-order terms of the n-th cyclotomic polynomial: (exponent, coefficient), leading term excluded.
const std::vector<std::pair<long, long>>& cyclotomic_poly_tail(long n);
}  // namespace detail

}  // namespace sl2reps
