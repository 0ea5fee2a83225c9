#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sl2reps/cyclotomic.hpp"
#include "sl2reps/matrix.hpp"

namespace sl2reps {

// Matrix over Q(zeta_L) for a fixed L, stored as machine-integer power-basis
// numerators over one common denominator.  Arithmetic throws std::overflow_error
// instead of wrapping; callers fall back to CMatrix.
class FieldMatrix {
public:
    FieldMatrix(long L, size_t rows, size_t cols);
    static FieldMatrix from(const CMatrix& m, long L);
    CMatrix to_cmatrix() const;

    long conductor() const { return L_; }
    size_t rows() const { return r_; }
    size_t cols() const { return c_; }

    FieldMatrix operator*(const FieldMatrix& o) const;
    bool operator==(const FieldMatrix& o) const;
    bool is_identity() const;

private:
    long L_;
    long f_;
    size_t r_, c_;
    std::vector<int64_t> num_;  // (r_*c_) blocks of f_ coefficients
    int64_t den_ = 1;

    void normalize();
};

// Arithmetic in Z/q for a prime q = 1 mod L, with a fixed primitive L-th root of unity.
struct ModularField {
    uint64_t q = 0;
    long L = 1;
    uint64_t omega = 1;
    std::vector<uint64_t> powers;  // omega^k for 0 <= k < L

    // Image of x under zeta_L -> omega; x must lie in Q(zeta_L) and have denominator prime to q.
    uint64_t map(const Cyclotomic& x) const;
    uint64_t mul(uint64_t a, uint64_t b) const { return static_cast<uint64_t>((__uint128_t)a * b % q); }
    uint64_t add(uint64_t a, uint64_t b) const { uint64_t s = a + b; return s >= q ? s - q : s; }
    uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + q - b; }
    uint64_t pow(uint64_t a, uint64_t e) const;
    uint64_t inv(uint64_t a) const { return pow(a, q - 2); }
};

// `which` selects among successive suitable primes below 2^62.
ModularField make_modular_field(long L, int which = 0);

bool is_prime_u64(uint64_t n);

using ModRow = std::vector<std::pair<size_t, uint64_t>>;

struct ModRankResult {
    size_t rank = 0;
    std::vector<size_t> pivot_rows;  // indices into the input rows
    std::vector<size_t> pivot_cols;
};

// Incremental row reduction mod q.  Stops early once rank reaches `rank_cap`.
ModRankResult rank_mod(const ModularField& F, const std::vector<ModRow>& rows, size_t ncols,
                       size_t rank_cap);

}  // namespace sl2reps
