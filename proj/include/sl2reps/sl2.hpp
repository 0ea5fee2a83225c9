#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "sl2reps/matrix.hpp"
#include "sl2reps/rep.hpp"

namespace sl2reps {

// 2x2 integer matrix (a b; c d).
struct Mat2 {
    mpz_class a = 1, b = 0, c = 0, d = 1;

    static Mat2 S() { return {0, 1, -1, 0}; }
    static Mat2 T() { return {1, 1, 0, 1}; }
    mpz_class det() const { return a * d - b * c; }
    Mat2 reduced(long n) const;  // entries in [0, n)
    bool operator==(const Mat2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
};

Mat2 operator*(const Mat2& x, const Mat2& y);
Mat2 power(const Mat2& x, long k);  // x in SL2(Z), k may be negative

struct Letter {
    char gen;  // 's' or 't'
    long exp;
};

class SL2Word {
public:
    std::vector<Letter> letters;

    // Appends gen^exp, merging with the last letter and dropping zero exponents.
    void push(char gen, long exp);
    Mat2 matrix() const;
    std::string to_string() const;
    static SL2Word parse(const std::string& text);
};

// Word whose image in SL2(Z/n) is A; throws std::invalid_argument unless det A = 1 mod n.
SL2Word decompose_modn(const Mat2& A, long n);

CMatrix evaluate(const SL2Word& w, const Rep& r);

SL2Word random_word(std::mt19937_64& rng, long n);

struct CongruenceReport {
    bool pass = true;
    bool level_ok = true;
    std::optional<std::string> witness;
    uint64_t seed = 0;
    long n = 1;
    int trials = 0;
};

CongruenceReport verify_congruence(const Rep& r, long n, int trials, uint64_t seed);

// |SL2(Z/n)|
mpz_class group_order(long n);

}  // namespace sl2reps
