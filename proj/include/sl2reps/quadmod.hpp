#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "json.hpp"
#include "sl2reps/cyclotomic.hpp"

namespace sl2reps {

enum class ModuleKind { D, N, R, Unary };

std::string kind_name(ModuleKind k);  // "D", "N", "R_sigma", "R_unary"
ModuleKind parse_kind(const std::string& s);

class invalid_module : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Finite quadratic module with at most two cyclic factors, elements indexed by
// x * d2 + y for (x, y) in Z/d1 + Z/d2.  Q and B are stored as numerators over
// the level p^lambda.
class QuadModule {
public:
    // t = 0 picks the default parameter where one exists (smallest valid t for
    // odd N-type, 1 otherwise).
    static QuadModule make(ModuleKind kind, long p, int lambda, int sigma = 0, long r = 1, long t = 0);
    static QuadModule from_descriptor(const nlohmann::json& j);

    ModuleKind kind() const { return kind_; }
    long p() const { return p_; }
    int lambda() const { return lambda_; }
    int sigma() const { return sigma_; }
    long r() const { return r_; }
    long t() const { return t_; }
    long u() const { return u_; }  // smallest quadratic nonresidue (odd p), else 0
    long level() const { return level_; }
    long d1() const { return d1_; }
    long d2() const { return d2_; }
    size_t size() const { return static_cast<size_t>(d1_ * d2_); }

    size_t index(long x, long y) const;
    std::pair<long, long> coords(size_t a) const { return {static_cast<long>(a) / d2_, static_cast<long>(a) % d2_}; }
    std::string element_name(size_t a) const;

    long q_num(size_t a) const { return qtab_[a]; }
    long b_num(size_t a, size_t b) const;
    mpq_class eval_Q(size_t a) const;
    mpq_class eval_B(size_t a, size_t b) const;

    size_t add(size_t a, size_t b) const;
    size_t neg(size_t a) const;
    size_t scale(long k, size_t a) const;  // k * a
    size_t kappa(size_t a) const;
    bool is_extremal() const { return kind_ == ModuleKind::R && p_ == 2 && sigma_ == lambda_ - 2; }

    // Quotient-ring structure for N and R types, elements read as x + X y.
    bool has_ring() const { return kind_ == ModuleKind::N || kind_ == ModuleKind::R; }
    size_t ring_mul(size_t a, size_t b) const;
    size_t ring_conj(size_t a) const;
    long norm(size_t a) const;  // Norm(x + X y) mod level
    size_t one() const { return index(1, 0); }

    std::string name() const;
    nlohmann::json descriptor() const;

private:
    ModuleKind kind_ = ModuleKind::D;
    long p_ = 2;
    int lambda_ = 1;
    int sigma_ = 0;
    long r_ = 1, t_ = 0, u_ = 0;
    long level_ = 2, d1_ = 2, d2_ = 2;
    long c0_ = 1;  // N-type: X^2 = X - c0
    std::vector<int32_t> qtab_;

    long q_formula(long x, long y) const;
    void validate() const;
};

// Every D, N, R or unary module of level n = p^lambda with at most max_size elements;
// larger ones are counted in *skipped.  Odd p uses r, t in {1, u}; p = 2 uses the
// residues r, t in {1, 3, 5, 7}.
std::vector<QuadModule> modules_of_level(long n, size_t max_size, size_t* skipped = nullptr);

int legendre_symbol(long a, long p);
long smallest_nonresidue(long p);
bool is_prime_long(long n);

// The abelian group of module automorphisms used to cut out character subspaces.
struct AutGroup {
    std::vector<std::string> names;
    std::vector<std::vector<uint32_t>> action;  // action[e][a] = e . a
    std::vector<std::vector<uint32_t>> mul;     // mul[e][f] = e f
    std::vector<uint32_t> inv;
    size_t identity = 0;
    std::vector<size_t> gens;  // cyclic factors of prime-power order
    std::vector<long> orders;
    std::vector<std::vector<long>> coords;  // exponents on gens
    long exponent = 1;

    size_t size() const { return names.size(); }
    std::optional<size_t> find(const std::string& name) const;
    long order_of(size_t e) const;
};

AutGroup aut_group(const QuadModule& m);

struct Character {
    std::vector<long> k;       // chi(gens[i]) = e(k[i] / orders[i])
    long E = 1;                // group exponent
    std::vector<long> values;  // chi(e) = e(values[e] / E)
    long order = 1;
    bool is_involution = true;
    std::optional<bool> is_primitive;  // nullopt for extremal modules
    size_t index = 0;

    Cyclotomic value(size_t e) const { return root_of_unity(values[e], E); }
    std::string name() const;
};

std::vector<Character> characters(const QuadModule& m, const AutGroup& g);
// Position of the complex-conjugate character in the list from characters().
size_t conjugate_index(const std::vector<Character>& chars, size_t i);
// Subgroup of elements fixing pM pointwise.
std::vector<size_t> fixing_subgroup(const QuadModule& m, const AutGroup& g);

}  // namespace sl2reps
