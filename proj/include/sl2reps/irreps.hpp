#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "sl2reps/linalg.hpp"
#include "sl2reps/quadmod.hpp"
#include "sl2reps/rep.hpp"
#include "sl2reps/symm.hpp"

namespace sl2reps {

// Cheap invariants of the equivalence class: equal classes give equal keys.
struct EquivalenceKey {
    size_t degree = 0;
    long level = 1;
    std::vector<std::string> t_spectrum;  // sorted canonical strings
    std::string trace_s;

    bool operator==(const EquivalenceKey&) const = default;
};

EquivalenceKey equivalence_key(const Rep& r);

struct IrrepRecord {
    Rep rep;
    // trivial, standard, standard_plus, standard_minus, special, unary_plus,
    // unary_minus, tensor, crt
    std::string kind;
    bool certified_irreducible = false;
    size_t commutant_dim = 0;
    bool symmetric = false;
    EquivalenceKey key;
};

// Certifies irreducibility and fills the key.
IrrepRecord make_record(Rep rep, std::string kind);

Rep trivial_rep();

struct SplitResult {
    Rep plus;
    std::optional<Rep> minus;  // empty when phi_kappa is the identity on V^chi
};

// V^chi_+ and V^chi_- on the symmetric basis; chi must be an involution.
SplitResult plus_minus_split(const QuadModule& m, const AutGroup& g, const Character& chi);

IrrepRecord special_irreps(int lambda, long r, long t, int which_chi);
// (R_{p^lambda}(r)_+)_1 and (R_{p^lambda}(r)_-)_1, in that order.
std::vector<IrrepRecord> unary_irreps(long p, int lambda, long r);

// Kronecker product on the product basis, first factor major.
Rep tensor(const Rep& a, const Rep& b);
// Tensor product of factors with pairwise coprime levels.
Rep crt_compose(const std::vector<Rep>& factors);

struct Budget {
    size_t max_module_size = 4096;
    size_t max_degree = 256;
};

struct Catalogue {
    long p = 2;
    int lambda = 1;
    std::vector<IrrepRecord> records;
    mpz_class sum_of_squares = 0;
    mpz_class group_order = 0;
    bool complete = false;         // sum of squares reached the group order
    bool budget_exceeded = false;  // some module or candidate was skipped
    std::vector<std::string> notes;
};

// All irreducible representations of SL2(Z/p^lambda), up to equivalence, sorted by
// (level, degree, kind, provenance).
Catalogue enumerate_irreps(long p, int lambda, const Budget& budget = {});

}  // namespace sl2reps
