#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sl2reps/cyclotomic.hpp"
#include "sl2reps/matrix.hpp"
#include "sl2reps/rep.hpp"

namespace sl2reps {

using ExactRow = std::vector<std::pair<size_t, Cyclotomic>>;

struct ExactRref {
    std::vector<size_t> pivot_cols;
    std::vector<std::vector<Cyclotomic>> rows;  // dense, one per pivot
};

// Gauss-Jordan over cyclotomics; pivots on the first nonzero entry, rows taken in order.
ExactRref exact_rref(const std::vector<ExactRow>& rows, size_t ncols);
std::vector<std::vector<Cyclotomic>> nullspace(const ExactRref& r, size_t ncols);

// Space of X (to.dim x from.dim) with X from(g) = to(g) X for g = s, t.
struct IntertwinerSpace {
    size_t unknowns = 0;
    size_t equations = 0;
    size_t nullity_mod_q = 0;          // upper bound for the true dimension
    std::optional<size_t> dimension;   // exact, when certified
    std::vector<CMatrix> basis;        // exact solutions, when computed
};

// With exact_basis = false the solve stops at the modular bound whenever that bound
// already settles the dimension (0 in general, 1 for a rep against itself).
IntertwinerSpace intertwiners(const Rep& from, const Rep& to, bool exact_basis);

bool is_intertwiner(const CMatrix& X, const Rep& from, const Rep& to);

struct IrreducibilityResult {
    bool irreducible = false;
    size_t commutant_dim = 0;
    bool certified = false;
};

IrreducibilityResult is_irreducible(const Rep& r);

struct EquivalenceResult {
    bool equivalent = false;
    bool certified = false;
    std::optional<CMatrix> intertwiner;
};

EquivalenceResult are_equivalent(const Rep& a, const Rep& b);

// rank over Q(zeta) is at least the rank mod q; full modular rank proves invertibility.
bool certainly_invertible(const CMatrix& m);

}  // namespace sl2reps
