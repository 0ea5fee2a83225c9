#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sl2reps/cyclotomic.hpp"
#include "sl2reps/matrix.hpp"
#include "sl2reps/quadmod.hpp"
#include "sl2reps/rep.hpp"
#include "sl2reps/weil.hpp"

namespace sl2reps {

// A subrepresentation of a Weil representation on an explicit orthonormal basis.
struct SymmetricBasis {
    Rep rep;
    std::vector<RootVector> vectors;
    // U[i][j] = <new_j, old_i> against the reference basis (the f_a^chi basis for
    // standard reps, the basis itself otherwise).
    CMatrix basis_change;
};

// Basis sqrt(chi(mu_a^-1)) f_a (a in theta1), (f_a + f_ka)/sqrt2 and i(f_a - f_ka)/sqrt2 (a in theta2).
SymmetricBasis symmetric_basis_standard(const QuadModule& m, const AutGroup& g, const Character& chi);

class not_special : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The special representations of level 2^lambda.  which_chi is 1 or 2 for lambda = 5
// (trivial character or the one with kernel <(9,2)>), the exponent k of chi_3^k for
// lambda >= 7, and 1 otherwise.
SymmetricBasis symmetric_basis_special(int lambda, long r, long t, int which_chi);

// Irreducible top-level piece of the epsilon-part of the unary module R_{p^lambda}(r).
SymmetricBasis symmetric_basis_unary(long p, int lambda, long r, int epsilon);

// phi_kappa-bar fixes v: conj(v(kappa a)) = v(a).
bool fixed_by_antilinear_kappa(const QuadModule& m, const RootVector& v);

bool verify_symmetric(const Rep& r);
bool verify_symmetric(const CMatrix& s, const CMatrix& t);

enum class Purity { Real, ImaginaryReal };
std::string purity_name(Purity p);  // "real", "i-times-real"
// Throws std::logic_error when neither s nor i*s is real.
Purity check_pure(const Rep& r);

enum class Verdict { Symmetric, Symmetrized, Obstructed, Inconclusive };
std::string verdict_name(Verdict v);

struct SymmetrizationResult {
    Verdict verdict = Verdict::Inconclusive;
    std::optional<std::vector<size_t>> witness;  // 0-based indices
    std::optional<Cyclotomic> lhs, rhs;
    std::optional<CMatrix> basis_change;  // diagonal unitary U with U^-1 s U symmetric
    std::optional<Rep> result;
    std::string note;
};

// Triple-product test over indices whose t-eigenvalues are simple.
SymmetrizationResult obstruction_test(const Rep& r);
// Diagonal gauge fixing for a multiplicity-free t-spectrum; falls back to obstruction_test otherwise.
SymmetrizationResult diagonal_symmetrize(const Rep& r);

// Permutations of {0..n-1}: perm[i] is the image of i.
using Perm = std::vector<uint32_t>;

// Cycle notation over points 1..n, e.g. "(12)(34)" or "(1,2)(10,11)".
Perm parse_cycles(const std::string& text, size_t n);
std::string cycles_string(const Perm& p);

class not_sl2_action : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Generators on a standard basis; t need not be diagonal.
struct MatrixRep {
    CMatrix s, t;
};

MatrixRep permutation_rep(const Perm& s, const Perm& t);

struct Eigenbasis {
    CMatrix vectors;  // orthonormal columns
    std::vector<Cyclotomic> eigenvalues;
    std::vector<std::string> labels;
};

// Fixed points first, then each cycle from its smallest point with frequencies 0..len-1.
Eigenbasis fourier_eigenbasis(const Perm& t);

// V^dagger s V with t diagonal on the given eigenbasis; throws std::invalid_argument
// if the columns are not orthonormal t-eigenvectors.
Rep rep_in_basis(const MatrixRep& m, const Eigenbasis& b, nlohmann::json provenance);

struct BuiltinPermRep {
    std::string name;
    std::string s_cycles, t_cycles;
    size_t points;
};

const std::vector<BuiltinPermRep>& builtin_perm_reps();
const BuiltinPermRep& builtin_perm_rep(const std::string& name);
// Explicit symmetric eigenbases known for phi1 and phi2.
std::optional<Eigenbasis> explicit_symmetric_basis(const std::string& name);
Rep builtin_rep(const std::string& name);  // Fourier basis

// rho restricted from the induced GL2(Z) representation, on the basis
// (sqrt(eps) v_j, conj(sqrt(eps) v_j)) / sqrt2; requires real orthogonal s and t with
// s^2 = I and (s t)^3 = I.
Rep induce_restrict(const MatrixRep& m, const Eigenbasis& b, nlohmann::json provenance);

}  // namespace sl2reps
