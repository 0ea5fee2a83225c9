#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sl2reps/cyclotomic.hpp"
#include "sl2reps/matrix.hpp"
#include "sl2reps/quadmod.hpp"
#include "sl2reps/rep.hpp"

namespace sl2reps {

Cyclotomic gauss_sum(const QuadModule& m);
// gamma_Q / |M|, the scalar in front of the Fourier kernel.
Cyclotomic weil_scalar(const QuadModule& m);

// W(M,Q) on the delta basis; throws std::length_error above max_size elements.
Rep weil_matrices(const QuadModule& m, size_t max_size = 256);

// Exact relation check of W(M,Q) that never materializes the dense matrices.
struct WeilCheck {
    bool symmetric = false;
    bool t_diagonal = true;
    bool unitary = false;
    bool s_fourth = false;
    bool presentation = false;  // (s^-1 t)^3 = s^2
    bool s_squared_identity = false;
    bool level_matches = false;
    bool gauss_magnitude = false;  // gamma * conj(gamma) = |M|
    bool ok() const { return symmetric && t_diagonal && unitary && s_fourth && presentation && level_matches; }
    std::string summary() const;
};

WeilCheck check_weil(const QuadModule& m);

// Finitely supported function on M.
struct LabeledVector {
    std::string label;
    std::map<size_t, Cyclotomic> coeffs;
};

struct RootTerm {
    uint32_t a;    // module element
    int32_t k;     // exponent of zeta_E
    int32_t mult;  // integer multiplicity
};

// scale * sum over terms of mult * zeta_E^k * delta_a
struct RootVector {
    std::string label;
    Cyclotomic scale = Cyclotomic(1);
    long E = 1;
    std::vector<RootTerm> terms;

    void rescale(long newE);
    void compress();  // merge equal (a, k) terms, drop zero multiplicities
    LabeledVector expand() const;
};

RootVector times_root(const RootVector& v, long k, long n);
// v + w; both must carry the same scale.
RootVector add_vectors(const RootVector& v, const RootVector& w);
RootVector scaled_vector(const RootVector& v, const Cyclotomic& c);
// <v, w> = sum_a v(a) conj(w(a)).
Cyclotomic inner_product(const RootVector& v, const RootVector& w);
// Applies a permutation of M to the support: (P v)(a) = v(perm^-1 a), i.e. delta_a -> delta_{perm a}.
RootVector permute(const RootVector& v, const std::vector<uint32_t>& perm);
// Complex conjugate of the coefficients.
RootVector conj_vector(const RootVector& v);
bool same_function(const RootVector& v, const RootVector& w);

// Matrix of W(M,Q) restricted to span(basis), basis assumed orthonormal.  Throws
// std::domain_error when a basis vector is not a t-eigenvector.
Rep restrict_weil(const QuadModule& m, const std::vector<RootVector>& basis, nlohmann::json provenance);

// Gram matrix <b_j, b_i>.
CMatrix gram_matrix(const std::vector<RootVector>& basis);
// U[i][j] = <to[j], from[i]>: coordinates of the `to` vectors in the `from` basis.
CMatrix change_of_basis(const std::vector<RootVector>& from, const std::vector<RootVector>& to);

struct OrbitData {
    std::vector<size_t> theta;  // one representative per orbit, in discovery order
    std::vector<size_t> theta_chi;
    std::vector<size_t> theta1, theta2, kappa_theta2;
    std::map<size_t, size_t> mu;         // a in theta1 -> aut index with kappa a = mu a
    std::map<size_t, size_t> stab_size;  // representative -> |Stab(a)|
    std::vector<size_t> rep_of;          // element -> its orbit representative
};

OrbitData orbit_reps(const QuadModule& m, const AutGroup& g, const Character& chi);

// Unnormalized sum over the group of chi(e) delta_{e a}.
RootVector ftilde(const QuadModule& m, const AutGroup& g, const Character& chi, size_t a);
// f_a^chi, normalized with the symbolic norm sqrt(|A| |Stab(a)|).
RootVector f_chi(const QuadModule& m, const AutGroup& g, const Character& chi, size_t a, size_t stab);

std::vector<RootVector> character_basis(const QuadModule& m, const AutGroup& g, const Character& chi,
                                        const OrbitData& od);

nlohmann::json character_provenance(const QuadModule& m, const Character& chi);

// W(M,Q,chi) on the f_a^chi basis ordered theta1, theta2, kappa theta2.
Rep subspace_rep(const QuadModule& m, const AutGroup& g, const Character& chi);

}  // namespace sl2reps
