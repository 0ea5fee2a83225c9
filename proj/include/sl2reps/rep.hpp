#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "sl2reps/cyclotomic.hpp"
#include "sl2reps/matrix.hpp"

namespace sl2reps {

// Unitary representation of SL2(Z) given on generators: s as a full matrix and t
// as its diagonal.
struct Rep {
    std::vector<std::string> labels;
    CMatrix s;
    std::vector<Cyclotomic> t;
    long level = 1;
    nlohmann::json provenance = nlohmann::json::object();

    size_t dim() const { return t.size(); }
    CMatrix t_matrix() const { return CMatrix::diagonal(t); }
};

// lcm of the orders of the entries; throws not_root_of_unity.
long level_of(const std::vector<Cyclotomic>& t);

// x^k for a root of unity x (k may be negative).
Cyclotomic root_power(const Cyclotomic& x, long k);

Rep make_rep(std::vector<std::string> labels, CMatrix s, std::vector<Cyclotomic> t,
             nlohmann::json provenance = nlohmann::json::object());

struct RepCheck {
    bool shape = false;
    bool unitary = false;
    bool s_fourth = false;      // s^4 = I
    bool presentation = false;  // (s^-1 t)^3 = s^2, equivalent with s^4 = I to (st)^3 = I
    bool literal = false;       // (s t)^3 = s^2; holds exactly when s^2 = I as well
    bool t_roots = false;
    bool level_matches = false;
    bool ok() const { return shape && unitary && s_fourth && presentation && t_roots && level_matches; }
    std::string summary() const;
};

RepCheck check_rep(const Rep& r);

}  // namespace sl2reps
