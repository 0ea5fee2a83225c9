#include "sl2reps/rep.hpp"

#include <sstream>

namespace sl2reps {

long level_of(const std::vector<Cyclotomic>& t)
{
    long L = 1;
    for (const auto& x : t) L = detail::lcm_long(L, order_of_root(x));
    return L;
}

Cyclotomic root_power(const Cyclotomic& x, long k)
{
    auto r = as_root_of_unity(x);
    if (!r) throw not_root_of_unity();
    long n = r->second;
    long e = ((r->first * (k % n)) % n + n) % n;
    return root_of_unity(e, n);
}

Rep make_rep(std::vector<std::string> labels, CMatrix s, std::vector<Cyclotomic> t, nlohmann::json provenance)
{
    Rep r;
    r.labels = std::move(labels);
    r.s = std::move(s);
    r.t = std::move(t);
    r.level = level_of(r.t);
    r.provenance = std::move(provenance);
    return r;
}

namespace {

// m * diag(d)
CMatrix scale_columns(const CMatrix& m, const std::vector<Cyclotomic>& d)
{
    CMatrix out(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) out(i, j) = m(i, j) * d[j];
    return out;
}

}  // namespace

RepCheck check_rep(const Rep& r)
{
    RepCheck c;
    size_t n = r.dim();
    c.shape = r.s.rows() == n && r.s.cols() == n && r.labels.size() == n;
    if (!c.shape) return c;
    CMatrix sh = r.s.conj_transpose();
    c.unitary = (r.s * sh).is_identity();
    CMatrix s2 = r.s * r.s;
    c.s_fourth = (s2 * s2).is_identity();
    CMatrix a = scale_columns(sh, r.t);
    c.presentation = (a * a * a) == s2;
    CMatrix b = scale_columns(r.s, r.t);
    c.literal = (b * b * b) == s2;
    try {
        c.level_matches = level_of(r.t) == r.level;
        c.t_roots = true;
    } catch (const not_root_of_unity&) {
        c.t_roots = false;
    }
    return c;
}

std::string RepCheck::summary() const
{
    std::ostringstream os;
    os << "shape=" << shape << " unitary=" << unitary << " s^4=I:" << s_fourth
       << " (s^-1 t)^3=s^2:" << presentation << " t-roots=" << t_roots << " level=" << level_matches;
    return os.str();
}

}  // namespace sl2reps
