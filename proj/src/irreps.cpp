#include "sl2reps/irreps.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "sl2reps/sl2.hpp"
#include "sl2reps/weil.hpp"

namespace sl2reps {

EquivalenceKey equivalence_key(const Rep& r)
{
    EquivalenceKey k;
    k.degree = r.dim();
    k.level = r.level;
    for (const auto& x : r.t) k.t_spectrum.push_back(x.to_string());
    std::sort(k.t_spectrum.begin(), k.t_spectrum.end());
    Cyclotomic tr;
    for (size_t i = 0; i < r.dim(); ++i) tr += r.s(i, i);
    k.trace_s = tr.to_string();
    return k;
}

IrrepRecord make_record(Rep rep, std::string kind)
{
    IrrepRecord rec;
    IrreducibilityResult ir = is_irreducible(rep);
    rec.certified_irreducible = ir.certified && ir.irreducible;
    rec.commutant_dim = ir.commutant_dim;
    rec.symmetric = verify_symmetric(rep);
    rec.key = equivalence_key(rep);
    rec.kind = std::move(kind);
    rec.rep = std::move(rep);
    return rec;
}

Rep trivial_rep()
{
    CMatrix s(1, 1);
    s(0, 0) = Cyclotomic(1);
    return make_rep({"1"}, s, {Cyclotomic(1)}, {{"family", "trivial"}});
}

SplitResult plus_minus_split(const QuadModule& m, const AutGroup& g, const Character& chi)
{
    if (!chi.is_involution) throw std::invalid_argument("plus/minus split needs an involutive character");
    SymmetricBasis sb = symmetric_basis_standard(m, g, chi);
    std::vector<uint32_t> kap(m.size());
    for (size_t a = 0; a < m.size(); ++a) kap[a] = static_cast<uint32_t>(m.kappa(a));
    std::vector<RootVector> plus, minus;
    for (const auto& v : sb.vectors) {
        RootVector w = permute(v, kap);
        if (same_function(w, v)) plus.push_back(v);
        else if (same_function(w, times_root(v, 1, 2))) minus.push_back(v);
        else throw std::logic_error("symmetric basis vector " + v.label + " is not a kappa eigenvector");
    }
    nlohmann::json prov = sb.rep.provenance;
    SplitResult out;
    if (minus.empty()) {
        out.plus = sb.rep;
        return out;
    }
    if (plus.empty()) {
        out.plus = sb.rep;
        out.plus.provenance["sign"] = "-";
        return out;
    }
    prov["sign"] = "+";
    out.plus = restrict_weil(m, plus, prov);
    prov["sign"] = "-";
    out.minus = restrict_weil(m, minus, prov);
    return out;
}

IrrepRecord special_irreps(int lambda, long r, long t, int which_chi)
{
    SymmetricBasis sb = symmetric_basis_special(lambda, r, t, which_chi);
    if (!check_rep(sb.rep).ok()) throw not_special("listed vectors do not span a subrepresentation");
    return make_record(std::move(sb.rep), "special");
}

std::vector<IrrepRecord> unary_irreps(long p, int lambda, long r)
{
    std::vector<IrrepRecord> out;
    out.push_back(make_record(symmetric_basis_unary(p, lambda, r, 1).rep, "unary_plus"));
    out.push_back(make_record(symmetric_basis_unary(p, lambda, r, -1).rep, "unary_minus"));
    return out;
}

Rep tensor(const Rep& a, const Rep& b)
{
    std::vector<std::string> labels;
    std::vector<Cyclotomic> t;
    for (size_t i = 0; i < a.dim(); ++i)
        for (size_t j = 0; j < b.dim(); ++j) {
            labels.push_back(a.labels[i] + "(x)" + b.labels[j]);
            t.push_back(a.t[i] * b.t[j]);
        }
    nlohmann::json prov = {{"family", "tensor"}, {"factors", {a.provenance, b.provenance}}};
    return make_rep(std::move(labels), kron(a.s, b.s), std::move(t), std::move(prov));
}

Rep crt_compose(const std::vector<Rep>& factors)
{
    if (factors.empty()) throw std::invalid_argument("crt_compose needs at least one factor");
    for (size_t i = 0; i < factors.size(); ++i)
        for (size_t j = i + 1; j < factors.size(); ++j)
            if (std::gcd(factors[i].level, factors[j].level) != 1)
                throw std::invalid_argument("crt_compose needs pairwise coprime levels");
    Rep out = factors[0];
    for (size_t i = 1; i < factors.size(); ++i) out = tensor(out, factors[i]);
    nlohmann::json fs = nlohmann::json::array();
    for (const auto& f : factors) fs.push_back(f.provenance);
    out.provenance = {{"family", "crt"}, {"factors", fs}};
    return out;
}

namespace {

struct Enumerator {
    long p;
    int lambda;
    Budget budget;
    Catalogue cat;

    bool full() const { return cat.sum_of_squares == cat.group_order; }

    mpz_class square(size_t d) const { return mpz_class(static_cast<unsigned long>(d)) * static_cast<unsigned long>(d); }

    bool fits(size_t d)
    {
        if (d > budget.max_degree) {
            cat.budget_exceeded = true;
            return false;
        }
        return true;
    }

    // Adds rec if it is irreducible and new; returns whether it was added.
    bool offer(IrrepRecord rec)
    {
        if (!rec.certified_irreducible) return false;
        for (const auto& old : cat.records)
            if (old.key == rec.key && are_equivalent(old.rep, rec.rep).equivalent) return false;
        cat.sum_of_squares += square(rec.rep.dim());
        if (cat.sum_of_squares > cat.group_order) throw std::logic_error("sum of squared degrees exceeds the group order");
        cat.records.push_back(std::move(rec));
        return true;
    }

    void offer_rep(Rep rep, const std::string& kind)
    {
        if (!fits(rep.dim())) return;
        offer(make_record(std::move(rep), kind));
    }

    void standard_family(long n)
    {
        size_t skipped = 0;
        auto mods = modules_of_level(n, budget.max_module_size, &skipped);
        if (skipped) {
            cat.budget_exceeded = true;
            cat.notes.push_back(std::to_string(skipped) + " module(s) of level " + std::to_string(n) +
                                " exceed the module size budget");
        }
        for (const auto& m : mods) {
            if (m.kind() == ModuleKind::Unary) {
                for (auto& rec : unary_irreps(m.p(), m.lambda(), m.r()))
                    if (fits(rec.rep.dim())) offer(std::move(rec));
                continue;
            }
            AutGroup g = aut_group(m);
            auto chars = characters(m, g);
            for (size_t ci = 0; ci < chars.size(); ++ci) {
                if (conjugate_index(chars, ci) < ci) continue;
                const Character& chi = chars[ci];
                if (orbit_reps(m, g, chi).theta_chi.empty()) continue;
                if (chi.is_involution) {
                    SplitResult sp = plus_minus_split(m, g, chi);
                    if (!sp.minus) {
                        offer_rep(std::move(sp.plus), "standard");
                    } else {
                        offer_rep(std::move(sp.plus), "standard_plus");
                        offer_rep(std::move(*sp.minus), "standard_minus");
                    }
                } else {
                    offer_rep(symmetric_basis_standard(m, g, chi).rep, "standard");
                }
            }
        }
    }

    void try_special(int k, long r, long t, int which)
    {
        try {
            IrrepRecord rec = special_irreps(k, r, t, which);
            if (fits(rec.rep.dim())) offer(std::move(rec));
        } catch (const not_special& e) {
            if (k >= 7) cat.notes.push_back(std::string("special candidate rejected: ") + e.what());
            else throw;
        } catch (const std::domain_error& e) {
            if (k < 7) throw;
            std::ostringstream os;
            os << "special candidate lambda=" << k << " r=" << r << " t=" << t << " chi_3^" << which
               << " rejected: " << e.what();
            cat.notes.push_back(os.str());
        }
    }

    void special_family(int k)
    {
        switch (k) {
        case 1: return;
        case 2: try_special(2, 1, 3, 1); return;
        case 3: try_special(3, 1, 3, 1); return;
        case 4:
            for (long r : {1, 3}) try_special(4, r, 3, 1);
            return;
        case 5:
            for (long r : {1, 3})
                for (int c : {1, 2}) try_special(5, r, 1, c);
            return;
        case 6:
            for (long r : {1, 3, 5, 7})
                for (long t : {1, 3}) try_special(6, r, t, 1);
            return;
        default:
            for (long r : {1, 3, 5, 7})
                for (long t : {1, 3}) {
                    QuadModule m = QuadModule::make(ModuleKind::R, 2, k, k - 3, r, t);
                    if (m.size() > budget.max_module_size) {
                        cat.budget_exceeded = true;
                        continue;
                    }
                    long a0 = 1 - (1L << (k - 4)) * t - (1L << (2 * k - 9));
                    AutGroup g = aut_group(m);
                    auto alpha = g.find(m.element_name(m.index(a0, 1)));
                    if (!alpha) throw std::logic_error("alpha missing from the automorphism group");
                    long ord = g.order_of(*alpha);
                    for (int which = 0; which < ord; ++which) try_special(k, r, t, which);
                }
        }
    }

    void tensor_closure()
    {
        std::set<std::pair<size_t, size_t>> tried;
        bool grew = true;
        while (grew && !full()) {
            grew = false;
            size_t n = cat.records.size();
            for (size_t i = 0; i < n && !full(); ++i)
                for (size_t j = i; j < n && !full(); ++j) {
                    if (!tried.insert({i, j}).second) continue;
                    const Rep& a = cat.records[i].rep;
                    const Rep& b = cat.records[j].rep;
                    if (cat.records[i].kind == "trivial" || cat.records[j].kind == "trivial") continue;
                    size_t d = a.dim() * b.dim();
                    if (square(d) > cat.group_order - cat.sum_of_squares) continue;
                    if (!fits(d)) continue;
                    if (offer(make_record(tensor(a, b), "tensor"))) grew = true;
                }
        }
    }

    void run()
    {
        long n = 1;
        for (int i = 0; i < lambda; ++i) n *= p;
        cat.group_order = group_order(n);
        offer(make_record(trivial_rep(), "trivial"));
        long q = 1;
        for (int k = 1; k <= lambda; ++k) {
            q *= p;
            if (p == 2) special_family(k);
            standard_family(q);
        }
        tensor_closure();
        cat.complete = full();
        if (!cat.complete) cat.notes.push_back("sum of squared degrees is below the group order");
        std::stable_sort(cat.records.begin(), cat.records.end(), [](const IrrepRecord& x, const IrrepRecord& y) {
            if (x.rep.level != y.rep.level) return x.rep.level < y.rep.level;
            if (x.rep.dim() != y.rep.dim()) return x.rep.dim() < y.rep.dim();
            if (x.kind != y.kind) return x.kind < y.kind;
            return x.rep.provenance.dump() < y.rep.provenance.dump();
        });
    }
};

}  // namespace

Catalogue enumerate_irreps(long p, int lambda, const Budget& budget)
{
    if (lambda < 1) throw std::invalid_argument("lambda must be positive");
    if (detail::prime_factors(p).size() != 1 || detail::prime_factors(p).front() != p)
        throw std::invalid_argument("p must be prime");
    Enumerator e{p, lambda, budget, {}};
    e.cat.p = p;
    e.cat.lambda = lambda;
    e.run();
    return std::move(e.cat);
}

}  // namespace sl2reps
