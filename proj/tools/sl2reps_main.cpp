// sl2reps command-line frontend.
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "sl2reps/irreps.hpp"
#include "sl2reps/serialize.hpp"
#include "sl2reps/sl2.hpp"
#include "sl2reps/symm.hpp"
#include "sl2reps/weil.hpp"

using namespace sl2reps;
using nlohmann::json;

namespace {

enum Exit { Ok = 0, VerificationFailure = 1, InputError = 2, BudgetExceeded = 3 };

class input_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class budget_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Config {
    // output
    std::string output = "-";
    std::string format;
    bool no_approx = false;
    int precision = 15;
    uint64_t seed = 1;
    size_t max_module_size = 4096;
    size_t max_degree = 256;

    // catalogue
    long p = 0;
    int lambda = 0;

    // rep sources
    std::string input;
    std::string builtin;
    bool explicit_basis = false;
    bool induce = false;
    std::string type;
    int sigma = 0;
    long r = 1;
    long t = 0;
    int which = 1;
    int epsilon = 1;
    long chi = -1;
    std::string sign;
    bool symmetrize = false;

    int trials = 20;

    JsonOptions json_options() const { return {!no_approx, precision}; }
};

void write_output(const Config& c, const std::string& text)
{
    if (c.output == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(c.output, std::ios::binary);
    if (!f) throw input_error("cannot open " + c.output + " for writing");
    f << text;
}

std::string read_input(const std::string& path)
{
    if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
    std::ifstream f(path, std::ios::binary);
    if (!f) throw input_error("cannot read " + path);
    return std::string(std::istreambuf_iterator<char>(f), {});
}

void check_prime_power(const Config& c)
{
    if (c.p < 2 || !is_prime_long(c.p)) throw input_error("--p must be a prime");
    if (c.lambda < 1) throw input_error("--lambda must be positive");
}

QuadModule module_from_options(const Config& c)
{
    check_prime_power(c);
    QuadModule m = QuadModule::make(parse_kind(c.type), c.p, c.lambda, c.sigma, c.r, c.t);
    if (m.size() > c.max_module_size)
        throw budget_error("module " + m.name() + " has " + std::to_string(m.size()) + " elements, budget is " +
                           std::to_string(c.max_module_size));
    return m;
}

Rep builtin_source(const Config& c)
{
    const BuiltinPermRep& b = builtin_perm_rep(c.builtin);
    Perm s = parse_cycles(b.s_cycles, b.points);
    Perm t = parse_cycles(b.t_cycles, b.points);
    MatrixRep mr = permutation_rep(s, t);
    Eigenbasis basis = fourier_eigenbasis(t);
    json prov = {{"family", "permutation"}, {"name", b.name}, {"s", b.s_cycles}, {"t", b.t_cycles}};
    if (c.explicit_basis) {
        auto e = explicit_symmetric_basis(c.builtin);
        if (!e) throw input_error("no explicit symmetric basis is known for " + c.builtin);
        basis = *e;
        prov["basis"] = "explicit";
    } else {
        prov["basis"] = "fourier";
    }
    if (c.induce) {
        prov["induced"] = true;
        return induce_restrict(mr, basis, prov);
    }
    return rep_in_basis(mr, basis, prov);
}

// Rep described by the build options (or read with --input).
Rep build_rep(const Config& c)
{
    if (!c.input.empty()) return rep_from_json(parse_json_text(read_input(c.input)));
    if (!c.builtin.empty()) return builtin_source(c);
    if (c.type.empty()) throw input_error("one of --input, --builtin or --type is required");
    if (c.type == "special") {
        if (c.lambda < 2) throw input_error("special representations need --lambda >= 2");
        return symmetric_basis_special(c.lambda, c.r, c.t == 0 ? 1 : c.t, c.which).rep;
    }
    QuadModule m = module_from_options(c);
    if (m.kind() == ModuleKind::Unary && (c.symmetrize || c.chi >= 0)) {
        if (c.epsilon != 1 && c.epsilon != -1) throw input_error("--epsilon must be 1 or -1");
        return symmetric_basis_unary(m.p(), m.lambda(), m.r(), c.epsilon).rep;
    }
    if (c.chi < 0) {
        if (c.symmetrize) throw input_error("--symmetrize needs --chi");
        return weil_matrices(m, c.max_module_size);
    }
    AutGroup g = aut_group(m);
    auto chars = characters(m, g);
    if (static_cast<size_t>(c.chi) >= chars.size())
        throw input_error("--chi must be below " + std::to_string(chars.size()) + " for " + m.name());
    const Character& chi = chars[c.chi];
    if (orbit_reps(m, g, chi).theta_chi.empty()) throw input_error(chi.name() + " cuts out the zero subspace");
    if (!c.sign.empty()) {
        if (c.sign != "plus" && c.sign != "minus") throw input_error("--sign must be plus or minus");
        SplitResult sp = plus_minus_split(m, g, chi);
        if (c.sign == "plus") return sp.plus;
        if (!sp.minus) throw input_error("the minus part of " + chi.name() + " is zero");
        return *sp.minus;
    }
    if (c.symmetrize) return symmetric_basis_standard(m, g, chi).rep;
    return subspace_rep(m, g, chi);
}

void check_degree(const Config& c, const Rep& r)
{
    if (r.dim() > c.max_degree)
        throw budget_error("degree " + std::to_string(r.dim()) + " exceeds the budget " + std::to_string(c.max_degree));
}

Catalogue catalogue(const Config& c)
{
    check_prime_power(c);
    Budget b;
    b.max_module_size = c.max_module_size;
    b.max_degree = c.max_degree;
    return enumerate_irreps(c.p, c.lambda, b);
}

std::string catalogue_table(const Catalogue& cat)
{
    std::ostringstream os;
    os << "level  degree  kind            irreducible  symmetric  provenance\n";
    for (const auto& r : cat.records) {
        os << std::left << std::setw(7) << r.rep.level << std::setw(8) << r.rep.dim() << std::setw(16) << r.kind
           << std::setw(13) << (r.certified_irreducible ? "yes" : "no") << std::setw(11) << (r.symmetric ? "yes" : "no")
           << r.rep.provenance.dump() << '\n';
    }
    os << "# " << cat.records.size() << " irreps, sum of squared degrees " << cat.sum_of_squares.get_str() << " of "
       << cat.group_order.get_str() << (cat.complete ? " (complete)" : " (incomplete)") << '\n';
    for (const auto& n : cat.notes) os << "# note: " << n << '\n';
    return os.str();
}

int catalogue_exit(const Catalogue& cat)
{
    if (cat.budget_exceeded) {
        std::cerr << "budget exceeded; output is partial\n";
        return BudgetExceeded;
    }
    if (!cat.complete) {
        std::cerr << "catalogue incomplete: sum of squared degrees " << cat.sum_of_squares.get_str() << " < "
                  << cat.group_order.get_str() << '\n';
        return VerificationFailure;
    }
    return Ok;
}

int cmd_list(const Config& c)
{
    Catalogue cat = catalogue(c);
    std::string fmt = c.format.empty() ? "table" : c.format;
    if (fmt == "table") write_output(c, catalogue_table(cat));
    else if (fmt == "csv") write_output(c, catalogue_csv(cat));
    else if (fmt == "json") write_output(c, canonical_dump(to_json(cat, c.json_options())));
    else throw input_error("--format must be table, csv or json");
    return catalogue_exit(cat);
}

int cmd_export(const Config& c)
{
    if (!c.input.empty()) {
        write_output(c, canonical_dump(to_json(build_rep(c), c.json_options())));
        return Ok;
    }
    Catalogue cat = catalogue(c);
    std::string fmt = c.format.empty() ? "json" : c.format;
    if (fmt == "csv") write_output(c, catalogue_csv(cat));
    else if (fmt == "json") write_output(c, canonical_dump(to_json(cat, c.json_options())));
    else throw input_error("--format must be csv or json");
    return catalogue_exit(cat);
}

int cmd_build(const Config& c)
{
    Rep r = build_rep(c);
    check_degree(c, r);
    if (c.symmetrize && !verify_symmetric(r)) {
        SymmetrizationResult res = diagonal_symmetrize(r);
        if (!res.result) {
            write_output(c, canonical_dump(to_json(res, c.json_options())));
            return VerificationFailure;
        }
        r = *res.result;
    }
    write_output(c, canonical_dump(to_json(r, c.json_options())));
    return Ok;
}

int cmd_symmetrize(const Config& c)
{
    Rep r = build_rep(c);
    check_degree(c, r);
    SymmetrizationResult res = diagonal_symmetrize(r);
    write_output(c, canonical_dump(to_json(res, c.json_options())));
    return res.verdict == Verdict::Symmetric || res.verdict == Verdict::Symmetrized ? Ok : VerificationFailure;
}

int cmd_obstruct(const Config& c)
{
    Rep r = build_rep(c);
    check_degree(c, r);
    SymmetrizationResult res = obstruction_test(r);
    if (res.verdict == Verdict::Inconclusive) res = diagonal_symmetrize(r);
    json out = to_json(res, c.json_options());
    // s entries between the witness indices, 1-based keys "j,k".
    if (res.witness && res.witness->size() == 3) {
        const auto& w = *res.witness;
        json entries = json::object();
        for (auto [a, b] : {std::pair{0, 1}, {0, 2}, {1, 2}})
            entries[std::to_string(w[a] + 1) + "," + std::to_string(w[b] + 1)] =
                to_json(r.s(w[a], w[b]), c.json_options());
        out["entries"] = entries;
    }
    write_output(c, canonical_dump(out));
    return res.verdict == Verdict::Inconclusive ? VerificationFailure : Ok;
}

int cmd_verify(const Config& c)
{
    Rep r = build_rep(c);
    check_degree(c, r);
    RepCheck rc = check_rep(r);
    json report = {{"shape", rc.shape},
                   {"unitary", rc.unitary},
                   {"s_fourth", rc.s_fourth},
                   {"presentation", rc.presentation},
                   {"t_roots", rc.t_roots},
                   {"level_matches", rc.level_matches},
                   {"level", r.level},
                   {"symmetric", verify_symmetric(r)},
                   {"seed", c.seed}};
    bool pass = rc.ok();
    if (pass) {
        CongruenceReport cr = verify_congruence(r, r.level, c.trials, c.seed);
        report["congruence"] = to_json(cr);
        pass = cr.pass;
    } else {
        report["congruence"] = nullptr;
    }
    report["pass"] = pass;
    write_output(c, canonical_dump(report));
    if (!pass) std::cerr << "verification failed\n";
    return pass ? Ok : VerificationFailure;
}

void add_output_options(CLI::App* app, Config& c)
{
    app->add_option("-o,--output", c.output, "Output file, - for stdout");
    app->add_flag("--no-approx", c.no_approx, "Omit floating-point approximations");
    app->add_option("--precision", c.precision, "Significant digits of approximations")->check(CLI::Range(1, 17));
    app->add_option("--seed", c.seed, "Random seed");
    app->add_option("--budget", c.max_module_size, "Largest quadratic module size");
    app->add_option("--max-degree", c.max_degree, "Largest representation degree");
}

void add_catalogue_options(CLI::App* app, Config& c, bool required)
{
    auto* p = app->add_option("--p", c.p, "Prime");
    auto* l = app->add_option("--lambda", c.lambda, "Exponent: level p^lambda");
    if (required) {
        p->required();
        l->required();
    }
    app->add_option("--format", c.format, "table, csv or json");
}

void add_rep_options(CLI::App* app, Config& c)
{
    app->add_option("--p", c.p, "Prime");
    app->add_option("--lambda", c.lambda, "Exponent");
    app->add_option("-i,--input", c.input, "Rep JSON file, - for stdin");
    app->add_option("--builtin", c.builtin, "phi1, phi2, phi3 or phi4");
    app->add_flag("--explicit", c.explicit_basis, "Use the explicit symmetric basis of a builtin");
    app->add_flag("--induce", c.induce, "Induce a builtin to GL2(Z) and restrict");
    app->add_option("--type", c.type, "D, N, R, unary or special");
    app->add_option("--sigma", c.sigma, "Second exponent of R-type modules");
    app->add_option("--r", c.r, "Form parameter r");
    app->add_option("--t", c.t, "Form parameter t");
    app->add_option("--which", c.which, "Character choice of special representations");
    app->add_option("--epsilon", c.epsilon, "Sign of unary representations");
    app->add_option("--chi", c.chi, "Character index");
    app->add_option("--sign", c.sign, "plus or minus part of an involutive character");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Representations of SL2(Z/nZ) with symmetric bases"};
    app.require_subcommand(1);
    Config c;

    auto* list = app.add_subcommand("list", "Enumerate the irreducible representations of SL2(Z/p^lambda)");
    add_catalogue_options(list, c, true);
    add_output_options(list, c);

    auto* exp = app.add_subcommand("export", "Write a catalogue, or re-emit a Rep in canonical form");
    add_catalogue_options(exp, c, false);
    exp->add_option("-i,--input", c.input, "Rep JSON file to re-emit");
    add_output_options(exp, c);

    auto* build = app.add_subcommand("build", "Build a representation");
    add_rep_options(build, c);
    build->add_flag("--symmetrize", c.symmetrize, "Emit a symmetric basis");
    add_output_options(build, c);

    auto* symm = app.add_subcommand("symmetrize", "Find a diagonal basis change making s symmetric");
    add_rep_options(symm, c);
    add_output_options(symm, c);

    auto* obst = app.add_subcommand("obstruct", "Run the triple-product obstruction test");
    add_rep_options(obst, c);
    add_output_options(obst, c);

    auto* ver = app.add_subcommand("verify", "Check relations, unitarity and congruence");
    add_rep_options(ver, c);
    ver->add_option("--trials", c.trials, "Random words for the congruence check");
    add_output_options(ver, c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? Ok : InputError;
    }

    try {
        if (*list) return cmd_list(c);
        if (*exp) {
            if (c.input.empty()) {
                if (c.p == 0 || c.lambda == 0) throw input_error("export needs --input or --p and --lambda");
            }
            return cmd_export(c);
        }
        if (*build) return cmd_build(c);
        if (*symm) return cmd_symmetrize(c);
        if (*obst) return cmd_obstruct(c);
        if (*ver) return cmd_verify(c);
    } catch (const schema_error& e) {
        std::cerr << "schema error at " << e.what() << '\n';
        return InputError;
    } catch (const budget_error& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return BudgetExceeded;
    } catch (const std::length_error& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return BudgetExceeded;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return InputError;
    } catch (const std::out_of_range& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return InputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return VerificationFailure;
    }
    return InputError;
}
