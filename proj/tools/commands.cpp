#include "commands.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdlib>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "parkhedron/parking_functions.hpp"
#include "parkhedron/parking_space.hpp"
#include "parkhedron/permutahedron.hpp"
#include "verify.hpp"

namespace parkhedron::cli {

namespace {

using nlohmann::json;

// Brute-force routes are only attempted below this many objects.
constexpr long long kEnumLimit = 20'000'000;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

template <class T>
std::string str(const T& v)
{
    std::ostringstream os;
    os << v;
    return os.str();
}

json parts_json(const std::vector<int>& parts)
{
    return json(parts);
}

struct Route {
    std::string name;
    Rational value;
};

// Prints the value of the first route and every route beneath it. Returns
// the exit code: disagreement between routes is a verification failure.
int report_routes(const std::vector<Route>& routes, const json& header, bool as_json, std::ostream& out,
                  std::ostream& err)
{
    const bool agree = std::all_of(routes.begin(), routes.end(),
                                   [&](const Route& r) { return r.value == routes.front().value; });
    if (as_json) {
        json j = header;
        const Rational& v = routes.front().value;
        j["value"] = denominator(v) == 1 ? to_json(BigInt(numerator(v))) : json(str(v));
        json rs = json::object();
        for (const auto& r : routes)
            rs[r.name] = denominator(r.value) == 1 ? to_json(BigInt(numerator(r.value))) : json(str(r.value));
        j["routes"] = rs;
        j["agree"] = agree;
        out << j.dump(2) << '\n';
    } else {
        std::size_t width = 0;
        for (const auto& r : routes)
            width = std::max(width, r.name.size());
        out << routes.front().value << '\n';
        for (const auto& r : routes)
            out << "  " << std::left << std::setw(static_cast<int>(width) + 2) << r.name << r.value << '\n';
    }
    if (!agree) {
        err << "routes disagree:";
        for (const auto& r : routes)
            err << ' ' << r.name << '=' << r.value;
        err << '\n';
        return kVerifyFailed;
    }
    return kOk;
}

void require(const CLI::Option* opt, const std::string& what)
{
    if (opt->count() == 0)
        throw UsageError(what + " requires " + opt->get_name());
}

// ---- lyndon ---------------------------------------------------------------

int cmd_lyndon(int m, int n, bool as_json, std::ostream& out)
{
    const CmnSpec spec(m, n);
    struct Row {
        BinaryWord word;
        PaddedPartition lambda;
        Partition runs;
        BigInt orbit;
    };
    std::vector<Row> rows;
    for (const auto& w : enumerate_B_lyndon(spec)) {
        PaddedPartition lam = word_to_partition(w, spec);
        BigInt orbit = orbit_size(lam);
        rows.push_back({w, std::move(lam), runs_of_ones(w), std::move(orbit)});
    }
    if (as_json) {
        json words = json::array();
        for (const auto& r : rows)
            words.push_back({{"word", r.word.to_string()},
                             {"lambda", parts_json(r.lambda.parts())},
                             {"runs", parts_json(r.runs.parts())},
                             {"orbit_size", to_json(r.orbit)}});
        out << json{{"m", m}, {"n", n}, {"words", words}}.dump(2) << '\n';
        return kOk;
    }
    std::vector<std::array<std::string, 4>> cells{{"word", "lambda", "runs", "orbit"}};
    for (const auto& r : rows)
        cells.push_back({r.word.to_string(), str(r.lambda), str(r.runs), str(r.orbit)});
    std::array<std::size_t, 4> width{};
    for (const auto& c : cells)
        for (std::size_t i = 0; i < 4; ++i)
            width[i] = std::max(width[i], c[i].size());
    for (const auto& c : cells) {
        for (std::size_t i = 0; i < 3; ++i)
            out << std::left << std::setw(static_cast<int>(width[i]) + 2) << c[i];
        out << c[3] << '\n';
    }
    return kOk;
}

// ---- frobenius / character ------------------------------------------------

struct Target {
    std::string name;
    int m = 0, n = 0, k = 0;
};

SymFunc target_frobenius(const Target& t)
{
    if (t.name == "tau-hat")
        return frobenius_tau_hat(CmnSpec(t.m, t.n));
    if (t.name == "gamma")
        return frobenius_gamma(t.n);
    return frobenius_pf(t.k);
}

json target_params(const Target& t)
{
    if (t.name == "tau-hat")
        return {{"m", t.m}, {"n", t.n}};
    if (t.name == "gamma")
        return {{"n", t.n}};
    return {{"k", t.k}};
}

SymFunc in_basis(const SymFunc& f, const std::string& basis)
{
    if (basis == "p")
        return to_p_basis(f);
    if (f.basis() != Basis::h)
        throw UsageError("cannot rewrite a p-basis function in the h basis");
    return f;
}

int emit_symfunc(const SymFunc& f, bool as_json, std::ostream& out)
{
    if (as_json)
        out << to_json(f).dump(2) << '\n';
    else
        out << format(f) << '\n';
    return kOk;
}

bool fixed_by(const std::vector<int>& values, const std::vector<int>& perm)
{
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[perm[i]] != values[i])
            return false;
    return true;
}

std::vector<Route> character_routes(const Target& t, const CycleType& mu)
{
    const SymFunc f = target_frobenius(t);
    if (mu.n() != f.degree())
        throw UsageError("--mu has size " + std::to_string(mu.n()) + " but the module has degree " +
                         std::to_string(f.degree()));
    std::vector<Route> routes{{"frobenius", character(f, mu)}};
    const auto perm = mu.permutation();
    if (t.name == "gamma") {
        routes.push_back({"fixed-points", Rational(fixed_point_count(t.n, mu))});
        routes.push_back({"formula", Rational(fixed_point_formula(t.n, mu))});
    } else if (t.name == "tau-hat") {
        const CmnSpec spec(t.m, t.n);
        BigInt bookkept = 0;
        for (const auto& w : enumerate_B_lyndon(spec))
            bookkept += orbit_fixed_points(word_to_partition(w, spec), mu);
        routes.push_back({"orbit-bookkeeping", Rational(bookkept)});
        if (ipow(BigInt(t.n), spec.N() - 2) <= kEnumLimit) {
            long long direct = 0;
            for_each_class_representative(spec, [&](const LatticePoint& x) { direct += fixed_by(x.coords, perm); });
            routes.push_back({"fixed-points", Rational(direct)});
        }
    } else {
        BigInt bookkept = 0;
        for (const auto& a : enumerate_nondecreasing_pf(t.k))
            bookkept += orbit_fixed_points(a, mu);
        routes.push_back({"orbit-bookkeeping", Rational(bookkept)});
        if (t.k <= 7) {
            long long direct = 0;
            for_each_parking_function(t.k, [&](const std::vector<int>& a) { direct += fixed_by(a, perm); });
            routes.push_back({"fixed-points", Rational(direct)});
        }
    }
    return routes;
}

// ---- count ----------------------------------------------------------------

std::vector<Route> count_routes(const std::string& what, const Target& t, std::optional<long long> residue,
                                const std::vector<int>& lambda)
{
    std::vector<Route> routes;
    auto add = [&](const char* name, const BigInt& v) { routes.push_back({name, Rational(v)}); };
    auto make_spec = [&] { return residue ? CmnSpec(t.m, t.n, *residue) : CmnSpec(t.m, t.n); };

    if (what == "C") {
        const CmnSpec spec = make_spec();
        add("formula", ipow(BigInt(t.n), spec.N() - 1));
        if (binomial(spec.N() + t.n - 1, t.n - 1) <= kEnumLimit) {
            BigInt total = 0;
            for_each_Y(spec, [&](const PaddedPartition& p) { total += orbit_size(p); });
            add("orbit-sum", total);
        }
        if (ipow(BigInt(t.n), spec.N() - 1) <= kEnumLimit) {
            long long direct = 0;
            for_each_C(spec, [&](const LatticePoint&) { ++direct; });
            add("enumeration", direct);
        }
    } else if (what == "Y") {
        const CmnSpec spec = make_spec();
        if (spec.has_default_residue())
            add("formula", count_Y_formula(spec));
        if (binomial(spec.N() + t.n - 1, t.n - 1) <= kEnumLimit) {
            long long direct = 0;
            for_each_Y(spec, [&](const PaddedPartition&) { ++direct; });
            add("enumeration", direct);
        }
    } else if (what == "lyndon") {
        const CmnSpec spec = make_spec();
        const BigInt formula = count_lyndon_formula(spec);
        add("formula", formula);
        if (formula <= kEnumLimit)
            add("enumeration", enumerate_B_lyndon(spec).size());
    } else if (what == "lattice") {
        if (!lambda.empty()) {
            add("enumeration", lattice_point_count(PermutahedronSpec(PaddedPartition(lambda))));
        } else {
            add("formula", ipow(BigInt(t.n), t.n - 2));
            add("enumeration", lattice_point_count(PermutahedronSpec(delta(t.n))));
        }
    } else {
        if (t.k < 1)
            throw UsageError("-k must be at least 1");
        add("formula", ipow(BigInt(t.k + 1), t.k - 1));
        BigInt total = 0;
        for (const auto& a : enumerate_nondecreasing_pf(t.k))
            total += orbit_size(a);
        add("orbit-sum", total);
        if (t.k <= 7) {
            long long direct = 0;
            for_each_parking_function(t.k, [&](const std::vector<int>&) { ++direct; });
            add("enumeration", direct);
        }
    }
    if (routes.empty())
        throw UsageError("no formula for this residue and the set is too large to enumerate");
    return routes;
}

// ---- verify ---------------------------------------------------------------

int cmd_verify(Suite suite, const VerifyBounds& bounds, bool as_json, std::ostream& out, std::ostream& err)
{
    const auto workers = threads_from_env();
    if (!workers)
        throw UsageError("PARKHEDRON_THREADS must be a nonnegative integer");
    const VerifyReport report = run_verify(suite, bounds, *workers);
    if (as_json) {
        out << report.to_json().dump(2) << '\n';
    } else {
        std::size_t passed = 0, skipped = 0;
        for (const auto& c : report.checks) {
            const char* tag = !c.pass ? "FAIL" : c.skipped ? "SKIP" : "PASS";
            out << tag << "  " << c.name << "  [" << c.params << "]";
            if (c.pass)
                out << "  " << c.actual << '\n';
            else
                out << "  expected: " << c.expected << "  actual: " << c.actual << '\n';
            passed += c.pass;
            skipped += c.skipped;
        }
        out << "verify " << report.suite << ": " << report.checks.size() << " checks, " << passed << " passed ("
            << skipped << " skipped)\n";
    }
    if (const CheckResult* bad = report.first_failure()) {
        err << "first counterexample: " << bad->name << " [" << bad->params << "]: expected " << bad->expected
            << ", got " << bad->actual << '\n';
        return kVerifyFailed;
    }
    return kOk;
}

}  // namespace

std::optional<unsigned> threads_from_env()
{
    const char* raw = std::getenv("PARKHEDRON_THREADS");
    if (raw == nullptr || *raw == '\0')
        return 0u;
    const std::string_view text(raw);
    unsigned value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size())
        return std::nullopt;
    return value;
}

json to_json(const BigInt& v)
{
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return static_cast<long long>(v);
    return v.str();
}

BigInt big_from_json(const json& j)
{
    if (j.is_string())
        return BigInt(j.get<std::string>());
    if (j.is_number_unsigned())
        return BigInt(j.get<unsigned long long>());
    if (j.is_number_integer())
        return BigInt(j.get<long long>());
    throw std::invalid_argument("expected an integer");
}

json to_json(const SymFunc& f)
{
    json terms = json::array();
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it)
        terms.push_back({{"partition", parts_json(it->first.parts())},
                         {"num", to_json(BigInt(numerator(it->second)))},
                         {"den", to_json(BigInt(denominator(it->second)))}});
    return {{"basis", std::string(1, basis_letter(f.basis()))}, {"degree", f.degree()}, {"terms", terms}};
}

SymFunc symfunc_from_json(const json& j)
{
    const std::string b = j.at("basis").get<std::string>();
    if (b != "h" && b != "p")
        throw std::invalid_argument("basis must be \"h\" or \"p\"");
    SymFunc f(b == "h" ? Basis::h : Basis::p, j.at("degree").get<int>());
    for (const auto& t : j.at("terms")) {
        const BigInt den = big_from_json(t.at("den"));
        if (den == 0)
            throw std::invalid_argument("zero denominator");
        f.add_term(Partition(t.at("partition").get<std::vector<int>>()),
                   Rational(big_from_json(t.at("num")), den));
    }
    return f;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact computations on parking spaces, Lyndon words and permutahedra", "parkhedron"};
    app.require_subcommand(1);

    bool as_json = false;
    Target t;
    std::string basis = "h";
    bool restricted = false;
    std::vector<int> mu_parts;
    std::vector<int> lambda_parts;
    long long residue = 0;
    std::string what;
    std::string suite_text;
    std::string expression;
    VerifyBounds bounds;
    const std::vector<std::string> targets{"tau-hat", "gamma", "pf"};

    auto* lyndon = app.add_subcommand("lyndon", "List the Lyndon representatives of the shift classes");
    auto* ly_m = lyndon->add_option("-m", t.m, "Balance parameter m >= 1");
    auto* ly_n = lyndon->add_option("-n", t.n, "Number of letters n >= 2");
    lyndon->add_flag("--json", as_json, "JSON output");

    auto* frob = app.add_subcommand("frobenius", "Frobenius characteristic of a module");
    frob->add_option("target", t.name, "tau-hat, gamma or pf")->required()->check(CLI::IsMember(targets));
    frob->add_option("-m", t.m, "m for tau-hat");
    frob->add_option("-n", t.n, "n for tau-hat and gamma");
    frob->add_option("-k", t.k, "Length for pf");
    frob->add_flag("--restrict", restricted, "Restrict from S_N to S_{N-1}");
    frob->add_option("--basis", basis, "Output basis")->check(CLI::IsMember({"h", "p"}));
    frob->add_flag("--json", as_json, "JSON output");

    auto* chr = app.add_subcommand("character", "Character value at a cycle type, by every available route");
    chr->add_option("target", t.name, "tau-hat, gamma or pf")->required()->check(CLI::IsMember(targets));
    chr->add_option("-m", t.m, "m for tau-hat");
    chr->add_option("-n", t.n, "n for tau-hat and gamma");
    chr->add_option("-k", t.k, "Length for pf");
    chr->add_option("--mu", mu_parts, "Cycle type, comma separated")->required()->delimiter(',');
    chr->add_flag("--json", as_json, "JSON output");

    auto* count = app.add_subcommand("count", "Counting formula against enumeration");
    count->add_option("what", what, "C, Y, lyndon, lattice or pf")
        ->required()
        ->check(CLI::IsMember({"C", "Y", "lyndon", "lattice", "pf"}));
    count->add_option("-m", t.m, "m");
    count->add_option("-n", t.n, "n");
    count->add_option("-k", t.k, "Parking function length");
    auto* residue_opt = count->add_option("--residue", residue, "Coordinate-sum residue (default c_{m,n})");
    count->add_option("--lambda", lambda_parts, "Permutahedron vertex for lattice counts")->delimiter(',');
    count->add_flag("--json", as_json, "JSON output");

    auto* verify = app.add_subcommand("verify", "Run a self-verification suite");
    verify->add_option("suite", suite_text, "words, orbits, permutahedron, restriction or all")
        ->required()
        ->check(CLI::IsMember({"words", "orbits", "permutahedron", "restriction", "all"}));
    verify->add_option("--max-n", bounds.max_n, "Largest n (default 7)");
    verify->add_option("--max-m", bounds.max_m, "Largest m (default 2)");
    verify->add_flag("--json", as_json, "JSON output");

    auto* sym = app.add_subcommand("symfunc", "Parse, convert and restrict a symmetric function");
    sym->add_option("expression", expression, "e.g. \"h[3] + 3 h[2,1]\"")->required();
    sym->add_flag("--restrict", restricted, "Restrict once");
    sym->add_option("--basis", basis, "Output basis")->check(CLI::IsMember({"h", "p"}));
    sym->add_option("--mu", mu_parts, "Evaluate the character at this cycle type instead")->delimiter(',');
    sym->add_flag("--json", as_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\nrun with --help for usage\n";
        return kUsage;
    }

    auto need_target_params = [&](CLI::App* cmd) {
        if (t.name == "tau-hat") {
            require(cmd->get_option("-m"), t.name);
            require(cmd->get_option("-n"), t.name);
        } else if (t.name == "gamma") {
            require(cmd->get_option("-n"), t.name);
        } else {
            require(cmd->get_option("-k"), t.name);
            if (t.k < 1)
                throw UsageError("-k must be at least 1");
        }
    };

    try {
        if (*lyndon) {
            require(ly_m, "lyndon");
            require(ly_n, "lyndon");
            return cmd_lyndon(t.m, t.n, as_json, out);
        }
        if (*frob) {
            need_target_params(frob);
            SymFunc f = target_frobenius(t);
            if (restricted)
                f = restrict(f);
            return emit_symfunc(in_basis(f, basis), as_json, out);
        }
        if (*chr) {
            need_target_params(chr);
            const CycleType mu(Partition::from_multiset(mu_parts));
            json header = target_params(t);
            header["target"] = t.name;
            header["mu"] = parts_json(mu.cycles().parts());
            return report_routes(character_routes(t, mu), header, as_json, out, err);
        }
        if (*count) {
            if (what == "pf")
                require(count->get_option("-k"), "count pf");
            else if (what == "lattice") {
                if (lambda_parts.empty())
                    require(count->get_option("-n"), "count lattice");
            } else {
                require(count->get_option("-m"), "count " + what);
                require(count->get_option("-n"), "count " + what);
            }
            std::optional<long long> res;
            if (residue_opt->count() > 0)
                res = residue;
            json header = what == "pf" ? json{{"k", t.k}} : json{{"m", t.m}, {"n", t.n}};
            if (what == "lattice")
                header = lambda_parts.empty() ? json{{"n", t.n}} : json{{"lambda", lambda_parts}};
            header["what"] = what;
            if (res)
                header["residue"] = *res;
            return report_routes(count_routes(what, t, res, lambda_parts), header, as_json, out, err);
        }
        if (*verify) {
            if (bounds.max_n < 2 || bounds.max_m < 2)
                throw UsageError("--max-n and --max-m must be at least 2");
            return cmd_verify(*parse_suite(suite_text), bounds, as_json, out, err);
        }
        if (*sym) {
            SymFunc f = parse_symfunc(expression);
            if (restricted)
                f = restrict(f);
            if (!mu_parts.empty()) {
                const CycleType mu(Partition::from_multiset(mu_parts));
                if (mu.n() != f.degree())
                    throw UsageError("--mu has size " + std::to_string(mu.n()) + " but the function has degree " +
                                     std::to_string(f.degree()));
                const Rational v = character(f, mu);
                if (as_json)
                    out << json{{"mu", parts_json(mu.cycles().parts())}, {"value", str(v)}}.dump(2) << '\n';
                else
                    out << v << '\n';
                return kOk;
            }
            return emit_symfunc(in_basis(f, basis), as_json, out);
        }
    } catch (const SymFuncParseError& e) {
        err << "error: " << e.what() << "\n  " << expression << "\n  " << std::string(e.position(), ' ') << "^\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kVerifyFailed;
    }
    return kUsage;
}

}  // namespace parkhedron::cli
