#include "verify.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "parkhedron/parking_functions.hpp"
#include "parkhedron/parking_space.hpp"
#include "parkhedron/permutahedron.hpp"
#include "parkhedron/symfunc.hpp"
#include "parkhedron/word.hpp"

namespace parkhedron::cli {

namespace {

// Enumerations larger than this are replaced by bookkeeping or skipped.
constexpr long long kDirectLimit = 20'000'000;

template <class T>
std::string str(const T& v)
{
    std::ostringstream os;
    os << v;
    return os.str();
}

std::string mn_params(int m, int n)
{
    return "m=" + std::to_string(m) + " n=" + std::to_string(n);
}

CheckResult make(std::string name, std::string params, std::string expected, std::string actual)
{
    CheckResult r{std::move(name), std::move(params), std::move(expected), std::move(actual)};
    r.pass = r.expected == r.actual;
    return r;
}

CheckResult skipped(std::string name, std::string params, std::string why)
{
    CheckResult r{std::move(name), std::move(params), "-", "skipped: " + why};
    r.pass = true;
    r.skipped = true;
    return r;
}

std::size_t naive_least_rotation(const BinaryWord& w)
{
    std::size_t best = 0;
    BinaryWord best_word = w;
    for (std::size_t j = 1; j < w.length(); ++j) {
        BinaryWord r = rotate(w, static_cast<long long>(j));
        if (r < best_word) {
            best_word = r;
            best = j;
        }
    }
    return best;
}

bool naive_is_lyndon(const BinaryWord& w)
{
    for (std::size_t j = 1; j < w.length(); ++j)
        if (!(w < rotate(w, static_cast<long long>(j))))
            return false;
    return true;
}

bool fits(const BigInt& v)
{
    return v <= kDirectLimit;
}

// ---- words ----------------------------------------------------------------

void add_word_checks(std::vector<Check>& checks, const VerifyBounds& b)
{
    const int max_len = std::min(16, 2 * b.max_n);
    const std::string core = "length<=" + std::to_string(max_len) + " zeros<=6";
    checks.push_back([=] {
        std::string bad;
        for (int len = 1; len <= max_len && bad.empty(); ++len)
            for (int z = 0; z <= std::min(6, len) && bad.empty(); ++z)
                for_each_word_with_content(z, len - z, [&](const BinaryWord& w) {
                    if (bad.empty() && least_rotation(w) != naive_least_rotation(w))
                        bad = w.to_string();
                });
        return make("words.least-rotation", core, "agrees with naive scan",
                    bad.empty() ? "agrees with naive scan" : "differs on " + bad);
    });
    checks.push_back([=] {
        std::string bad;
        for (int len = 1; len <= max_len && bad.empty(); ++len)
            for (int z = 0; z <= std::min(6, len) && bad.empty(); ++z) {
                std::vector<BinaryWord> brute;
                for_each_word_with_content(z, len - z, [&](const BinaryWord& w) {
                    if (naive_is_lyndon(w))
                        brute.push_back(w);
                });
                if (enumerate_lyndon_fixed_content(z, len - z) != brute)
                    bad = "zeros=" + std::to_string(z) + " ones=" + std::to_string(len - z);
            }
        return make("words.lyndon-generation", core, "equals brute-force filter",
                    bad.empty() ? "equals brute-force filter" : "differs at " + bad);
    });

    for (int m = 1; m <= b.max_m; ++m) {
        for (int n = 2; n <= b.max_n; ++n) {
            const CmnSpec spec(m, n);
            const std::string params = mn_params(m, n);
            const bool b_small = fits(binomial(spec.word_length() - 1, n - 1));
            const bool y_small = fits(binomial(spec.N() + n - 1, n - 1));

            if (b_small) {
                checks.push_back([=] {
                    long long bad = 0;
                    std::string example;
                    for_each_B(spec, [&](const BinaryWord& w) {
                        if (!is_primitive(w)) {
                            if (bad++ == 0)
                                example = " (first: " + w.to_string() + ")";
                        }
                    });
                    return make("words.primitive", params, "0 non-primitive words",
                                std::to_string(bad) + " non-primitive words" + example);
                });
            } else {
                checks.push_back([=] { return skipped("words.primitive", params, "B too large"); });
            }

            if (b_small && y_small) {
                checks.push_back([=] {
                    std::set<BinaryWord> image;
                    std::string bad;
                    for_each_Y(spec, [&](const PaddedPartition& lam) {
                        BinaryWord w = partition_to_word(lam, spec);
                        if (bad.empty() && (!in_B(w, spec) || word_to_partition(w, spec) != lam))
                            bad = "roundtrip fails at " + str(lam);
                        image.insert(w);
                    });
                    if (bad.empty()) {
                        std::set<BinaryWord> all;
                        for_each_B(spec, [&](const BinaryWord& w) { all.insert(w); });
                        if (all != image)
                            bad = "image of Y differs from B";
                    }
                    return make("words.bijection", params, "Y <-> B bijective", bad.empty() ? "Y <-> B bijective" : bad);
                });
            } else {
                checks.push_back([=] { return skipped("words.bijection", params, "enumeration too large"); });
            }

            if (y_small) {
                checks.push_back([=] {
                    std::string bad;
                    for_each_Y(spec, [&](const PaddedPartition& lam) {
                        if (bad.empty() && shift_orbit_sorted(lam, spec).size() != static_cast<std::size_t>(n))
                            bad = "orbit of " + str(lam) + " has " +
                                  std::to_string(shift_orbit_sorted(lam, spec).size()) + " elements";
                    });
                    return make("words.shift-orbit", params, "all sorted shift orbits have n elements",
                                bad.empty() ? "all sorted shift orbits have n elements" : bad);
                });
                checks.push_back([=] {
                    long long count = 0;
                    for_each_Y(spec, [&](const PaddedPartition&) { ++count; });
                    return make("words.count-Y", params, str(count_Y_formula(spec)), std::to_string(count));
                });
                checks.push_back([=] {
                    const auto lyndon = enumerate_B_lyndon(spec);
                    long long y = 0;
                    for_each_Y(spec, [&](const PaddedPartition&) { ++y; });
                    std::string actual = std::to_string(lyndon.size());
                    if (y % n != 0 || static_cast<long long>(lyndon.size()) != y / n)
                        actual += " (|Y|/n = " + std::to_string(y) + "/" + std::to_string(n) + ")";
                    return make("words.count-lyndon", params, str(count_lyndon_formula(spec)), actual);
                });
                checks.push_back([=] {
                    std::multiset<PaddedPartition> covered;
                    for (const auto& w : enumerate_B_lyndon(spec))
                        for (const auto& p : shift_orbit_sorted(word_to_partition(w, spec), spec))
                            covered.insert(p);
                    std::multiset<PaddedPartition> y;
                    for_each_Y(spec, [&](const PaddedPartition& p) { y.insert(p); });
                    return make("words.tiling", params, "Lyndon shift orbits tile Y",
                                covered == y ? "Lyndon shift orbits tile Y" : "tiling fails");
                });
            } else {
                for (const char* name : {"words.shift-orbit", "words.count-Y", "words.count-lyndon", "words.tiling"})
                    checks.push_back([=] { return skipped(name, params, "Y too large"); });
            }
        }
    }
}

// ---- orbits ---------------------------------------------------------------

void add_orbit_checks(std::vector<Check>& checks, const VerifyBounds& b)
{
    for (int m = 1; m <= b.max_m; ++m) {
        for (int n = 2; n <= b.max_n; ++n) {
            const CmnSpec spec(m, n);
            const std::string params = mn_params(m, n);
            const BigInt size_C = ipow(BigInt(n), spec.N() - 1);
            const BigInt classes = ipow(BigInt(n), spec.N() - 2);
            if (!fits(binomial(spec.N() + n - 1, n - 1)) || !fits(binomial(spec.word_length(), n))) {
                for (const char* name : {"orbits.count-C", "orbits.class-representatives", "orbits.character"})
                    checks.push_back([=] { return skipped(name, params, "Y too large"); });
                continue;
            }

            checks.push_back([=] {
                BigInt by_orbits = 0;
                for_each_Y(spec, [&](const PaddedPartition& p) { by_orbits += orbit_size(p); });
                std::string actual = str(by_orbits);
                if (fits(size_C)) {
                    long long direct = 0;
                    for_each_C(spec, [&](const LatticePoint&) { ++direct; });
                    if (direct != by_orbits)
                        actual += " (direct enumeration " + std::to_string(direct) + ")";
                }
                return make("orbits.count-C", params, str(size_C), actual);
            });

            checks.push_back([=] {
                BigInt total = 0;
                for (const auto& w : enumerate_B_lyndon(spec))
                    total += orbit_size(word_to_partition(w, spec));
                std::string actual = str(total);
                if (fits(classes)) {
                    auto label = [&](LatticePoint x) {
                        LatticePoint best = x;
                        for (int j = 1; j < n; ++j) {
                            x = shift(x, n);
                            best = std::min(best, x);
                        }
                        return best;
                    };
                    std::set<LatticePoint> seen;
                    long long count = 0;
                    for_each_class_representative(spec, [&](const LatticePoint& x) {
                        ++count;
                        seen.insert(label(x));
                    });
                    if (static_cast<long long>(seen.size()) != count)
                        actual += " (" + std::to_string(count - static_cast<long long>(seen.size())) +
                                  " repeated shift classes)";
                }
                return make("orbits.class-representatives", params, str(classes), actual);
            });

            checks.push_back([=] {
                const SymFunc frob = frobenius_tau_hat(spec);
                std::vector<PaddedPartition> lyndon_parts;
                for (const auto& w : enumerate_B_lyndon(spec))
                    lyndon_parts.push_back(word_to_partition(w, spec));
                const bool direct_ok = spec.N() < 8 && fits(classes);
                std::vector<LatticePoint> reps;
                if (direct_ok)
                    reps = class_representatives(spec);
                std::string bad;
                for (const auto& parts : partitions_of(spec.N())) {
                    CycleType mu(parts);
                    const Rational chi = character(frob, mu);
                    BigInt bookkept = 0;
                    for (const auto& lam : lyndon_parts)
                        bookkept += orbit_fixed_points(lam, mu);
                    bool ok = chi >= 0 && denominator(chi) == 1 && chi == bookkept;
                    std::string detail = "character " + str(chi) + ", bookkeeping " + str(bookkept);
                    if (direct_ok) {
                        const auto perm = mu.permutation();
                        long long direct = 0;
                        for (const auto& x : reps) {
                            bool fixed = true;
                            for (int i = 0; i < spec.N() && fixed; ++i)
                                fixed = x.coords[perm[i]] == x.coords[i];
                            direct += fixed;
                        }
                        ok = ok && chi == direct;
                        detail += ", direct " + std::to_string(direct);
                    }
                    if (!ok) {
                        bad = "mu=" + str(parts) + ": " + detail;
                        break;
                    }
                }
                const std::string good = "characters equal fixed-point counts";
                return make("orbits.character", params, good, bad.empty() ? good : bad);
            });
        }
    }
}

// ---- permutahedron --------------------------------------------------------

void add_permutahedron_checks(std::vector<Check>& checks, const VerifyBounds& b)
{
    for (int n = 2; n <= b.max_n; ++n) {
        const std::string params = "n=" + std::to_string(n);
        checks.push_back([=] {
            return make("permutahedron.lattice-count", params, str(ipow(BigInt(n), n - 2)),
                        str(lattice_point_count(PermutahedronSpec(delta(n)))));
        });
        checks.push_back([=] {
            std::multiset<Partition> from_lattice, from_words;
            for (const auto& lam : orbit_reps(PermutahedronSpec(delta(n))))
                from_lattice.insert(multiplicity_partition(lam));
            for (const auto& w : enumerate_B_lyndon(CmnSpec(1, n)))
                from_words.insert(runs_of_ones(w));
            const SymFunc gamma = frobenius_gamma(n);
            const SymFunc tau = frobenius_tau_hat(CmnSpec(1, n));
            std::string actual = format(gamma);
            if (from_lattice != from_words || !(gamma == tau))
                actual += " (orbit types differ)";
            return make("permutahedron.orbit-types", params, format(tau), actual);
        });
        checks.push_back([=] {
            const CmnSpec spec(1, n);
            const auto reps = orbit_reps(PermutahedronSpec(delta(n)));
            const std::set<PaddedPartition> dominated(reps.begin(), reps.end());
            std::string bad;
            for (const auto& w : enumerate_B_lyndon(spec)) {
                int hits = 0;
                for (const auto& p : shift_orbit_sorted(word_to_partition(w, spec), spec))
                    hits += static_cast<int>(dominated.count(p));
                if (hits != 1) {
                    bad = "class of " + w.to_string() + " has " + std::to_string(hits) + " dominated members";
                    break;
                }
            }
            const std::string good = "one dominated member per shift class";
            return make("permutahedron.unique-dominated", params, good, bad.empty() ? good : bad);
        });
        checks.push_back([=] {
            const SymFunc gamma = frobenius_gamma(n);
            std::string bad;
            for (const auto& parts : partitions_of(n)) {
                CycleType mu(parts);
                const BigInt counted = fixed_point_count(n, mu);
                const BigInt formula = fixed_point_formula(n, mu);
                const Rational chi = character(gamma, mu);
                if (counted != formula || chi != counted) {
                    bad = "mu=" + str(parts) + ": count " + str(counted) + ", formula " + str(formula) +
                          ", character " + str(chi);
                    break;
                }
            }
            const std::string good = "count = formula = character for all cycle types";
            return make("permutahedron.fixed-points", params, good, bad.empty() ? good : bad);
        });
        if (n <= 6) {
            checks.push_back([=] {
                return make("permutahedron.ehrhart", params, str(ipow(BigInt(n), n - 2)),
                            str(normalized_volume(PermutahedronSpec(staircase(n)))));
            });
        }
    }
    checks.push_back([] {
        LatticePoint x{7, 5, 5, 5, 4, 4, 2, 2, 2, 0};
        for (int j = 0; j < 6; ++j)
            x = shift(x, 10);
        const PaddedPartition s = sort_desc(x);
        std::string actual = str(s) + (dominates(delta(10), s) ? " dominated" : " not dominated");
        return make("permutahedron.shift-example", "n=10 j=6", "(8,8,8,6,3,1,1,1,0,0) not dominated", actual);
    });
}

// ---- restriction ----------------------------------------------------------

void add_restriction_checks(std::vector<Check>& checks, const VerifyBounds& b)
{
    for (int n = 2; n <= b.max_n; ++n) {
        const std::string params = "n=" + std::to_string(n);
        checks.push_back([=] {
            const SymFunc restricted = restrict(frobenius_gamma(n));
            const SymFunc pf = frobenius_pf(n - 1);
            std::string actual = format(restricted);
            if (!(restricted == pf))
                actual += " (differs in p basis)";
            return make("restriction.parking", params, format(pf), actual);
        });
        checks.push_back([=] {
            const SymFunc gamma = frobenius_gamma(n);
            const SymFunc a = to_p_basis(restrict(gamma));
            const SymFunc c = restrict_via_power_sums(gamma);
            return make("restriction.two-routes", params, format(c), format(a));
        });
        checks.push_back([=] {
            const int k = n - 1;
            BigInt total = 0;
            const auto reps = enumerate_nondecreasing_pf(k);
            for (const auto& r : reps)
                total += orbit_size(r);
            std::string actual = str(total);
            if (catalan(k) != reps.size())
                actual += " (" + std::to_string(reps.size()) + " representatives)";
            return make("restriction.pf-count", "k=" + std::to_string(k), str(ipow(BigInt(k + 1), k - 1)), actual);
        });
    }
}

}  // namespace

bool VerifyReport::pass() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const CheckResult* VerifyReport::first_failure() const
{
    for (const auto& c : checks)
        if (!c.pass)
            return &c;
    return nullptr;
}

nlohmann::json VerifyReport::to_json() const
{
    nlohmann::json items = nlohmann::json::array();
    for (const auto& c : checks)
        items.push_back({{"name", c.name},
                         {"params", c.params},
                         {"expected", c.expected},
                         {"actual", c.actual},
                         {"pass", c.pass},
                         {"skipped", c.skipped}});
    return {{"suite", suite}, {"pass", pass()}, {"checks", std::move(items)}};
}

std::optional<Suite> parse_suite(std::string_view name)
{
    if (name == "words")
        return Suite::words;
    if (name == "orbits")
        return Suite::orbits;
    if (name == "permutahedron")
        return Suite::permutahedron;
    if (name == "restriction")
        return Suite::restriction;
    if (name == "all")
        return Suite::all;
    return std::nullopt;
}

std::string_view suite_name(Suite s)
{
    switch (s) {
    case Suite::words: return "words";
    case Suite::orbits: return "orbits";
    case Suite::permutahedron: return "permutahedron";
    case Suite::restriction: return "restriction";
    case Suite::all: return "all";
    }
    return "";
}

std::vector<Check> build_checks(Suite suite, const VerifyBounds& bounds)
{
    std::vector<Check> checks;
    if (suite == Suite::words || suite == Suite::all)
        add_word_checks(checks, bounds);
    if (suite == Suite::orbits || suite == Suite::all)
        add_orbit_checks(checks, bounds);
    if (suite == Suite::permutahedron || suite == Suite::all)
        add_permutahedron_checks(checks, bounds);
    if (suite == Suite::restriction || suite == Suite::all)
        add_restriction_checks(checks, bounds);
    return checks;
}

VerifyReport run_verify(Suite suite, const VerifyBounds& bounds, unsigned workers)
{
    const auto checks = build_checks(suite, bounds);
    VerifyReport report{std::string(suite_name(suite)), std::vector<CheckResult>(checks.size())};
    if (workers == 0)
        workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(checks.size(), 1)));

    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < checks.size(); i = next++) {
            try {
                report.checks[i] = checks[i]();
            } catch (const std::exception& e) {
                report.checks[i] = CheckResult{"error", "", "no exception", e.what(), false};
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < workers; ++t)
            pool.emplace_back(work);
        work();
    }
    return report;
}

}  // namespace parkhedron::cli
