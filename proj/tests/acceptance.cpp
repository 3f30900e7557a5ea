// End-to-end acceptance run. Each criterion prints one PASS/FAIL line with
// its wall time against its budget; the exit status is nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "parkhedron/parking_functions.hpp"
#include "parkhedron/parking_space.hpp"
#include "parkhedron/permutahedron.hpp"
#include "parkhedron/symfunc.hpp"
#include "parkhedron/word.hpp"

using namespace parkhedron;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why)
    {
        if (ok)
            detail = why;
        ok = false;
    }
    void expect(bool cond, const std::string& why)
    {
        if (!cond)
            fail(why);
    }
};

template <class T>
std::string str(const T& v)
{
    std::ostringstream os;
    os << v;
    return os.str();
}

std::set<std::string> word_strings(const std::vector<BinaryWord>& ws)
{
    std::set<std::string> out;
    for (const auto& w : ws)
        out.insert(w.to_string());
    return out;
}

PaddedPartition pp(const std::string& digits)
{
    std::vector<int> v;
    for (char c : digits)
        v.push_back(c - '0');
    return PaddedPartition(v);
}

// Columns of a shift table: column i lists sort(shift^j(top_i)) for j = 0..n-1.
std::vector<std::vector<PaddedPartition>> shift_columns(const CmnSpec& spec)
{
    std::vector<std::vector<PaddedPartition>> cols;
    for (const auto& w : enumerate_B_lyndon(spec)) {
        LatticePoint x(word_to_partition(w, spec).parts());
        std::vector<PaddedPartition> col;
        for (int j = 0; j < spec.n(); ++j) {
            col.push_back(sort_desc(x));
            x = shift(x, spec.n());
        }
        cols.push_back(col);
    }
    return cols;
}

bool same_columns(std::vector<std::vector<PaddedPartition>> got, std::vector<std::vector<PaddedPartition>> want)
{
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    return got == want;
}

std::size_t naive_least_rotation(const BinaryWord& w)
{
    std::size_t best = 0;
    for (std::size_t j = 1; j < w.length(); ++j)
        if (rotate(w, static_cast<long long>(j)) < rotate(w, static_cast<long long>(best)))
            best = j;
    return best;
}

bool naive_lyndon(const BinaryWord& w)
{
    for (std::size_t j = 1; j < w.length(); ++j)
        if (!(w < rotate(w, static_cast<long long>(j))))
            return false;
    return true;
}

// Lattice points of P_lambda by scanning the box and testing the subset-sum
// inequalities via the sorted prefix sums.
long long box_lattice_count(const PaddedPartition& lambda)
{
    const int n = static_cast<int>(lambda.length());
    const int total = lambda.size();
    std::vector<int> bound(n + 1, 0);
    for (int k = 0; k < n; ++k)
        bound[k + 1] = bound[k] + lambda[k];
    std::vector<int> x(n, 0);
    long long count = 0;
    std::function<void(int, int)> rec = [&](int i, int sum) {
        if (i == n) {
            if (sum != total)
                return;
            std::vector<int> s = x;
            std::sort(s.rbegin(), s.rend());
            int acc = 0;
            for (int k = 0; k < n; ++k) {
                acc += s[k];
                if (acc > bound[k + 1])
                    return;
            }
            ++count;
            return;
        }
        for (int v = 0; v <= lambda[0] && sum + v <= total; ++v) {
            x[i] = v;
            rec(i + 1, sum + v);
        }
    };
    rec(0, 0);
    return count;
}

bool is_dominated_by_delta(const PaddedPartition& p, int n)
{
    const PaddedPartition d = delta(n);
    return p.size() == d.size() && dominates(d, p);
}

// ---- criteria -------------------------------------------------------------

Outcome c1()
{
    Outcome o;
    const CmnSpec spec(1, 4);
    o.expect(word_strings(enumerate_B_lyndon(spec)) == std::set<std::string>{"00101011", "00011101"},
             "B^L_{1,4} differs");
    const std::vector<std::vector<PaddedPartition>> table{{pp("2100"), pp("3211"), pp("3220"), pp("3310")},
                                                          {pp("1110"), pp("2221"), pp("3332"), pp("3000")}};
    std::set<PaddedPartition> y_table;
    for (const auto& col : table)
        y_table.insert(col.begin(), col.end());
    const auto y = enumerate_Y(spec);
    o.expect(y.size() == 8 && std::set<PaddedPartition>(y.begin(), y.end()) == y_table, "Y_{1,4} differs");
    o.expect(same_columns(shift_columns(spec), table), "shift columns differ");
    return o;
}

Outcome c2()
{
    Outcome o;
    const CmnSpec spec(2, 3);
    o.expect(word_strings(enumerate_B_lyndon(spec)) ==
                 std::set<std::string>{"001011111", "001111011", "010110111"},
             "B^L_{2,3} differs");
    const SymFunc want = parse_symfunc("h[5,1] + h[4,2] + h[3,2,1]");
    const SymFunc got = frobenius_tau_hat(spec);
    o.expect(got == want, "Frob = " + format(got));
    return o;
}

Outcome c3()
{
    Outcome o;
    const SymFunc gamma = frobenius_gamma(4);
    o.expect(gamma == parse_symfunc("h[2,1,1] + h[3,1]"), "Frob(gamma_4) = " + format(gamma));
    const SymFunc r = restrict(gamma);
    o.expect(r == parse_symfunc("h[3] + 3 h[2,1] + h[1,1,1]"), "restriction = " + format(r));
    o.expect(r == frobenius_pf(3), "Frob(PF_3) = " + format(frobenius_pf(3)));
    return o;
}

Outcome c4()
{
    Outcome o;
    for (int n = 2; n <= 9 && o.ok; ++n) {
        const SymFunc lhs = to_p_basis(restrict(frobenius_gamma(n)));
        const SymFunc rhs = to_p_basis(frobenius_pf(n - 1));
        o.expect(lhs.terms() == rhs.terms(), "n=" + std::to_string(n) + ": " + format(lhs) + " vs " + format(rhs));
    }
    return o;
}

Outcome c5()
{
    Outcome o;
    std::vector<std::pair<int, int>> params;
    for (int n = 2; n <= 8; ++n)
        params.emplace_back(1, n);
    for (int n = 2; n <= 4; ++n)
        params.emplace_back(2, n);
    for (const auto& [m, n] : params) {
        const CmnSpec spec(m, n);
        const std::string at = "(m,n)=(" + std::to_string(m) + "," + std::to_string(n) + ")";
        const BigInt expect = ipow(BigInt(n), spec.N() - 1);
        long long direct = 0;
        for_each_C(spec, [&](const LatticePoint&) { ++direct; });
        o.expect(direct == expect, at + ": |C| = " + std::to_string(direct));
        BigInt orbit_sum = 0;
        long long y = 0;
        for_each_Y(spec, [&](const PaddedPartition& p) {
            orbit_sum += orbit_size(p);
            ++y;
        });
        o.expect(orbit_sum == expect, at + ": orbit sum = " + str(orbit_sum));
        o.expect(count_Y_formula(spec) == y, at + ": |Y| = " + std::to_string(y));
        const auto lyndon = enumerate_B_lyndon(spec);
        o.expect(static_cast<long long>(lyndon.size()) * n == y, at + ": |B^L| = " + std::to_string(lyndon.size()));
    }
    return o;
}

Outcome c6()
{
    Outcome o;
    long long words = 0;
    for (int m = 1; 2 * (m + 1) <= 16; ++m) {
        for (int n = 2; (m + 1) * n <= 16; ++n) {
            const CmnSpec spec(m, n);
            long long filtered = 0;
            // every m-balanced word starting with 0, filtered by membership
            for_each_word_with_content(n - 1, m * n, [&](const BinaryWord& tail) {
                std::vector<std::uint8_t> letters{0};
                letters.insert(letters.end(), tail.letters().begin(), tail.letters().end());
                const BinaryWord w(letters);
                if (!in_B(w, spec))
                    return;
                ++filtered;
                if (!is_primitive(w))
                    o.fail("non-primitive " + w.to_string());
            });
            long long listed = 0;
            for_each_B(spec, [&](const BinaryWord&) { ++listed; });
            o.expect(listed == filtered, "B enumeration size differs at m=" + std::to_string(m) +
                                             " n=" + std::to_string(n));
            words += filtered;
        }
    }
    if (o.ok)
        o.detail = std::to_string(words) + " words";
    return o;
}

Outcome c7()
{
    Outcome o;
    for (int n = 2; n <= 8; ++n) {
        const BigInt expect = ipow(BigInt(n), n - 2);
        const BigInt counted = lattice_point_count(PermutahedronSpec(delta(n)));
        const long long boxed = box_lattice_count(delta(n));
        o.expect(counted == expect && boxed == expect,
                 "n=" + std::to_string(n) + ": " + str(counted) + " / " + std::to_string(boxed));
    }
    return o;
}

Outcome c8()
{
    Outcome o;
    for (int n = 2; n <= 9; ++n) {
        std::multiset<Partition> lattice, words;
        for (const auto& lam : orbit_reps(PermutahedronSpec(delta(n))))
            lattice.insert(multiplicity_partition(lam));
        for (const auto& w : enumerate_B_lyndon(CmnSpec(1, n)))
            words.insert(runs_of_ones(w));
        o.expect(lattice == words, "n=" + std::to_string(n));
    }
    return o;
}

Outcome c9()
{
    Outcome o;
    for (int n = 2; n <= 8; ++n) {
        const CmnSpec spec(1, n);
        // group Y by shift class, keyed by the class's least element
        std::map<PaddedPartition, int> dominated_per_class;
        for_each_Y(spec, [&](const PaddedPartition& lam) {
            const auto orbit = shift_orbit_sorted(lam, spec);
            int& hits = dominated_per_class[*orbit.begin()];
            hits += is_dominated_by_delta(lam, n);
        });
        for (const auto& [key, hits] : dominated_per_class)
            if (hits != 1)
                o.fail("n=" + std::to_string(n) + ": class of " + str(key) + " has " + std::to_string(hits));
    }
    LatticePoint x{7, 5, 5, 5, 4, 4, 2, 2, 2, 0};
    for (int j = 0; j < 6; ++j)
        x = shift(x, 10);
    const PaddedPartition s = sort_desc(x);
    o.expect(s == PaddedPartition{8, 8, 8, 6, 3, 1, 1, 1, 0, 0}, "sort(shift^6) = " + str(s));
    o.expect(!is_dominated_by_delta(s, 10), "shifted example is dominated");
    o.expect(is_dominated_by_delta(PaddedPartition{7, 5, 5, 5, 4, 4, 2, 2, 2, 0}, 10), "example is not dominated");
    return o;
}

Outcome c10()
{
    Outcome o;
    for (int n = 2; n <= 8; ++n) {
        const SymFunc gamma = frobenius_gamma(n);
        for (const auto& parts : partitions_of(n)) {
            const CycleType mu(parts);
            const BigInt counted = fixed_point_count(n, mu);
            const BigInt formula = fixed_point_formula(n, mu);
            const Rational chi = character(gamma, mu);
            o.expect(counted == formula && chi == counted,
                     "n=" + std::to_string(n) + " mu=" + str(parts) + ": " + str(counted) + ", " + str(formula) +
                         ", " + str(chi));
        }
    }
    // the d = 2 branch with n = 2 mod 4
    o.expect(fixed_point_count(6, CycleType{2, 2, 2}) == 12, "mu=(2,2,2) at n=6");
    return o;
}

Outcome c11()
{
    Outcome o;
    for (int n = 3; n <= 5; ++n) {
        const BigInt vol = normalized_volume(PermutahedronSpec(staircase(n)));
        const BigInt lat = lattice_point_count(PermutahedronSpec(delta(n)));
        o.expect(vol == ipow(BigInt(n), n - 2) && lat == vol,
                 "n=" + std::to_string(n) + ": volume " + str(vol) + ", lattice " + str(lat));
    }
    const auto counts = ehrhart_counts(PermutahedronSpec(staircase(3)), 2);
    o.expect(counts == std::vector<BigInt>{1, 7, 19}, "dilate counts of Pi_3 differ");
    return o;
}

Outcome c12()
{
    Outcome o;
    const CmnSpec spec(2, 3);
    const std::vector<std::vector<PaddedPartition>> table{
        {pp("100000"), pp("211111"), pp("222220")},
        {pp("111100"), pp("222211"), pp("220000")},
        {pp("211000"), pp("221110"), pp("222100")}};
    const auto cols = shift_columns(spec);
    o.expect(same_columns(cols, table), "shift table differs");
    int transversals = 0, uniform = 0;
    for (const auto& a : cols[0])
        for (const auto& b : cols[1])
            for (const auto& c : cols[2]) {
                ++transversals;
                uniform += a.size() == b.size() && b.size() == c.size();
            }
    o.expect(transversals == 27, "expected 27 transversals");
    o.expect(uniform == 0, std::to_string(uniform) + " size-uniform transversals");
    return o;
}

Outcome c13()
{
    Outcome o;
    long long checked = 0;
    for (int len = 1; len <= 16; ++len) {
        for (int z = 0; z <= std::min(6, len); ++z) {
            std::vector<BinaryWord> brute;
            for_each_word_with_content(z, len - z, [&](const BinaryWord& w) {
                ++checked;
                if (least_rotation(w) != naive_least_rotation(w))
                    o.fail("least rotation of " + w.to_string());
                if (naive_lyndon(w))
                    brute.push_back(w);
            });
            o.expect(enumerate_lyndon_fixed_content(z, len - z) == brute,
                     "Lyndon words with " + std::to_string(z) + " zeros, length " + std::to_string(len));
        }
    }
    if (o.ok)
        o.detail = std::to_string(checked) + " words";
    return o;
}

struct Criterion {
    int id;
    const char* title;
    double budget_s;
    Outcome (*run)();
};

}  // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "Lyndon representatives and shift table for (1,4)", 1, c1},
        {2, "Lyndon representatives and Frobenius for (2,3)", 1, c2},
        {3, "Frobenius of gamma_4 and its restriction", 1, c3},
        {4, "restriction equals parking functions, n = 2..9", 30, c4},
        {5, "orbit and class counts", 60, c5},
        {6, "primitivity for (m+1)n <= 16", 30, c6},
        {7, "lattice point counts, n = 2..8", 30, c7},
        {8, "orbit types match run types, n = 2..9", 30, c8},
        {9, "one dominated member per shift class", 10, c9},
        {10, "fixed point formula, n = 2..8", 60, c10},
        {11, "normalized volume of the standard permutahedron", 60, c11},
        {12, "no size-uniform transversal for (2,3)", 1, c12},
        {13, "least rotation and Lyndon generation cross-checks", 60, c13},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.ok && secs > c.budget_s)
            o.fail("over time budget");
        failures += !o.ok;
        std::cout << (o.ok ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.title << "  (" << std::fixed
                  << std::setprecision(3) << secs << " s / " << std::setprecision(0) << c.budget_s << " s)";
        if (!o.detail.empty())
            std::cout << "  " << o.detail;
        std::cout << std::endl;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
    return failures == 0 ? 0 : 1;
}
