#include "doctest.h"

#include "parkhedron/parking_space.hpp"

#include <algorithm>
#include <map>
#include <set>

using namespace parkhedron;

namespace {

// Brute-force B_{m,n}: every binary word of length (m+1)n checked against
// the defining conditions.
std::vector<BinaryWord> brute_force_B(const CmnSpec& spec)
{
    const int len = spec.word_length();
    std::vector<BinaryWord> out;
    for (unsigned bits = 0; bits < (1u << len); ++bits) {
        std::vector<std::uint8_t> v(len);
        long long wt = 0;
        int ones = 0;
        for (int i = 0; i < len; ++i) {
            v[i] = static_cast<std::uint8_t>((bits >> (len - 1 - i)) & 1u);
            if (v[i]) {
                wt += i + 1;
                ++ones;
            }
        }
        if (v[0] == 0 && ones == spec.m() * (len - ones) && wt % spec.n() == spec.n() - 1)
            out.emplace_back(std::move(v));
    }
    return out;
}

std::vector<std::pair<int, int>> small_params()
{
    std::vector<std::pair<int, int>> out;
    for (int m = 1; m <= 7; ++m)
        for (int n = 2; (m + 1) * n <= 16; ++n)
            out.emplace_back(m, n);
    return out;
}

std::set<PaddedPartition> as_set(std::initializer_list<std::vector<int>> rows)
{
    std::set<PaddedPartition> s;
    for (const auto& r : rows)
        s.insert(PaddedPartition(r));
    return s;
}

}  // namespace

TEST_CASE("spec construction and default residue")
{
    CHECK(CmnSpec(1, 4).residue() == 3);
    CHECK(CmnSpec(1, 5).residue() == 1);
    CHECK(CmnSpec(2, 3).residue() == 1);
    CHECK(CmnSpec(1, 2).residue() == 0);
    CHECK(CmnSpec(1, 4, -1).residue() == 3);
    CHECK_FALSE(CmnSpec(1, 4, 0).has_default_residue());
    CHECK_THROWS_AS(CmnSpec(0, 4), std::domain_error);
    CHECK_THROWS_AS(CmnSpec(1, 1), std::domain_error);
    for (int m = 1; m <= 10; ++m)
        for (int n = 2; n <= 20; ++n)
            CHECK_NOTHROW(CmnSpec::default_residue(m, n));
}

TEST_CASE("enumerate_C examples")
{
    auto c12 = enumerate_C(CmnSpec(1, 2));
    CHECK(c12 == std::vector<LatticePoint>{{0, 0}, {1, 1}});
    CHECK(enumerate_C(CmnSpec(1, 4)).size() == 64);
    CHECK(enumerate_C(CmnSpec(2, 3)).size() == 243);
    auto c = enumerate_C(CmnSpec(1, 5, 2));
    CHECK(c.size() == 625);
    CHECK(std::is_sorted(c.begin(), c.end()));
    for (const auto& x : c)
        CHECK(x.sum() % 5 == 2);
}

TEST_CASE("shift")
{
    CHECK(shift({2, 1, 0, 0}, 4) == LatticePoint{3, 2, 1, 1});
    CHECK(shift({3, 3, 3, 2}, 4) == LatticePoint{0, 0, 0, 3});
    LatticePoint x{2, 1, 0, 0};
    for (int i = 0; i < 4; ++i)
        x = shift(x, 4);
    CHECK(x == LatticePoint{2, 1, 0, 0});
    CHECK_THROWS_AS(shift({4, 0}, 4), std::domain_error);
    CHECK_THROWS_AS(shift({-1, 0}, 4), std::domain_error);
}

TEST_CASE("enumerate_Y examples")
{
    auto y14 = enumerate_Y(CmnSpec(1, 4));
    CHECK(std::set<PaddedPartition>(y14.begin(), y14.end()) ==
          as_set({{2, 1, 0, 0}, {1, 1, 1, 0}, {3, 2, 1, 1}, {2, 2, 2, 1}, {3, 2, 2, 0},
                  {3, 3, 3, 2}, {3, 3, 1, 0}, {3, 0, 0, 0}}));
    CHECK(y14.size() == 8);
    auto y23 = enumerate_Y(CmnSpec(2, 3));
    CHECK(std::set<PaddedPartition>(y23.begin(), y23.end()) ==
          as_set({{1, 0, 0, 0, 0, 0}, {1, 1, 1, 1, 0, 0}, {2, 1, 1, 0, 0, 0},
                  {2, 1, 1, 1, 1, 1}, {2, 2, 2, 2, 1, 1}, {2, 2, 1, 1, 1, 0},
                  {2, 2, 2, 2, 2, 0}, {2, 2, 0, 0, 0, 0}, {2, 2, 2, 1, 0, 0}}));
    CHECK(enumerate_Y(CmnSpec(1, 2)) == std::vector<PaddedPartition>{{1, 1}, {0, 0}});
}

TEST_CASE("orbit sizes over Y sum to n^{N-1}, also for other residues")
{
    for (int n = 2; n <= 6; ++n) {
        for (int c = 0; c < n; ++c) {
            CmnSpec spec(1, n, c);
            BigInt total = 0;
            for_each_Y(spec, [&](const PaddedPartition& p) { total += orbit_size(p); });
            CHECK(total == ipow(BigInt(n), n - 1));
        }
    }
}

TEST_CASE("partition_to_word and word_to_partition examples")
{
    CHECK(partition_to_word({2, 2, 1, 1, 0}, CmnSpec(1, 5)) == BinaryWord("0001101101"));
    CHECK(partition_to_word({0, 0}, CmnSpec(1, 2)) == BinaryWord("0011"));
    CHECK(partition_to_word({2, 1, 0, 0}, CmnSpec(1, 4)) == BinaryWord("00101011"));
    CHECK_THROWS_AS(partition_to_word({4, 0, 0, 0}, CmnSpec(1, 4)), std::domain_error);
    CHECK_THROWS_AS(partition_to_word({1, 0, 0}, CmnSpec(1, 4)), std::domain_error);

    CHECK(word_to_partition(BinaryWord("0001101101"), CmnSpec(1, 5)) == PaddedPartition{2, 2, 1, 1, 0});
    CHECK(word_to_partition(BinaryWord("00011101"), CmnSpec(1, 4)) == PaddedPartition{1, 1, 1, 0});
    CHECK(word_to_partition(BinaryWord("0011"), CmnSpec(1, 2)) == PaddedPartition{0, 0});
}

TEST_CASE("word_to_partition names the violated condition")
{
    auto message = [](const char* w, const CmnSpec& spec) -> std::string {
        try {
            word_to_partition(BinaryWord(w), spec);
        } catch (const std::domain_error& e) {
            return e.what();
        }
        return {};
    };
    CHECK(message("00111011", CmnSpec(1, 4)).find("m-balanced") != std::string::npos);
    CHECK(message("1001", CmnSpec(1, 2)).find("first letter") != std::string::npos);
    CHECK(message("0101", CmnSpec(1, 2)).find("weight") != std::string::npos);
    CHECK(message("001", CmnSpec(1, 2)).find("length") != std::string::npos);
}

TEST_CASE("weight")
{
    CHECK(weight(BinaryWord("0001101101")) == 34);
    CHECK(weight(BinaryWord("0000")) == 0);
    CHECK(weight(BinaryWord("1111")) == 10);
}

TEST_CASE("B and Lyndon subsets: examples")
{
    CHECK(enumerate_B(CmnSpec(1, 2)) == std::vector<BinaryWord>{BinaryWord("0011"), BinaryWord("0110")});
    CHECK(enumerate_B_lyndon(CmnSpec(1, 4)) ==
          std::vector<BinaryWord>{BinaryWord("00011101"), BinaryWord("00101011")});
    CHECK(enumerate_B_lyndon(CmnSpec(2, 3)) ==
          std::vector<BinaryWord>{BinaryWord("001011111"), BinaryWord("001111011"),
                                  BinaryWord("010110111")});
    CHECK_THROWS_AS(enumerate_B(CmnSpec(1, 4, 0)), UnsupportedParameter);
    CHECK_THROWS_AS(enumerate_B_lyndon(CmnSpec(1, 4, 0)), UnsupportedParameter);
    CHECK_THROWS_AS(frobenius_tau_hat(CmnSpec(1, 4, 0)), UnsupportedParameter);
    CHECK_THROWS_AS(count_Y_formula(CmnSpec(1, 4, 2)), UnsupportedParameter);
}

TEST_CASE("enumerate_B equals the brute-force definition filter")
{
    for (auto [m, n] : small_params()) {
        CmnSpec spec(m, n);
        CHECK(enumerate_B(spec) == brute_force_B(spec));
    }
}

TEST_CASE("every word of B is primitive, (m+1)n <= 16")
{
    for (auto [m, n] : small_params()) {
        CmnSpec spec(m, n);
        for_each_B(spec, [&](const BinaryWord& w) { CHECK(is_primitive(w)); });
    }
}

TEST_CASE("partition/word correspondence is a bijection from Y onto B, N <= 10")
{
    for (int m = 1; m <= 5; ++m) {
        for (int n = 2; m * n <= 10; ++n) {
            CmnSpec spec(m, n);
            std::set<BinaryWord> image;
            for_each_Y(spec, [&](const PaddedPartition& lambda) {
                BinaryWord w = partition_to_word(lambda, spec);
                CHECK(in_B(w, spec));
                CHECK(word_to_partition(w, spec) == lambda);
                image.insert(w);
            });
            auto b = enumerate_B(spec);
            CHECK(image == std::set<BinaryWord>(b.begin(), b.end()));
            CHECK(image.size() == b.size());
        }
    }
}

TEST_CASE("Lyndon subset equals filtering B by is_lyndon")
{
    for (auto [m, n] : small_params()) {
        CmnSpec spec(m, n);
        std::vector<BinaryWord> filtered;
        for_each_B(spec, [&](const BinaryWord& w) {
            if (is_lyndon(w))
                filtered.push_back(w);
        });
        CHECK(enumerate_B_lyndon(spec) == filtered);
    }
}

TEST_CASE("counting formulas: examples")
{
    CHECK(count_Y_formula(CmnSpec(1, 4)) == 8);
    CHECK(count_lyndon_formula(CmnSpec(1, 4)) == 2);
    CHECK(count_Y_formula(CmnSpec(2, 3)) == 9);
    CHECK(count_lyndon_formula(CmnSpec(2, 3)) == 3);
    CHECK(count_Y_formula(CmnSpec(1, 2)) == 2);
    CHECK(count_lyndon_formula(CmnSpec(1, 2)) == 1);
}

TEST_CASE("counting formulas match enumeration")
{
    for (int m = 1; m <= 3; ++m) {
        for (int n = 2; n <= 8; ++n) {
            if (m * n > 16)
                continue;
            CmnSpec spec(m, n);
            CHECK(count_Y_formula(spec) == enumerate_Y(spec).size());
            CHECK(count_lyndon_formula(spec) == enumerate_B_lyndon(spec).size());
        }
    }
}

TEST_CASE("shift_orbit_sorted examples")
{
    CmnSpec s14(1, 4);
    CHECK(shift_orbit_sorted({2, 1, 0, 0}, s14) ==
          as_set({{2, 1, 0, 0}, {3, 2, 1, 1}, {3, 2, 2, 0}, {3, 3, 1, 0}}));
    CHECK(shift_orbit_sorted({1, 1, 1, 0}, s14) ==
          as_set({{1, 1, 1, 0}, {2, 2, 2, 1}, {3, 3, 3, 2}, {3, 0, 0, 0}}));
    auto big = shift_orbit_sorted({7, 5, 5, 5, 4, 4, 2, 2, 2, 0}, CmnSpec(1, 10));
    CHECK(big.count(PaddedPartition{8, 8, 8, 6, 3, 1, 1, 1, 0, 0}) == 1);
    LatticePoint x{7, 5, 5, 5, 4, 4, 2, 2, 2, 0};
    for (int j = 0; j < 6; ++j)
        x = shift(x, 10);
    CHECK(sort_desc(x) == PaddedPartition{8, 8, 8, 6, 3, 1, 1, 1, 0, 0});
}

TEST_CASE("every sorted shift orbit has n elements and Lyndon orbits tile Y")
{
    for (int m = 1; m <= 3; ++m) {
        for (int n = 2; m * n <= 10; ++n) {
            CmnSpec spec(m, n);
            for_each_Y(spec, [&](const PaddedPartition& lambda) {
                CHECK(shift_orbit_sorted(lambda, spec).size() == static_cast<std::size_t>(n));
            });
            std::multiset<PaddedPartition> covered;
            for (const auto& w : enumerate_B_lyndon(spec))
                for (const auto& p : shift_orbit_sorted(word_to_partition(w, spec), spec))
                    covered.insert(p);
            auto y = enumerate_Y(spec);
            CHECK(covered == std::multiset<PaddedPartition>(y.begin(), y.end()));
        }
    }
}

TEST_CASE("frobenius_tau_hat examples")
{
    CHECK(format(frobenius_tau_hat(CmnSpec(2, 3))) == "h[5,1] + h[4,2] + h[3,2,1]");
    CHECK(frobenius_tau_hat(CmnSpec(1, 4)) == parse_symfunc("h[2,1,1] + h[3,1]"));
    CHECK(frobenius_tau_hat(CmnSpec(1, 2)) == parse_symfunc("h[2]"));
}

TEST_CASE("class representatives")
{
    auto reps = class_representatives(CmnSpec(1, 4));
    CHECK(reps.size() == 16);
    std::set<PaddedPartition> sorted;
    for (const auto& x : reps)
        sorted.insert(sort_desc(x));
    CHECK(sorted == as_set({{2, 1, 0, 0}, {1, 1, 1, 0}}));
    CHECK(class_representatives(CmnSpec(1, 2)) == std::vector<LatticePoint>{{0, 0}});
    CHECK(class_representatives(CmnSpec(2, 3)).size() == 81);
}

TEST_CASE("class representatives hit every shift class exactly once")
{
    for (int m = 1; m <= 2; ++m) {
        for (int n = 2; m * n <= 8; ++n) {
            CmnSpec spec(m, n);
            // canonical label of a class: least element among its shifts
            auto label = [&](LatticePoint x) {
                LatticePoint best = x;
                for (int j = 1; j < n; ++j) {
                    x = shift(x, n);
                    best = std::min(best, x);
                }
                return best;
            };
            std::set<LatticePoint> classes;
            std::size_t count = 0;
            for_each_class_representative(spec, [&](const LatticePoint& x) {
                ++count;
                classes.insert(label(x));
            });
            CHECK(count == classes.size());
            CHECK(BigInt(count) == ipow(BigInt(n), spec.N() - 2));
            std::set<LatticePoint> all_classes;
            for_each_C(spec, [&](const LatticePoint& x) { all_classes.insert(label(x)); });
            CHECK(classes == all_classes);
        }
    }
}

TEST_CASE("tau-hat characters equal fixed class representatives")
{
    for (int m = 1; m <= 2; ++m) {
        for (int n = 2; m * n <= 8; ++n) {
            CmnSpec spec(m, n);
            const SymFunc frob = frobenius_tau_hat(spec);
            CHECK(character(frob, CycleType(Partition(std::vector<int>(spec.N(), 1)))) ==
                  ipow(BigInt(n), spec.N() - 2));
            const auto reps = class_representatives(spec);
            for (const auto& mu_parts : partitions_of(spec.N())) {
                CycleType mu(mu_parts);
                const auto perm = mu.permutation();
                long long direct = 0;
                for (const auto& x : reps) {
                    bool fixed = true;
                    for (int i = 0; i < spec.N() && fixed; ++i)
                        fixed = x.coords[perm[i]] == x.coords[i];
                    direct += fixed;
                }
                BigInt bookkept = 0;
                for (const auto& w : enumerate_B_lyndon(spec))
                    bookkept += orbit_fixed_points(word_to_partition(w, spec), mu);
                Rational chi = character(frob, mu);
                CHECK(chi >= 0);
                CHECK(chi == direct);
                CHECK(bookkept == direct);
            }
        }
    }
}
