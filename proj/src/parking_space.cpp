#include "parkhedron/parking_space.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace parkhedron {

namespace {

long long mod(long long a, long long n)
{
    long long r = a % n;
    return r < 0 ? r + n : r;
}

void require_default_residue(const CmnSpec& spec, const char* op)
{
    if (!spec.has_default_residue())
        throw UnsupportedParameter(std::string(op) + ": only the default residue " +
                                   std::to_string(CmnSpec::default_residue(spec.m(), spec.n())) +
                                   " is supported, got " + std::to_string(spec.residue()));
}

}  // namespace

CmnSpec::CmnSpec(int m, int n) : CmnSpec(m, n, default_residue(m, n)) {}

CmnSpec::CmnSpec(int m, int n, long long residue) : m_(m), n_(n)
{
    if (m < 1)
        throw std::domain_error("m must be at least 1");
    if (n < 2)
        throw std::domain_error("n must be at least 2");
    residue_ = static_cast<int>(mod(residue, n));
}

long long CmnSpec::default_residue(int m, int n)
{
    const long long N = static_cast<long long>(m) * n;
    const long long twice = (N - 2) * (n - 1);
    if (twice % 2 != 0)
        throw std::logic_error("(N-2)(n-1) must be even");
    return mod(twice / 2, n);
}

void for_each_C(const CmnSpec& spec, const std::function<void(const LatticePoint&)>& visit)
{
    const int N = spec.N();
    const int n = spec.n();
    LatticePoint x(std::vector<int>(N, 0));
    // The last coordinate is determined by the first N-1 modulo n.
    auto rec = [&](auto&& self, int i, long long sum) -> void {
        if (i == N - 1) {
            x.coords[i] = static_cast<int>(mod(spec.residue() - sum, n));
            visit(x);
            return;
        }
        for (int v = 0; v < n; ++v) {
            x.coords[i] = v;
            self(self, i + 1, sum + v);
        }
    };
    rec(rec, 0, 0);
}

std::vector<LatticePoint> enumerate_C(const CmnSpec& spec)
{
    std::vector<LatticePoint> out;
    for_each_C(spec, [&](const LatticePoint& x) { out.push_back(x); });
    return out;
}

LatticePoint shift(const LatticePoint& x, int n)
{
    LatticePoint y = x;
    for (int& c : y.coords) {
        if (c < 0 || c >= n)
            throw std::domain_error("shift: coordinate " + std::to_string(c) + " outside [0, " +
                                    std::to_string(n - 1) + "]");
        c = (c + 1) % n;
    }
    return y;
}

void for_each_Y(const CmnSpec& spec, const std::function<void(const PaddedPartition&)>& visit)
{
    const int N = spec.N();
    const int n = spec.n();
    std::vector<int> cur(N);
    auto rec = [&](auto&& self, int i, int bound, long long sum) -> void {
        if (i == N) {
            if (mod(sum, n) == spec.residue())
                visit(PaddedPartition(cur));
            return;
        }
        for (int v = bound; v >= 0; --v) {
            cur[i] = v;
            self(self, i + 1, v, sum + v);
        }
    };
    rec(rec, 0, n - 1, 0);
}

std::vector<PaddedPartition> enumerate_Y(const CmnSpec& spec)
{
    std::vector<PaddedPartition> out;
    for_each_Y(spec, [&](const PaddedPartition& p) { out.push_back(p); });
    return out;
}

BinaryWord partition_to_word(const PaddedPartition& lambda, const CmnSpec& spec)
{
    const int N = spec.N();
    const int n = spec.n();
    if (static_cast<int>(lambda.length()) != N)
        throw std::domain_error("partition_to_word: expected " + std::to_string(N) + " entries");
    if (N > 0 && lambda[0] > n - 1)
        throw std::domain_error("partition_to_word: entries must be at most n-1");
    std::vector<std::uint8_t> letters(spec.word_length(), 0);
    for (int i = 1; i <= N; ++i)
        letters[n - lambda[i - 1] + i - 1] = 1;
    return BinaryWord(std::move(letters));
}

long long weight(const BinaryWord& w)
{
    long long total = 0;
    for (std::size_t i = 0; i < w.length(); ++i)
        if (w[i] == 1)
            total += static_cast<long long>(i) + 1;
    return total;
}

namespace {

// Empty string when w is in B_{m,n}, otherwise the violated condition.
std::string B_violation(const BinaryWord& w, const CmnSpec& spec)
{
    if (static_cast<int>(w.length()) != spec.word_length())
        return "length must be (m+1)n = " + std::to_string(spec.word_length());
    if (w.count_ones() != spec.m() * w.count_zeros())
        return "word is not m-balanced";
    if (w[0] != 0)
        return "first letter must be 0";
    if (mod(weight(w), spec.n()) != spec.n() - 1)
        return "weight " + std::to_string(weight(w)) + " is not -1 mod n";
    return {};
}

}  // namespace

bool in_B(const BinaryWord& w, const CmnSpec& spec)
{
    return B_violation(w, spec).empty();
}

PaddedPartition word_to_partition(const BinaryWord& w, const CmnSpec& spec)
{
    if (auto why = B_violation(w, spec); !why.empty())
        throw std::domain_error("word_to_partition: " + why);
    std::vector<int> lambda;
    lambda.reserve(spec.N());
    int i = 0;
    for (std::size_t pos = 0; pos < w.length(); ++pos) {
        if (w[pos] != 1)
            continue;
        ++i;
        lambda.push_back(spec.n() + i - static_cast<int>(pos + 1));
    }
    return PaddedPartition(std::move(lambda));
}

void for_each_B(const CmnSpec& spec, const std::function<void(const BinaryWord&)>& visit)
{
    require_default_residue(spec, "enumerate_B");
    // first letter is 0: enumerate the remaining suffix
    for_each_word_with_content(spec.n() - 1, spec.N(), [&](const BinaryWord& tail) {
        std::vector<std::uint8_t> letters;
        letters.reserve(tail.length() + 1);
        letters.push_back(0);
        letters.insert(letters.end(), tail.letters().begin(), tail.letters().end());
        BinaryWord w(std::move(letters));
        if (mod(weight(w), spec.n()) == spec.n() - 1)
            visit(w);
    });
}

std::vector<BinaryWord> enumerate_B(const CmnSpec& spec)
{
    std::vector<BinaryWord> out;
    for_each_B(spec, [&](const BinaryWord& w) { out.push_back(w); });
    return out;
}

std::vector<BinaryWord> enumerate_B_lyndon(const CmnSpec& spec)
{
    require_default_residue(spec, "enumerate_B_lyndon");
    std::vector<BinaryWord> out;
    for_each_lyndon_fixed_content(spec.n(), spec.N(), [&](const BinaryWord& w) {
        if (mod(weight(w), spec.n()) == spec.n() - 1)
            out.push_back(w);
    });
    return out;
}

BigInt count_Y_formula(const CmnSpec& spec)
{
    require_default_residue(spec, "count_Y_formula");
    const int m = spec.m();
    const int n = spec.n();
    BigInt total = 0;
    for (auto d : divisors(n)) {
        const int mu = mobius(n / d);
        if (mu == 0)
            continue;
        const bool odd = (static_cast<long long>(m) * (n + d)) % 2 != 0;
        const int sign = (odd ? -1 : 1) * mu;
        total += sign * binomial((m + 1) * static_cast<int>(d) - 1, m * static_cast<int>(d));
    }
    if (total % n != 0)
        throw std::logic_error("count_Y_formula: sum is not divisible by n");
    return total / n;
}

BigInt count_lyndon_formula(const CmnSpec& spec)
{
    BigInt y = count_Y_formula(spec);
    if (y % spec.n() != 0)
        throw std::logic_error("count_lyndon_formula: |Y| is not divisible by n");
    return y / spec.n();
}

std::set<PaddedPartition> shift_orbit_sorted(const PaddedPartition& lambda, const CmnSpec& spec)
{
    std::set<PaddedPartition> out;
    LatticePoint x(lambda.parts());
    for (int j = 0; j < spec.n(); ++j) {
        out.insert(sort_desc(x));
        x = shift(x, spec.n());
    }
    return out;
}

SymFunc frobenius_tau_hat(const CmnSpec& spec)
{
    SymFunc f(Basis::h, spec.N());
    for (const auto& w : enumerate_B_lyndon(spec))
        f.add_term(runs_of_ones(w), 1);
    return f;
}

void for_each_class_representative(const CmnSpec& spec,
                                   const std::function<void(const LatticePoint&)>& visit)
{
    for (const auto& w : enumerate_B_lyndon(spec)) {
        std::vector<int> v = word_to_partition(w, spec).parts();
        std::sort(v.begin(), v.end());
        do {
            visit(LatticePoint(v));
        } while (std::next_permutation(v.begin(), v.end()));
    }
}

std::vector<LatticePoint> class_representatives(const CmnSpec& spec)
{
    std::vector<LatticePoint> out;
    for_each_class_representative(spec, [&](const LatticePoint& x) { out.push_back(x); });
    return out;
}

BigInt orbit_fixed_points(const PaddedPartition& lambda, const CycleType& mu)
{
    if (static_cast<int>(lambda.length()) != mu.n())
        throw std::domain_error("orbit_fixed_points: length mismatch");
    // A fixed point is constant on cycles; count the ways to give each cycle
    // a value so that value v covers exactly its multiplicity in lambda.
    std::vector<int> need = multiplicity_partition(lambda).parts();
    const auto& cycles = mu.cycles().parts();
    std::map<std::pair<std::size_t, std::vector<int>>, BigInt> memo;
    auto rec = [&](auto&& self, std::size_t c) -> BigInt {
        if (c == cycles.size())
            return 1;
        auto key = std::make_pair(c, need);
        if (auto it = memo.find(key); it != memo.end())
            return it->second;
        BigInt total = 0;
        for (auto& slot : need) {
            if (slot < cycles[c])
                continue;
            slot -= cycles[c];
            total += self(self, c + 1);
            slot += cycles[c];
        }
        memo.emplace(std::move(key), total);
        return total;
    };
    return rec(rec, 0);
}

}  // namespace parkhedron
