#include "parkhedron/permutahedron.hpp"

#include <algorithm>
#include <string>

namespace parkhedron {

PermutahedronSpec::PermutahedronSpec(PaddedPartition lambda) : lambda_(std::move(lambda))
{
    if (lambda_.length() == 0)
        throw std::domain_error("permutahedron needs at least one coordinate");
}

PermutahedronSpec PermutahedronSpec::dilate(int t) const
{
    if (t < 0)
        throw std::domain_error("dilation factor must be nonnegative");
    std::vector<int> v = lambda_.parts();
    for (int& x : v)
        x *= t;
    return PermutahedronSpec(PaddedPartition(std::move(v)));
}

PaddedPartition delta(int n)
{
    if (n < 2)
        throw std::domain_error("delta_n requires n >= 2");
    std::vector<int> v(n, 0);
    for (int i = 0; i < n - 2; ++i)
        v[i] = n - 2 - i;
    return PaddedPartition(std::move(v));
}

PaddedPartition staircase(int n)
{
    if (n < 1)
        throw std::domain_error("staircase requires n >= 1");
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i)
        v[i] = n - 1 - i;
    return PaddedPartition(std::move(v));
}

PaddedPartition trimmed_vertex(int n)
{
    if (n < 2)
        throw std::domain_error("trimmed permutahedron requires n >= 2");
    std::vector<int> v = staircase(n).parts();
    v[0] = n - 2;
    return PaddedPartition(std::move(v));
}

bool is_lattice_point(const LatticePoint& x, const PermutahedronSpec& spec)
{
    if (x.length() != spec.lambda().length())
        throw std::domain_error("is_lattice_point: length mismatch");
    if (std::any_of(x.coords.begin(), x.coords.end(), [](int c) { return c < 0; }))
        return false;
    if (x.sum() != spec.lambda().size())
        return false;
    return dominates(spec.lambda(), sort_desc(x));
}

void for_each_orbit_rep(const PermutahedronSpec& spec,
                        const std::function<void(const PaddedPartition&)>& visit)
{
    const auto& lam = spec.lambda().parts();
    const int n = static_cast<int>(lam.size());
    std::vector<long long> bound(n);
    long long acc = 0;
    for (int i = 0; i < n; ++i)
        bound[i] = acc += lam[i];
    const long long total = acc;
    std::vector<int> cur(n);
    // Prefix sums may not exceed those of lambda; the tail must still be
    // able to absorb the remainder with parts <= the current one.
    auto rec = [&](auto&& self, int i, long long prefix, int max_part) -> void {
        if (i == n) {
            if (prefix == total)
                visit(PaddedPartition(cur));
            return;
        }
        const long long remaining = total - prefix;
        const int slots = n - i;
        long long hi = std::min<long long>({max_part, remaining, bound[i] - prefix});
        for (long long v = hi; v >= 0; --v) {
            if (v * slots < remaining)
                break;
            cur[i] = static_cast<int>(v);
            self(self, i + 1, prefix + v, static_cast<int>(v));
        }
    };
    rec(rec, 0, 0, lam[0]);
}

std::vector<PaddedPartition> orbit_reps(const PermutahedronSpec& spec)
{
    std::vector<PaddedPartition> out;
    for_each_orbit_rep(spec, [&](const PaddedPartition& p) { out.push_back(p); });
    return out;
}

BigInt lattice_point_count(const PermutahedronSpec& spec)
{
    BigInt total = 0;
    for_each_orbit_rep(spec, [&](const PaddedPartition& p) { total += orbit_size(p); });
    return total;
}

void for_each_lattice_point(const PermutahedronSpec& spec,
                            const std::function<void(const LatticePoint&)>& visit)
{
    for_each_orbit_rep(spec, [&](const PaddedPartition& p) {
        std::vector<int> v = p.parts();
        std::sort(v.begin(), v.end());
        do {
            visit(LatticePoint(v));
        } while (std::next_permutation(v.begin(), v.end()));
    });
}

SymFunc frobenius_gamma(int n)
{
    SymFunc f(Basis::h, n);
    for_each_orbit_rep(PermutahedronSpec(delta(n)),
                       [&](const PaddedPartition& p) { f.add_term(multiplicity_partition(p), 1); });
    return f;
}

BigInt fixed_point_count(int n, const CycleType& mu)
{
    if (mu.n() != n)
        throw std::domain_error("fixed_point_count: cycle type of size " + std::to_string(mu.n()) +
                                " for n = " + std::to_string(n));
    const PaddedPartition target = delta(n);
    const int total = target.size();
    const int max_value = std::max(n - 2, 0);
    const auto& cycles = mu.cycles().parts();
    const int ell = static_cast<int>(cycles.size());
    std::vector<long long> tail_len(ell + 1, 0);
    for (int i = ell - 1; i >= 0; --i)
        tail_len[i] = tail_len[i + 1] + cycles[i];
    std::vector<int> y(ell);
    BigInt count = 0;
    auto rec = [&](auto&& self, int i, long long sum) -> void {
        if (i == ell) {
            if (sum != total)
                return;
            std::vector<int> x;
            x.reserve(n);
            for (int c = 0; c < ell; ++c)
                x.insert(x.end(), cycles[c], y[c]);
            if (dominates(target, sort_desc(LatticePoint(std::move(x)))))
                ++count;
            return;
        }
        for (int v = 0; v <= max_value; ++v) {
            const long long s = sum + static_cast<long long>(v) * cycles[i];
            if (s > total)
                break;
            if (s + tail_len[i + 1] * max_value < total)
                continue;
            y[i] = v;
            self(self, i + 1, s);
        }
    };
    rec(rec, 0, 0);
    return count;
}

BigInt fixed_point_formula(int n, const CycleType& mu)
{
    if (mu.n() != n)
        throw std::domain_error("fixed_point_formula: cycle type of size " +
                                std::to_string(mu.n()) + " for n = " + std::to_string(n));
    const int d = mu.gcd();
    int f = 0;
    if (d == 1)
        f = 1;
    else if (d == 2 && n % 4 == 2)
        f = 2;
    const int exponent = mu.length() - 2;
    Rational value = f;
    if (exponent >= 0)
        value *= ipow(BigInt(n), exponent);
    else
        value /= ipow(BigInt(n), -exponent);
    if (denominator(value) != 1)
        throw std::logic_error("fixed_point_formula: non-integral value " + value.str());
    return numerator(value);
}

std::vector<BigInt> ehrhart_counts(const PermutahedronSpec& spec, int t_max)
{
    std::vector<BigInt> out;
    for (int t = 0; t <= t_max; ++t)
        out.push_back(lattice_point_count(spec.dilate(t)));
    return out;
}

std::vector<Rational> interpolate(const std::vector<BigInt>& values)
{
    const int k = static_cast<int>(values.size());
    std::vector<Rational> coeffs(k, 0);
    for (int i = 0; i < k; ++i) {
        // basis polynomial prod_{j != i} (t - j) / (i - j)
        std::vector<Rational> basis{1};
        Rational denom = 1;
        for (int j = 0; j < k; ++j) {
            if (j == i)
                continue;
            std::vector<Rational> next(basis.size() + 1, 0);
            for (std::size_t e = 0; e < basis.size(); ++e) {
                next[e + 1] += basis[e];
                next[e] -= basis[e] * j;
            }
            basis = std::move(next);
            denom *= i - j;
        }
        for (int e = 0; e < k; ++e)
            coeffs[e] += basis[e] * values[i] / denom;
    }
    return coeffs;
}

std::vector<Rational> ehrhart_polynomial(const PermutahedronSpec& spec)
{
    const auto& lam = spec.lambda();
    if (lam[0] == lam[lam.length() - 1])
        throw DegeneratePolytope("constant generating vertex gives a single point");
    const int n = spec.dimension_n();
    return interpolate(ehrhart_counts(spec, n - 1));
}

BigInt normalized_volume(const PermutahedronSpec& spec)
{
    const Rational lead = ehrhart_polynomial(spec).back();
    if (denominator(lead) != 1)
        throw std::logic_error("normalized_volume: non-integral leading coefficient " + lead.str());
    return numerator(lead);
}

LatticePoint trimmed_to_delta(const LatticePoint& x, int n)
{
    LatticePoint y = x;
    for (int& c : y.coords)
        c = n - 2 - c;
    return y;
}

}  // namespace parkhedron
