#include "parkhedron/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace parkhedron {

namespace {

std::string join(const std::vector<int>& v, const char* sep)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::domain_error("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::domain_error("partition parts must be weakly decreasing");
    }
}

Partition Partition::from_multiset(std::vector<int> values)
{
    std::erase(values, 0);
    std::sort(values.begin(), values.end(), std::greater<>());
    return Partition(std::move(values));
}

int Partition::size() const noexcept
{
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity(int k) const noexcept
{
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

PaddedPartition Partition::pad(std::size_t length) const
{
    if (length < parts_.size())
        throw std::domain_error("cannot pad a partition to fewer entries than it has parts");
    std::vector<int> v = parts_;
    v.resize(length, 0);
    return PaddedPartition(std::move(v));
}

std::string Partition::to_string() const
{
    return "(" + join(parts_, ",") + ")";
}

PaddedPartition::PaddedPartition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw std::domain_error("padded partition entries must be nonnegative");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::domain_error("padded partition entries must be weakly decreasing");
    }
}

int PaddedPartition::size() const noexcept
{
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition PaddedPartition::strip() const
{
    std::vector<int> v = parts_;
    std::erase(v, 0);
    return Partition(std::move(v));
}

std::string PaddedPartition::to_string() const
{
    bool compact = std::all_of(parts_.begin(), parts_.end(), [](int x) { return x < 10; });
    return compact ? join(parts_, "") : join(parts_, ",");
}

int LatticePoint::sum() const noexcept
{
    return std::accumulate(coords.begin(), coords.end(), 0);
}

CycleType::CycleType(Partition cycles) : cycles_(std::move(cycles))
{
    if (cycles_.empty())
        throw std::domain_error("cycle type must be a partition of n >= 1");
}

int CycleType::gcd() const noexcept
{
    return gcd_all(cycles_.parts());
}

std::vector<int> CycleType::permutation() const
{
    std::vector<int> perm(n());
    int start = 0;
    for (int len : cycles_.parts()) {
        for (int i = 0; i < len; ++i)
            perm[start + i] = start + (i + 1) % len;
        start += len;
    }
    return perm;
}

std::ostream& operator<<(std::ostream& os, const Partition& p)
{
    return os << p.to_string();
}

std::ostream& operator<<(std::ostream& os, const PaddedPartition& p)
{
    return os << "(" << join(p.parts(), ",") << ")";
}

std::ostream& operator<<(std::ostream& os, const LatticePoint& x)
{
    return os << "(" << join(x.coords, ",") << ")";
}

PaddedPartition sort_desc(const LatticePoint& x)
{
    std::vector<int> v = x.coords;
    std::sort(v.begin(), v.end(), std::greater<>());
    return PaddedPartition(std::move(v));
}

bool dominates(const PaddedPartition& lambda, const PaddedPartition& mu)
{
    if (lambda.length() != mu.length())
        throw std::domain_error("dominance: length mismatch");
    if (lambda.size() != mu.size())
        throw std::domain_error("dominance: size mismatch");
    long long a = 0, b = 0;
    for (std::size_t i = 0; i < lambda.length(); ++i) {
        a += lambda[i];
        b += mu[i];
        if (b > a)
            return false;
    }
    return true;
}

Partition multiplicity_partition(const PaddedPartition& lambda)
{
    std::vector<int> mult;
    const auto& v = lambda.parts();
    for (std::size_t i = 0; i < v.size();) {
        std::size_t j = i;
        while (j < v.size() && v[j] == v[i])
            ++j;
        mult.push_back(static_cast<int>(j - i));
        i = j;
    }
    return Partition::from_multiset(std::move(mult));
}

BigInt orbit_size(const PaddedPartition& lambda)
{
    BigInt r = factorial(static_cast<int>(lambda.length()));
    const Partition mult = multiplicity_partition(lambda);
    for (int m : mult.parts())
        r /= factorial(m);
    return r;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int k)
{
    if (k < 0)
        throw std::domain_error("partitions_of: negative size");
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(k, k, cur, out);
    return out;
}

void for_each_bounded_partition(int length, int size, int max_part,
                                const std::function<void(const PaddedPartition&)>& visit)
{
    if (length < 0 || size < 0 || max_part < 0)
        return;
    std::vector<int> cur(length);
    // Fill position i with values <= bound, keeping the remainder feasible.
    auto rec = [&](auto&& self, int i, int remaining, int bound) -> void {
        if (i == length) {
            if (remaining == 0)
                visit(PaddedPartition(cur));
            return;
        }
        int slots = length - i;
        int hi = std::min(bound, remaining);
        for (int v = hi; v >= 0; --v) {
            if (static_cast<long long>(v) * slots < remaining)
                break;
            cur[i] = v;
            self(self, i + 1, remaining - v, v);
        }
    };
    rec(rec, 0, size, max_part);
}

}  // namespace parkhedron
