#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "parkhedron/arith.hpp"

namespace parkhedron {

class PaddedPartition;

/// Weakly decreasing list of positive integers. The empty list is the empty
/// partition. Used as the index of symmetric-function basis elements.
class Partition {
public:
    Partition() = default;
    /// Throws std::domain_error unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Sorts decreasingly and drops zeros.
    static Partition from_multiset(std::vector<int> values);

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int size() const noexcept;
    int operator[](std::size_t i) const { return parts_[i]; }

    /// Multiplicity of the part value k.
    int multiplicity(int k) const noexcept;

    PaddedPartition pad(std::size_t length) const;

    std::string to_string() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// Weakly decreasing tuple of nonnegative integers of fixed length. Trailing
/// zeros are significant: (2,1,0,0) and (2,1,0) are different values.
class PaddedPartition {
public:
    PaddedPartition() = default;
    /// Throws std::domain_error unless entries are nonnegative and weakly decreasing.
    explicit PaddedPartition(std::vector<int> parts);
    PaddedPartition(std::initializer_list<int> parts) : PaddedPartition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    int size() const noexcept;
    int operator[](std::size_t i) const { return parts_[i]; }

    Partition strip() const;

    /// Compact form without separators when every entry is a single digit
    /// (e.g. "2100"), comma separated otherwise.
    std::string to_string() const;

    friend auto operator<=>(const PaddedPartition&, const PaddedPartition&) = default;

private:
    std::vector<int> parts_;
};

struct LatticePoint {
    std::vector<int> coords;

    LatticePoint() = default;
    explicit LatticePoint(std::vector<int> c) : coords(std::move(c)) {}
    LatticePoint(std::initializer_list<int> c) : coords(c) {}

    std::size_t length() const noexcept { return coords.size(); }
    int sum() const noexcept;

    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

/// Conjugacy class of S_n, given by the cycle lengths of a permutation.
class CycleType {
public:
    /// Throws std::domain_error for the empty partition.
    explicit CycleType(Partition cycles);
    CycleType(std::initializer_list<int> cycles) : CycleType(Partition(cycles)) {}

    const Partition& cycles() const noexcept { return cycles_; }
    int n() const noexcept { return cycles_.size(); }
    int length() const noexcept { return static_cast<int>(cycles_.length()); }
    int gcd() const noexcept;

    /// A concrete permutation of {0..n-1} with this cycle type: cycles are
    /// consecutive blocks, perm[i] is the image of i.
    std::vector<int> permutation() const;

    friend auto operator<=>(const CycleType&, const CycleType&) = default;

private:
    Partition cycles_;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);
std::ostream& operator<<(std::ostream& os, const PaddedPartition& p);
std::ostream& operator<<(std::ostream& os, const LatticePoint& x);

PaddedPartition sort_desc(const LatticePoint& x);

/// True iff mu is dominated by lambda. Throws std::domain_error when the
/// lengths or sizes differ.
bool dominates(const PaddedPartition& lambda, const PaddedPartition& mu);

/// Multiplicities of the distinct values of lambda (zero counted), sorted
/// decreasingly. Sums to lambda.length().
Partition multiplicity_partition(const PaddedPartition& lambda);

/// Size of the S_N-orbit of lambda under coordinate permutation.
BigInt orbit_size(const PaddedPartition& lambda);

/// All partitions of k in decreasing lexicographic order.
std::vector<Partition> partitions_of(int k);

/// Visits every PaddedPartition of the given length and size with entries in
/// [0, max_part], in decreasing lexicographic order.
void for_each_bounded_partition(int length, int size, int max_part,
                                const std::function<void(const PaddedPartition&)>& visit);

}  // namespace parkhedron
