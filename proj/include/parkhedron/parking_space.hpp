#pragma once

#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "parkhedron/arith.hpp"
#include "parkhedron/partition.hpp"
#include "parkhedron/symfunc.hpp"
#include "parkhedron/word.hpp"

namespace parkhedron {

/// Raised by word-based operations that are only valid for the default residue.
class UnsupportedParameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Parameters of the module C_{m,n}: N = m*n coordinates in [0, n-1] whose sum
/// is congruent to the residue c modulo n. The default residue is
/// (N-2)(n-1)/2 mod n.
class CmnSpec {
public:
    /// Throws std::domain_error unless m >= 1 and n >= 2.
    CmnSpec(int m, int n);
    /// Arbitrary residue, reduced into [0, n).
    CmnSpec(int m, int n, long long residue);

    static long long default_residue(int m, int n);

    int m() const noexcept { return m_; }
    int n() const noexcept { return n_; }
    int N() const noexcept { return m_ * n_; }
    int residue() const noexcept { return residue_; }
    bool has_default_residue() const noexcept { return residue_ == default_residue(m_, n_); }
    /// Length (m+1)n of the associated words.
    int word_length() const noexcept { return (m_ + 1) * n_; }

    friend bool operator==(const CmnSpec&, const CmnSpec&) = default;

private:
    int m_;
    int n_;
    int residue_;
};

/// Visits all points of C_{m,n} in lexicographic order (n^{N-1} of them).
void for_each_C(const CmnSpec& spec, const std::function<void(const LatticePoint&)>& visit);
std::vector<LatticePoint> enumerate_C(const CmnSpec& spec);

/// Adds 1 modulo n to each coordinate. Throws std::domain_error for entries
/// outside [0, n-1].
LatticePoint shift(const LatticePoint& x, int n);

/// Weakly decreasing members of C_{m,n}, in decreasing lexicographic order.
void for_each_Y(const CmnSpec& spec, const std::function<void(const PaddedPartition&)>& visit);
std::vector<PaddedPartition> enumerate_Y(const CmnSpec& spec);

/// The word with 1s exactly at the 1-indexed positions n - lambda_i + i.
/// Throws std::domain_error if lambda has the wrong length or an entry > n-1.
BinaryWord partition_to_word(const PaddedPartition& lambda, const CmnSpec& spec);

/// Inverse of partition_to_word: lambda_i = n + i - p_i for the i-th 1 at
/// position p_i. Throws std::domain_error naming the violated membership
/// condition if w is not in B_{m,n}.
PaddedPartition word_to_partition(const BinaryWord& w, const CmnSpec& spec);

/// Sum of the 1-indexed positions holding a 1.
long long weight(const BinaryWord& w);

/// Membership in B_{m,n}: length (m+1)n, m-balanced, first letter 0, and
/// weight = -1 (mod n).
bool in_B(const BinaryWord& w, const CmnSpec& spec);

/// B_{m,n} in lexicographic order. Throws UnsupportedParameter for a
/// non-default residue.
void for_each_B(const CmnSpec& spec, const std::function<void(const BinaryWord&)>& visit);
std::vector<BinaryWord> enumerate_B(const CmnSpec& spec);

/// Lyndon words of B_{m,n}, lexicographic order, produced by fixed-content
/// Lyndon generation filtered by weight.
std::vector<BinaryWord> enumerate_B_lyndon(const CmnSpec& spec);

/// (1/n) sum_{d | n} (-1)^{m(n+d)} mu(n/d) binom((m+1)d - 1, md).
BigInt count_Y_formula(const CmnSpec& spec);
/// count_Y_formula / n.
BigInt count_lyndon_formula(const CmnSpec& spec);

/// {sort(shift^j(lambda)) : 0 <= j < n}.
std::set<PaddedPartition> shift_orbit_sorted(const PaddedPartition& lambda, const CmnSpec& spec);

/// sum over Lyndon w in B_{m,n} of h_{runs_of_ones(w)}.
SymFunc frobenius_tau_hat(const CmnSpec& spec);

/// The union of the S_N-orbits of lambda_w over Lyndon w in B_{m,n}: one
/// point per shift class of C_{m,n}, n^{N-2} in total. Points are produced
/// orbit by orbit, each orbit in lexicographic order.
void for_each_class_representative(const CmnSpec& spec,
                                   const std::function<void(const LatticePoint&)>& visit);
std::vector<LatticePoint> class_representatives(const CmnSpec& spec);

/// Number of points in the S_N-orbit of lambda fixed by a permutation of the
/// given cycle type, by distributing the cycles among the distinct values.
BigInt orbit_fixed_points(const PaddedPartition& lambda, const CycleType& mu);

}  // namespace parkhedron
