#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "parkhedron/arith.hpp"
#include "parkhedron/partition.hpp"
#include "parkhedron/symfunc.hpp"

namespace parkhedron {

class DegeneratePolytope : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The permutahedron P_lambda: convex hull of all coordinate permutations of
/// a sorted generating vertex lambda.
class PermutahedronSpec {
public:
    /// Throws std::domain_error for an empty lambda.
    explicit PermutahedronSpec(PaddedPartition lambda);

    const PaddedPartition& lambda() const noexcept { return lambda_; }
    int dimension_n() const noexcept { return static_cast<int>(lambda_.length()); }

    /// The dilate t * P_lambda.
    PermutahedronSpec dilate(int t) const;

private:
    PaddedPartition lambda_;
};

/// (n-2, n-3, ..., 1, 0, 0). Throws std::domain_error for n < 2.
PaddedPartition delta(int n);

/// Generating vertex (n-1, ..., 1, 0) of the standard permutahedron.
PaddedPartition staircase(int n);

/// Membership by the dominance criterion: same total and sort(x) dominated
/// by lambda. Throws std::domain_error on length mismatch.
bool is_lattice_point(const LatticePoint& x, const PermutahedronSpec& spec);

/// Sorted lattice points of P_lambda (every padded partition of |lambda|
/// dominated by lambda), in decreasing lexicographic order.
void for_each_orbit_rep(const PermutahedronSpec& spec,
                        const std::function<void(const PaddedPartition&)>& visit);
std::vector<PaddedPartition> orbit_reps(const PermutahedronSpec& spec);

BigInt lattice_point_count(const PermutahedronSpec& spec);

/// Every lattice point of P_lambda, orbit by orbit.
void for_each_lattice_point(const PermutahedronSpec& spec,
                            const std::function<void(const LatticePoint&)>& visit);

/// sum over lambda in orbit_reps(delta_n) of h_{mult(lambda)}.
SymFunc frobenius_gamma(int n);

/// Lattice points of P_{delta_n} fixed by a permutation of cycle type mu,
/// counted by enumerating values constant on cycles.
BigInt fixed_point_count(int n, const CycleType& mu);

/// f(d) n^{l-2} with d the gcd and l the number of cycles of mu, where
/// f(1)=1, f(2)=2 if n = 2 mod 4, and f = 0 otherwise. Evaluated over the
/// rationals; throws std::logic_error if the value is not an integer.
BigInt fixed_point_formula(int n, const CycleType& mu);

/// |Lat(P_{t lambda})| for t = 0..t_max.
std::vector<BigInt> ehrhart_counts(const PermutahedronSpec& spec, int t_max);

/// Coefficients (constant term first) of the polynomial of degree < values.size()
/// through (t, values[t]), t = 0, 1, ...
std::vector<Rational> interpolate(const std::vector<BigInt>& values);

/// Ehrhart polynomial coefficients (constant first) interpolated on t = 0..n-1.
/// Throws DegeneratePolytope for a constant lambda.
std::vector<Rational> ehrhart_polynomial(const PermutahedronSpec& spec);

/// Leading Ehrhart coefficient. Throws DegeneratePolytope for a constant
/// lambda and std::logic_error if the coefficient is not integral.
BigInt normalized_volume(const PermutahedronSpec& spec);

/// x -> (n-2 - x_1, ..., n-2 - x_n). Maps the trimmed standard
/// permutahedron P_{(n-2,n-2,n-3,...,1,0)} onto P_{delta_n}.
LatticePoint trimmed_to_delta(const LatticePoint& x, int n);

/// (n-2, n-2, n-3, ..., 1, 0).
PaddedPartition trimmed_vertex(int n);

}  // namespace parkhedron
