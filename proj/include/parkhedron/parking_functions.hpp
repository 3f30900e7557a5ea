#pragma once

#include <functional>
#include <span>
#include <vector>

#include "parkhedron/partition.hpp"
#include "parkhedron/symfunc.hpp"

namespace parkhedron {

// Zero-based convention: a tuple is a parking function iff its sorted values
// b_1 <= ... <= b_k satisfy b_i <= i - 1.

bool is_parking_function(std::span<const int> values);

/// Weakly increasing parking functions of length k, each returned sorted
/// decreasingly as a PaddedPartition of length k. There are Catalan(k).
/// Throws std::domain_error for k < 1.
std::vector<PaddedPartition> enumerate_nondecreasing_pf(int k);

/// Every parking function of length k (all of [0, k-1]^k filtered).
void for_each_parking_function(int k, const std::function<void(const std::vector<int>&)>& visit);

/// sum over nondecreasing parking functions a of h_{mult(a)}.
SymFunc frobenius_pf(int k);

}  // namespace parkhedron
