#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "parkhedron/partition.hpp"

namespace parkhedron {

/// Finite word over {0,1}. Lexicographic order uses 0 < 1.
class BinaryWord {
public:
    BinaryWord() = default;
    /// Throws std::domain_error if any letter is not 0 or 1.
    explicit BinaryWord(std::vector<std::uint8_t> letters);
    /// Parses a string of '0' and '1' characters.
    explicit BinaryWord(std::string_view text);

    const std::vector<std::uint8_t>& letters() const noexcept { return letters_; }
    std::size_t length() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    std::uint8_t operator[](std::size_t i) const { return letters_[i]; }

    int count_ones() const noexcept;
    int count_zeros() const noexcept { return static_cast<int>(length()) - count_ones(); }

    std::string to_string() const;

    friend auto operator<=>(const BinaryWord&, const BinaryWord&) = default;

private:
    std::vector<std::uint8_t> letters_;
};

std::ostream& operator<<(std::ostream& os, const BinaryWord& w);

/// rot^j(w) where rot(w_1...w_k) = w_2...w_k w_1; j is taken modulo |w|.
BinaryWord rotate(const BinaryWord& w, long long j);

/// Throws std::domain_error for the empty word.
bool is_primitive(const BinaryWord& w);

/// Smallest j such that rot^j(w) is the lexicographically least rotation.
/// Linear time (Booth). Throws std::domain_error for the empty word.
std::size_t least_rotation(const BinaryWord& w);

/// Primitive and equal to its least rotation.
bool is_lyndon(const BinaryWord& w);

/// Lengths of the maximal runs of 1s, sorted decreasingly. The word must
/// begin with 0 so that linear and cyclic runs coincide; throws
/// std::domain_error otherwise.
Partition runs_of_ones(const BinaryWord& w);

/// Every Lyndon word with the given numbers of 0s and 1s, in lexicographic
/// order.
void for_each_lyndon_fixed_content(int zeros, int ones,
                                   const std::function<void(const BinaryWord&)>& visit);
std::vector<BinaryWord> enumerate_lyndon_fixed_content(int zeros, int ones);

/// Every word of the given content in lexicographic order.
void for_each_word_with_content(int zeros, int ones,
                                const std::function<void(const BinaryWord&)>& visit);

}  // namespace parkhedron
