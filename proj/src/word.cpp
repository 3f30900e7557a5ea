#include "parkhedron/word.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace parkhedron {

BinaryWord::BinaryWord(std::vector<std::uint8_t> letters) : letters_(std::move(letters))
{
    for (auto c : letters_)
        if (c > 1)
            throw std::domain_error("binary word letters must be 0 or 1");
}

BinaryWord::BinaryWord(std::string_view text)
{
    letters_.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1')
            throw std::domain_error("binary word may only contain '0' and '1'");
        letters_.push_back(static_cast<std::uint8_t>(c - '0'));
    }
}

int BinaryWord::count_ones() const noexcept
{
    return static_cast<int>(std::count(letters_.begin(), letters_.end(), 1));
}

std::string BinaryWord::to_string() const
{
    std::string s;
    s.reserve(letters_.size());
    for (auto c : letters_)
        s.push_back(static_cast<char>('0' + c));
    return s;
}

std::ostream& operator<<(std::ostream& os, const BinaryWord& w)
{
    return os << w.to_string();
}

BinaryWord rotate(const BinaryWord& w, long long j)
{
    if (w.empty())
        return w;
    const auto k = static_cast<long long>(w.length());
    j %= k;
    if (j < 0)
        j += k;
    std::vector<std::uint8_t> v = w.letters();
    std::rotate(v.begin(), v.begin() + j, v.end());
    return BinaryWord(std::move(v));
}

bool is_primitive(const BinaryWord& w)
{
    if (w.empty())
        throw std::domain_error("is_primitive: empty word");
    // w equals a proper rotation iff its smallest period divides |w| properly.
    const auto& s = w.letters();
    const std::size_t k = s.size();
    std::vector<std::size_t> border(k + 1, 0);
    for (std::size_t i = 1, b = 0; i < k; ++i) {
        while (b > 0 && s[i] != s[b])
            b = border[b];
        if (s[i] == s[b])
            ++b;
        border[i + 1] = b;
    }
    std::size_t period = k - border[k];
    return period == k || k % period != 0;
}

std::size_t least_rotation(const BinaryWord& w)
{
    if (w.empty())
        throw std::domain_error("least_rotation: empty word");
    // Booth's failure-function scan over the doubled word.
    const auto& s = w.letters();
    const std::size_t n = s.size();
    std::vector<long long> f(2 * n, -1);
    std::size_t k = 0;
    for (std::size_t j = 1; j < 2 * n; ++j) {
        const auto sj = s[j % n];
        long long i = f[j - k - 1];
        while (i != -1 && sj != s[(k + i + 1) % n]) {
            if (sj < s[(k + i + 1) % n])
                k = j - i - 1;
            i = f[i];
        }
        if (i == -1 && sj != s[(k + i + 1) % n]) {
            if (sj < s[(k + i + 1) % n])
                k = j;
            f[j - k] = -1;
        } else {
            f[j - k] = i + 1;
        }
    }
    return k;
}

bool is_lyndon(const BinaryWord& w)
{
    return is_primitive(w) && least_rotation(w) == 0;
}

Partition runs_of_ones(const BinaryWord& w)
{
    if (w.empty() || w[0] != 0)
        throw std::domain_error("runs_of_ones: word must begin with 0");
    std::vector<int> runs;
    int run = 0;
    for (auto c : w.letters()) {
        if (c == 1) {
            ++run;
        } else if (run > 0) {
            runs.push_back(run);
            run = 0;
        }
    }
    if (run > 0)
        runs.push_back(run);
    return Partition::from_multiset(std::move(runs));
}

void for_each_lyndon_fixed_content(int zeros, int ones,
                                   const std::function<void(const BinaryWord&)>& visit)
{
    if (zeros < 0 || ones < 0)
        throw std::domain_error("letter counts must be nonnegative");
    const int n = zeros + ones;
    if (n == 0)
        return;
    if (zeros == 0 || ones == 0) {
        // only a single letter is Lyndon over a unary alphabet
        if (n == 1)
            visit(BinaryWord(std::vector<std::uint8_t>{static_cast<std::uint8_t>(zeros == 0 ? 1 : 0)}));
        return;
    }
    // Prenecklace recursion restricted to the remaining content; a[0] is a
    // sentinel, positions 1..n hold the word. Output when the period p is n.
    std::vector<std::uint8_t> a(n + 1, 0);
    int remaining[2] = {zeros, ones};
    auto rec = [&](auto&& self, int t, int p) -> void {
        if (t > n) {
            if (p == n)
                visit(BinaryWord(std::vector<std::uint8_t>(a.begin() + 1, a.end())));
            return;
        }
        for (int j = a[t - p]; j <= 1; ++j) {
            if (remaining[j] == 0)
                continue;
            a[t] = static_cast<std::uint8_t>(j);
            --remaining[j];
            self(self, t + 1, j == a[t - p] ? p : t);
            ++remaining[j];
        }
    };
    a[0] = 0;
    // t=1 must take letter 0 (the smallest available letter starts every Lyndon word)
    a[1] = 0;
    --remaining[0];
    rec(rec, 2, 1);
}

std::vector<BinaryWord> enumerate_lyndon_fixed_content(int zeros, int ones)
{
    std::vector<BinaryWord> out;
    for_each_lyndon_fixed_content(zeros, ones, [&](const BinaryWord& w) { out.push_back(w); });
    return out;
}

void for_each_word_with_content(int zeros, int ones,
                                const std::function<void(const BinaryWord&)>& visit)
{
    if (zeros < 0 || ones < 0)
        return;
    std::vector<std::uint8_t> v(zeros, 0);
    v.insert(v.end(), ones, 1);
    do {
        visit(BinaryWord(v));
    } while (std::next_permutation(v.begin(), v.end()));
}

}  // namespace parkhedron
