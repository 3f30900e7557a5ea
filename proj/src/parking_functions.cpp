#include "parkhedron/parking_functions.hpp"

#include <algorithm>
#include <stdexcept>

namespace parkhedron {

bool is_parking_function(std::span<const int> values)
{
    std::vector<int> b(values.begin(), values.end());
    std::sort(b.begin(), b.end());
    for (std::size_t i = 0; i < b.size(); ++i)
        if (b[i] < 0 || b[i] > static_cast<int>(i))
            return false;
    return true;
}

std::vector<PaddedPartition> enumerate_nondecreasing_pf(int k)
{
    if (k < 1)
        throw std::domain_error("parking functions need length k >= 1");
    std::vector<PaddedPartition> out;
    std::vector<int> b(k);
    auto rec = [&](auto&& self, int i, int lo) -> void {
        if (i == k) {
            out.emplace_back(std::vector<int>(b.rbegin(), b.rend()));
            return;
        }
        for (int v = lo; v <= i; ++v) {
            b[i] = v;
            self(self, i + 1, v);
        }
    };
    rec(rec, 0, 0);
    return out;
}

void for_each_parking_function(int k, const std::function<void(const std::vector<int>&)>& visit)
{
    if (k < 1)
        throw std::domain_error("parking functions need length k >= 1");
    std::vector<int> a(k, 0);
    for (;;) {
        if (is_parking_function(a))
            visit(a);
        int i = k - 1;
        while (i >= 0 && a[i] == k - 1)
            a[i--] = 0;
        if (i < 0)
            return;
        ++a[i];
    }
}

SymFunc frobenius_pf(int k)
{
    SymFunc f(Basis::h, k);
    for (const auto& rep : enumerate_nondecreasing_pf(k))
        f.add_term(multiplicity_partition(rep), 1);
    return f;
}

}  // namespace parkhedron
