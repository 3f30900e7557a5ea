#include "parkhedron/arith.hpp"

#include <numeric>
#include <stdexcept>

namespace parkhedron {

BigInt factorial(int k)
{
    if (k < 0)
        throw std::domain_error("factorial of a negative number");
    BigInt r = 1;
    for (int i = 2; i <= k; ++i)
        r *= i;
    return r;
}

BigInt binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

BigInt ipow(const BigInt& base, int exponent)
{
    if (exponent < 0)
        throw std::domain_error("negative exponent in integer power");
    BigInt r = 1;
    for (int i = 0; i < exponent; ++i)
        r *= base;
    return r;
}

int mobius(std::int64_t k)
{
    if (k < 1)
        throw std::domain_error("mobius: argument must be >= 1");
    int sign = 1;
    for (std::int64_t p = 2; p * p <= k; ++p) {
        if (k % p != 0)
            continue;
        k /= p;
        if (k % p == 0)
            return 0;
        sign = -sign;
    }
    if (k > 1)
        sign = -sign;
    return sign;
}

std::vector<std::int64_t> divisors(std::int64_t k)
{
    if (k < 1)
        throw std::domain_error("divisors: argument must be >= 1");
    std::vector<std::int64_t> small, large;
    for (std::int64_t d = 1; d * d <= k; ++d) {
        if (k % d != 0)
            continue;
        small.push_back(d);
        if (d != k / d)
            large.push_back(k / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

int gcd_all(std::span<const int> parts)
{
    int g = 0;
    for (int p : parts)
        g = std::gcd(g, p);
    return g;
}

BigInt catalan(int k)
{
    return binomial(2 * k, k) / (k + 1);
}

}  // namespace parkhedron
