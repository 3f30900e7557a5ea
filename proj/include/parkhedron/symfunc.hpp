#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "parkhedron/arith.hpp"
#include "parkhedron/partition.hpp"

namespace parkhedron {

enum class Basis { h, p };

char basis_letter(Basis b) noexcept;

/// Homogeneous symmetric function with exact rational coefficients, stored in
/// either the complete homogeneous (h) or the power-sum (p) basis.
///
/// Every key has size equal to degree() and no stored coefficient is zero.
/// Equality is basis-aware: both sides are compared in the p basis.
class SymFunc {
public:
    using Terms = std::map<Partition, Rational>;

    SymFunc(Basis basis, int degree);

    static SymFunc zero(Basis basis, int degree) { return SymFunc(basis, degree); }
    static SymFunc monomial(Basis basis, const Partition& lambda, const Rational& coeff = 1);

    Basis basis() const noexcept { return basis_; }
    int degree() const noexcept { return degree_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Rational coefficient(const Partition& lambda) const;

    /// Adds coeff to the coefficient of lambda. Throws std::domain_error
    /// when |lambda| differs from the degree.
    void add_term(const Partition& lambda, const Rational& coeff);

    SymFunc& operator+=(const SymFunc& other);
    SymFunc& operator-=(const SymFunc& other);
    SymFunc& operator*=(const Rational& q);

    friend bool operator==(const SymFunc& a, const SymFunc& b);

private:
    Basis basis_;
    int degree_;
    Terms terms_;
};

SymFunc h_monomial(const Partition& lambda);
SymFunc p_monomial(const Partition& lambda);

/// Sum of two functions of equal degree; mixed bases are summed in p.
/// Throws std::domain_error on degree mismatch.
SymFunc add(const SymFunc& f, const SymFunc& g);
SymFunc scale(const SymFunc& f, const Rational& q);

SymFunc operator+(const SymFunc& f, const SymFunc& g);
SymFunc operator-(const SymFunc& f, const SymFunc& g);

/// 1^{m_1} m_1! 2^{m_2} m_2! ..., the centralizer order of cycle type lambda.
BigInt z_lambda(const Partition& lambda);

/// Rewrites F in the power-sum basis via h_k = sum_{mu |- k} p_mu / z_mu.
SymFunc to_p_basis(const SymFunc& f);

/// Character value at cycle type mu: z_mu times the p_mu coefficient.
/// Throws std::domain_error when deg F != |mu|.
Rational character(const SymFunc& f, const CycleType& mu);

/// Frobenius characteristic of the restriction from S_k to S_{k-1}.
/// In the h basis this is the Leibniz rule h_k -> h_{k-1}; a p-basis input
/// is differentiated by p_1. Throws std::domain_error for degree 0.
SymFunc restrict(const SymFunc& f);

/// d/dp_1 after conversion to the p basis. Independent route for restrict.
SymFunc restrict_via_power_sums(const SymFunc& f);

class SymFuncParseError : public std::runtime_error {
public:
    SymFuncParseError(const std::string& what, std::size_t position);
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Grammar: term (("+"|"-") term)*, term := [coeff] ("h"|"p") "[" parts "]",
/// coeff := int | int "/" int. An optional leading "-" negates the first term.
/// "0" parses to the degree-0 zero. Throws SymFuncParseError.
SymFunc parse_symfunc(std::string_view text);

/// Canonical text: terms in decreasing lexicographic order of partitions,
/// unit coefficients omitted, e.g. "h[3] + 3 h[2,1] - 1/2 h[1,1,1]".
std::string format(const SymFunc& f);

std::ostream& operator<<(std::ostream& os, const SymFunc& f);

}  // namespace parkhedron
