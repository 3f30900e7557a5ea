#include "parkhedron/symfunc.hpp"

#include <cctype>
#include <mutex>
#include <ostream>
#include <shared_mutex>
#include <sstream>
#include <vector>

namespace parkhedron {

char basis_letter(Basis b) noexcept
{
    return b == Basis::h ? 'h' : 'p';
}

SymFunc::SymFunc(Basis basis, int degree) : basis_(basis), degree_(degree)
{
    if (degree < 0)
        throw std::domain_error("symmetric function degree must be nonnegative");
}

SymFunc SymFunc::monomial(Basis basis, const Partition& lambda, const Rational& coeff)
{
    SymFunc f(basis, lambda.size());
    f.add_term(lambda, coeff);
    return f;
}

Rational SymFunc::coefficient(const Partition& lambda) const
{
    auto it = terms_.find(lambda);
    return it == terms_.end() ? Rational(0) : it->second;
}

void SymFunc::add_term(const Partition& lambda, const Rational& coeff)
{
    if (lambda.size() != degree_)
        throw std::domain_error("term " + lambda.to_string() + " does not have degree " +
                                std::to_string(degree_));
    if (coeff == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(lambda, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

SymFunc& SymFunc::operator+=(const SymFunc& other)
{
    *this = add(*this, other);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& other)
{
    *this = add(*this, scale(other, -1));
    return *this;
}

SymFunc& SymFunc::operator*=(const Rational& q)
{
    if (q == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [lambda, c] : terms_)
        c *= q;
    return *this;
}

bool operator==(const SymFunc& a, const SymFunc& b)
{
    if (a.degree() != b.degree())
        return a.is_zero() && b.is_zero();
    if (a.basis() == b.basis())
        return a.terms() == b.terms();
    return to_p_basis(a).terms() == to_p_basis(b).terms();
}

SymFunc h_monomial(const Partition& lambda)
{
    return SymFunc::monomial(Basis::h, lambda);
}

SymFunc p_monomial(const Partition& lambda)
{
    return SymFunc::monomial(Basis::p, lambda);
}

SymFunc add(const SymFunc& f, const SymFunc& g)
{
    if (f.degree() != g.degree())
        throw std::domain_error("cannot add symmetric functions of degrees " +
                                std::to_string(f.degree()) + " and " + std::to_string(g.degree()));
    if (f.basis() != g.basis())
        return add(to_p_basis(f), to_p_basis(g));
    SymFunc r = f;
    for (const auto& [lambda, c] : g.terms())
        r.add_term(lambda, c);
    return r;
}

SymFunc scale(const SymFunc& f, const Rational& q)
{
    SymFunc r = f;
    r *= q;
    return r;
}

SymFunc operator+(const SymFunc& f, const SymFunc& g)
{
    return add(f, g);
}

SymFunc operator-(const SymFunc& f, const SymFunc& g)
{
    return add(f, scale(g, -1));
}

BigInt z_lambda(const Partition& lambda)
{
    BigInt z = 1;
    const auto& v = lambda.parts();
    for (std::size_t i = 0; i < v.size();) {
        std::size_t j = i;
        while (j < v.size() && v[j] == v[i])
            ++j;
        const int m = static_cast<int>(j - i);
        z *= ipow(BigInt(v[i]), m) * factorial(m);
        i = j;
    }
    return z;
}

namespace {

Partition merge(const Partition& a, const Partition& b)
{
    std::vector<int> v = a.parts();
    v.insert(v.end(), b.parts().begin(), b.parts().end());
    return Partition::from_multiset(std::move(v));
}

SymFunc multiply_p(const SymFunc& a, const SymFunc& b)
{
    SymFunc r(Basis::p, a.degree() + b.degree());
    for (const auto& [la, ca] : a.terms())
        for (const auto& [lb, cb] : b.terms())
            r.add_term(merge(la, lb), ca * cb);
    return r;
}

// Memoized p-expansions of h_lambda. Readers share the lock; a miss computes
// outside the lock and inserts under the exclusive lock.
class HToPCache {
public:
    SymFunc get(const Partition& lambda)
    {
        {
            std::shared_lock lock(mutex_);
            if (auto it = table_.find(lambda); it != table_.end())
                return it->second;
        }
        SymFunc value = compute(lambda);
        std::unique_lock lock(mutex_);
        return table_.try_emplace(lambda, std::move(value)).first->second;
    }

private:
    SymFunc compute(const Partition& lambda)
    {
        if (lambda.empty())
            return SymFunc::monomial(Basis::p, Partition{});
        if (lambda.length() == 1) {
            const int k = lambda[0];
            SymFunc r(Basis::p, k);
            for (const auto& mu : partitions_of(k))
                r.add_term(mu, Rational(BigInt(1), z_lambda(mu)));
            return r;
        }
        // h_lambda = h_{lambda_1} * h_{rest}
        std::vector<int> rest(lambda.parts().begin() + 1, lambda.parts().end());
        return multiply_p(get(Partition{lambda[0]}), get(Partition(std::move(rest))));
    }

    std::shared_mutex mutex_;
    std::map<Partition, SymFunc> table_;
};

HToPCache& h_to_p_cache()
{
    static HToPCache cache;
    return cache;
}

}  // namespace

SymFunc to_p_basis(const SymFunc& f)
{
    if (f.basis() == Basis::p)
        return f;
    SymFunc r(Basis::p, f.degree());
    for (const auto& [lambda, c] : f.terms()) {
        const SymFunc expansion = h_to_p_cache().get(lambda);
        for (const auto& [mu, d] : expansion.terms())
            r.add_term(mu, c * d);
    }
    return r;
}

Rational character(const SymFunc& f, const CycleType& mu)
{
    if (f.degree() != mu.n())
        throw std::domain_error("character: degree " + std::to_string(f.degree()) +
                                " does not match cycle type of size " + std::to_string(mu.n()));
    return to_p_basis(f).coefficient(mu.cycles()) * z_lambda(mu.cycles());
}

SymFunc restrict(const SymFunc& f)
{
    if (f.degree() == 0)
        throw std::domain_error("restrict: degree-0 function has no restriction");
    if (f.basis() == Basis::p)
        return restrict_via_power_sums(f);
    SymFunc r(Basis::h, f.degree() - 1);
    for (const auto& [lambda, c] : f.terms()) {
        const auto& v = lambda.parts();
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i > 0 && v[i] == v[i - 1])
                continue;
            std::vector<int> lowered = v;
            --lowered[i];
            r.add_term(Partition::from_multiset(std::move(lowered)), c * lambda.multiplicity(v[i]));
        }
    }
    return r;
}

SymFunc restrict_via_power_sums(const SymFunc& f)
{
    if (f.degree() == 0)
        throw std::domain_error("restrict: degree-0 function has no restriction");
    SymFunc r(Basis::p, f.degree() - 1);
    const SymFunc fp = to_p_basis(f);
    for (const auto& [mu, c] : fp.terms()) {
        const int ones = mu.multiplicity(1);
        if (ones == 0)
            continue;
        std::vector<int> v = mu.parts();
        v.pop_back();  // a part equal to 1 is always last
        r.add_term(Partition(std::move(v)), c * ones);
    }
    return r;
}

SymFuncParseError::SymFuncParseError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " at position " + std::to_string(position)), position_(position)
{
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    SymFunc parse()
    {
        skip_ws();
        if (at_end())
            fail("empty input");
        if (peek() == '0') {
            std::size_t save = pos_;
            ++pos_;
            skip_ws();
            if (at_end())
                return SymFunc::zero(Basis::h, 0);
            pos_ = save;
        }
        struct Term {
            Basis basis;
            Partition lambda;
            Rational coeff;
            std::size_t pos;
        };
        std::vector<Term> terms;
        int sign = 1;
        if (peek() == '-') {
            sign = -1;
            ++pos_;
        }
        for (;;) {
            skip_ws();
            std::size_t start = pos_;
            Rational coeff = 1;
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                BigInt num = parse_int();
                BigInt den = 1;
                skip_ws();
                if (peek() == '/') {
                    ++pos_;
                    skip_ws();
                    den = parse_int();
                    if (den == 0)
                        fail("zero denominator");
                }
                coeff = Rational(num, den);
                skip_ws();
            }
            Basis basis;
            if (peek() == 'h')
                basis = Basis::h;
            else if (peek() == 'p')
                basis = Basis::p;
            else
                fail("expected basis 'h' or 'p'");
            ++pos_;
            skip_ws();
            expect('[');
            std::vector<int> parts;
            skip_ws();
            if (peek() != ']') {
                for (;;) {
                    skip_ws();
                    std::size_t part_pos = pos_;
                    BigInt v = parse_int();
                    if (v < 1 || v > 1'000'000)
                        fail_at("partition parts must be positive", part_pos);
                    if (!parts.empty() && v > parts.back())
                        fail_at("partition parts must be weakly decreasing", part_pos);
                    parts.push_back(static_cast<int>(v));
                    skip_ws();
                    if (peek() == ',') {
                        ++pos_;
                        continue;
                    }
                    break;
                }
            }
            expect(']');
            terms.push_back({basis, Partition(std::move(parts)), coeff * sign, start});
            skip_ws();
            if (at_end())
                break;
            if (peek() == '+')
                sign = 1;
            else if (peek() == '-')
                sign = -1;
            else
                fail("expected '+' or '-'");
            ++pos_;
        }

        const int degree = terms.front().lambda.size();
        bool mixed = false;
        for (const auto& t : terms) {
            if (t.lambda.size() != degree)
                fail_at("inhomogeneous term", t.pos);
            mixed = mixed || t.basis != terms.front().basis;
        }
        SymFunc result(mixed ? Basis::p : terms.front().basis, degree);
        for (const auto& t : terms) {
            SymFunc term = SymFunc::monomial(t.basis, t.lambda, t.coeff);
            result = add(result, mixed ? to_p_basis(term) : term);
        }
        return result;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    void expect(char c)
    {
        if (peek() != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    BigInt parse_int()
    {
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected integer");
        BigInt v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        return v;
    }

    [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }
    [[noreturn]] void fail_at(const std::string& msg, std::size_t pos) const
    {
        throw SymFuncParseError(msg, pos);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

SymFunc parse_symfunc(std::string_view text)
{
    return Parser(text).parse();
}

std::string format(const SymFunc& f)
{
    if (f.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [lambda, c] = *it;
        const bool negative = c < 0;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        Rational a = negative ? Rational(-c) : c;
        if (a != 1)
            os << a << ' ';
        os << basis_letter(f.basis()) << '[';
        for (std::size_t i = 0; i < lambda.length(); ++i)
            os << (i ? "," : "") << lambda[i];
        os << ']';
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const SymFunc& f)
{
    return os << format(f);
}

}  // namespace parkhedron
