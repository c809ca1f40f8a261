#ifndef ORBITCALC_POLY_HPP
#define ORBITCALC_POLY_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <orbitcalc/rational.hpp>

namespace orbitcalc
{

// Ordered variable list (mu0, ..., mu_r, w1, w2). Two polynomials may only
// be combined when their contexts agree.
class Context
{
public:
    constexpr explicit Context(std::size_t mu_count) : mu_count_(mu_count) {}

    // Context for a rank-r series: r+1 mu variables.
    static constexpr Context for_rank(int r)
    {
        return Context(static_cast<std::size_t>(r + 1));
    }

    constexpr std::size_t mu_count() const
    {
        return mu_count_;
    }
    constexpr std::size_t nvars() const
    {
        return mu_count_ + 2;
    }
    constexpr std::size_t mu(std::size_t j) const
    {
        return j;
    }
    constexpr std::size_t w1() const
    {
        return mu_count_;
    }
    constexpr std::size_t w2() const
    {
        return mu_count_ + 1;
    }

    std::string variable_name(std::size_t index) const;

    friend constexpr bool operator==(const Context &, const Context &) = default;

private:
    std::size_t mu_count_;
};

using Exponents = std::vector<std::uint32_t>;

// Lexicographic order on (mu0, ..., mu_r, w1, w2), largest first. Term maps
// iterate from the leading monomial down.
struct LexGreater {
    bool operator()(const Exponents &a, const Exponents &b) const
    {
        return b < a;
    }
};

class Poly
{
public:
    using TermMap = std::map<Exponents, Rational, LexGreater>;

    explicit Poly(Context ctx) : ctx_(ctx) {}

    static Poly constant(Context ctx, const Rational &c);
    static Poly variable(Context ctx, std::size_t index);
    // Drops zero coefficients; throws ContextMismatch on a wrong exponent length.
    static Poly from_terms(Context ctx, TermMap terms);

    const Context &context() const
    {
        return ctx_;
    }
    const TermMap &terms() const
    {
        return terms_;
    }
    bool is_zero() const
    {
        return terms_.empty();
    }
    std::size_t size() const
    {
        return terms_.size();
    }
    Rational coefficient(const Exponents &e) const;

    Poly &operator+=(const Poly &other);
    Poly &operator-=(const Poly &other);
    Poly &operator*=(const Poly &other);
    Poly &operator*=(const Rational &c);

    friend Poly operator+(Poly a, const Poly &b)
    {
        return a += b;
    }
    friend Poly operator-(Poly a, const Poly &b)
    {
        return a -= b;
    }
    friend Poly operator*(const Poly &a, const Poly &b);
    friend Poly operator*(Poly a, const Rational &c)
    {
        return a *= c;
    }
    friend Poly operator*(const Rational &c, Poly a)
    {
        return a *= c;
    }
    Poly operator-() const;

    Poly pow(unsigned n) const;

    friend bool operator==(const Poly &a, const Poly &b)
    {
        return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
    }

private:
    void check_context(const Poly &other) const;
    void add_scaled(const Poly &other, const Rational &scale);

    Context ctx_;
    TermMap terms_;
};

enum class ArithKind { add, sub, mul };

Poly arith(const Poly &a, const Poly &b, ArithKind kind);

// Returns q with q * den == num. Throws NotDivisible when the remainder of
// lex-order division is nonzero. Linear divisors of the form w1 - c*w2 take
// a synthetic-division path.
Poly exact_quotient(const Poly &num, const Poly &den);

// Exact quotient by (w1 - w2) using synthetic division in w1.
Poly divide_by_omega_difference(const Poly &num);

// Simultaneous substitution; unassigned variables are left in place.
using Assignment = std::map<std::size_t, Poly>;
Poly substitute(const Poly &p, const Assignment &assignment);

Poly swap_omegas(const Poly &p);

// perm[j] is the index of the mu variable that mu_j is sent to.
Poly permute_mu(const Poly &p, std::span<const std::size_t> perm);

enum class Symmetry { symmetric, antisymmetric, neither };
enum class SymmetryGroup { omega_swap, mu_permutations };

// The zero polynomial is reported as symmetric.
Symmetry symmetry_check(const Poly &p, SymmetryGroup group);

struct Homogeneity {
    enum class Kind { zero, homogeneous, mixed };
    Kind kind;
    unsigned degree = 0;

    bool operator==(const Homogeneity &) const = default;
};

Homogeneity is_homogeneous(const Poly &p);

bool has_integer_coefficients(const Poly &p);

unsigned total_degree(const Exponents &e);

// Canonical text: terms in the fixed lex order, e.g. "-24*mu0^3 + 1/2*mu1*w2".
// Unit coefficients are omitted on non-constant terms; zero prints as "0".
std::string to_string(const Poly &p);

// Inverse of to_string. Also accepts extra whitespace and explicit unit
// coefficients. Throws ParseError.
Poly parse_poly(Context ctx, std::string_view text);

} // namespace orbitcalc

#endif
