#ifndef ORBITCALC_UPOLY_HPP
#define ORBITCALC_UPOLY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <orbitcalc/rational.hpp>

namespace orbitcalc
{

// Dense univariate polynomial over the rationals, coefficient k of t^k.
// Trailing zeros are always stripped; the zero polynomial has no coefficients.
class UPoly
{
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> coeffs);

    static UPoly constant(const Rational &c);
    // c * t^k
    static UPoly monomial(const Rational &c, unsigned k);

    bool is_zero() const
    {
        return coeffs_.empty();
    }
    // -1 for the zero polynomial.
    int degree() const
    {
        return static_cast<int>(coeffs_.size()) - 1;
    }
    const std::vector<Rational> &coeffs() const
    {
        return coeffs_;
    }
    Rational coeff(std::size_t k) const
    {
        return k < coeffs_.size() ? coeffs_[k] : Rational(0);
    }
    const Rational &leading() const
    {
        return coeffs_.back();
    }

    UPoly &operator+=(const UPoly &o);
    UPoly &operator-=(const UPoly &o);
    UPoly &operator*=(const Rational &c);
    friend UPoly operator+(UPoly a, const UPoly &b)
    {
        return a += b;
    }
    friend UPoly operator-(UPoly a, const UPoly &b)
    {
        return a -= b;
    }
    friend UPoly operator*(const UPoly &a, const UPoly &b);
    friend UPoly operator*(UPoly a, const Rational &c)
    {
        return a *= c;
    }
    UPoly operator-() const;

    friend bool operator==(const UPoly &, const UPoly &) = default;

    Rational evaluate(const Rational &x) const;
    UPoly derivative() const;
    // k-th derivative divided by k!
    UPoly divided_derivative(unsigned k) const;
    UPoly monic() const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

// Quotient and remainder; throws InternalError on a zero divisor.
std::pair<UPoly, UPoly> divmod(const UPoly &a, const UPoly &b);

// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly &a, const UPoly &b);

// Inverse of a modulo f when gcd(a, f) = 1.
std::optional<UPoly> inverse_mod(const UPoly &a, const UPoly &f);

bool is_squarefree(const UPoly &f);

// Yun's algorithm: f = lc * prod_m parts[m]^m with parts[m] squarefree,
// monic and pairwise coprime. parts[0] is unused and equal to 1.
std::vector<UPoly> squarefree_decomposition(const UPoly &f);

std::string to_string(const UPoly &p, const std::string &var = "t");

} // namespace orbitcalc

#endif
