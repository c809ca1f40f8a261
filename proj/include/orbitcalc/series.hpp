#ifndef ORBITCALC_SERIES_HPP
#define ORBITCALC_SERIES_HPP

#include <string>
#include <vector>

#include <orbitcalc/profile.hpp>
#include <orbitcalc/rational.hpp>
#include <orbitcalc/upoly.hpp>

namespace orbitcalc
{

// Binary form of degree d; coeffs[i] multiplies v1^(d-i) v2^i.
class BinaryForm
{
public:
    explicit BinaryForm(std::vector<Rational> coeffs);

    int degree() const
    {
        return static_cast<int>(coeffs_.size()) - 1;
    }
    const std::vector<Rational> &coeffs() const
    {
        return coeffs_;
    }
    bool is_zero() const;

    // Dehomogenization f(t) = F(t, 1).
    UPoly affine() const;

    // Clears denominators, divides by the content and makes the first
    // nonzero coefficient positive.
    BinaryForm normalized() const;

    friend bool operator==(const BinaryForm &, const BinaryForm &) = default;

private:
    std::vector<Rational> coeffs_;
};

// "v1*v2 - 2*v2^2"
std::string to_string(const BinaryForm &f);

// Point [p1 : p2] of P^1, normalized so the first nonzero coordinate is 1.
class ProjPoint
{
public:
    ProjPoint(const Rational &p1, const Rational &p2);

    const Rational &first() const
    {
        return p1_;
    }
    const Rational &second() const
    {
        return p2_;
    }

    friend bool operator==(const ProjPoint &, const ProjPoint &) = default;

private:
    Rational p1_;
    Rational p2_;
};

std::string to_string(const ProjPoint &p);

// Linear substitution v1 -> a*u1 + b*u2, v2 -> c*u1 + e*u2.
struct Substitution {
    Rational a, b, c, e;

    Rational determinant() const
    {
        return a * e - b * c;
    }
};

// F(a*u1 + b*u2, c*u1 + e*u2) as a form in (u1, u2).
BinaryForm transform(const BinaryForm &f, const Substitution &g);

// A substitution sending [1:0] to p; orders of vanishing at p become
// orders in the local parameter u2 at [1:0].
Substitution move_to_origin(const ProjPoint &p);

// Order of vanishing of a nonzero form at p.
int order_at(const BinaryForm &f, const ProjPoint &p);

// Rank r, degree d subspace of Sym^d spanned by r+1 forms.
class LinearSeries
{
public:
    // Throws DegenerateBasis when the forms are dependent and InvalidSequence
    // when the shape is inconsistent.
    explicit LinearSeries(std::vector<BinaryForm> basis);

    int r() const
    {
        return static_cast<int>(basis_.size()) - 1;
    }
    int d() const
    {
        return basis_.front().degree();
    }
    const std::vector<BinaryForm> &basis() const
    {
        return basis_;
    }

    LinearSeries transformed(const Substitution &g) const;
    // Replaces the basis by change * basis; change is (r+1)x(r+1).
    LinearSeries rebased(const std::vector<std::vector<Rational>> &change) const;

private:
    std::vector<BinaryForm> basis_;
};

// <w1^(d-a0) w2^a0, ..., w1^(d-ar) w2^ar>
LinearSeries monomial_series(const VanishingSequence &seq, int d);

// Galois-stable set of points given by the squarefree roots of a polynomial.
// In the affine chart a root t is the point [t : 1]; in the chart at
// infinity it is [1 : t].
struct AlgebraicPointClass {
    enum class Chart { affine, infinity };

    UPoly defining;
    Chart chart = Chart::affine;
};

std::string to_string(const AlgebraicPointClass &cls);

VanishingSequence vanishing_sequence(const LinearSeries &s, const ProjPoint &p);

struct FactorSequence {
    UPoly factor;
    VanishingSequence sequence;
};

// Vanishing sequence at the roots of cls.defining, computed over
// Q[t]/(f) with splitting on zero divisors. One entry per distinct
// sequence; the factors multiply to the monic defining polynomial.
// Throws NotSquarefree.
std::vector<FactorSequence> vanishing_sequence_algebraic(const LinearSeries &s,
                                                         const AlgebraicPointClass &cls);

// Normalized Wronskian, a form of degree (r+1)(d-r).
BinaryForm wronskian(const LinearSeries &s);

struct RamificationPoint {
    AlgebraicPointClass points;
    VanishingSequence sequence;
    int multiplicity; // in the Wronskian; equals sequence.weight()
};

struct RamificationData {
    RamificationProfile profile;
    std::vector<RamificationPoint> classes;
};

RamificationData ramification_profile(const LinearSeries &s);

// Exponents of the flat limit of diag(1, t) applied to s after moving b to
// [1:0], computed by elimination over Q[t]. Independent of
// vanishing_sequence, which it must agree with.
VanishingSequence degenerate_at(const LinearSeries &s, const ProjPoint &b);

struct BoundaryOrbit {
    VanishingSequence sequence;
    int dimension; // 1 for the generic sequence, 2 otherwise
    LinearSeries representative;
};

// Generic orbit first, then the ramification sequences in descending order.
std::vector<BoundaryOrbit> boundary_orbits(const LinearSeries &s);

} // namespace orbitcalc

#endif
