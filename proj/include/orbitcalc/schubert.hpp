#ifndef ORBITCALC_SCHUBERT_HPP
#define ORBITCALC_SCHUBERT_HPP

#include <map>
#include <string>
#include <vector>

#include <orbitcalc/poly.hpp>
#include <orbitcalc/profile.hpp>
#include <orbitcalc/rational.hpp>

namespace orbitcalc
{

// Weakly decreasing positive parts; the empty partition indexes the unit.
using Partition = std::vector<int>;

// Sorts nothing: throws InvalidSequence unless weakly decreasing and
// non-negative, then trims trailing zeros.
Partition make_partition(std::vector<int> parts);

int size(const Partition &p);

// Fits inside `rows` parts each at most `cols`.
bool fits_box(const Partition &p, int rows, int cols);

// "2,1"
std::string to_string(const Partition &p);

// Integer combination of Schubert classes on Gr(r+1, d+1), indexed by
// partitions in the (r+1) x (d-r) box.
class SchubertClass
{
public:
    SchubertClass(int r, int d) : r_(r), d_(d) {}

    int r() const
    {
        return r_;
    }
    int d() const
    {
        return d_;
    }
    const std::map<Partition, Integer> &terms() const
    {
        return terms_;
    }
    bool is_zero() const
    {
        return terms_.empty();
    }
    Integer coefficient(const Partition &p) const;

    // Throws InvalidSequence if p does not fit the box.
    void add(const Partition &p, const Integer &coef);

    SchubertClass &operator+=(const SchubertClass &o);
    friend SchubertClass operator+(SchubertClass a, const SchubertClass &b)
    {
        return a += b;
    }
    SchubertClass &operator*=(const Integer &k);

    friend bool operator==(const SchubertClass &, const SchubertClass &) = default;

private:
    int r_;
    int d_;
    std::map<Partition, Integer> terms_;
};

// Single basis element Omega_p.
SchubertClass schubert_basis(int r, int d, const Partition &p);

// "24*O[3] + 48*O[2,1]", largest partition first; zero prints as "0".
std::string to_string(const SchubertClass &c);

// Schur polynomial s_p in the mu variables of ctx (bialternant formula).
Poly schur_polynomial(const Partition &p, Context ctx);

// Coefficients c with p = sum c_lambda s_lambda(mu). p must not involve
// w1, w2 (ContextMismatch) and must be symmetric in the mu (NotSymmetric).
// Computed as the coefficient of x^(lambda + delta) in p * Vandermonde.
std::map<Partition, Rational> schur_expand(const Poly &p);

// How the mu variables map to Chern roots x of the tautological sub-bundle
// before expanding in Schur polynomials.
enum class ChernRootSign { same, negated };

// Reproduces the published quartic-pencil table with positive
// coefficients: mu_j -> -x_j, Omega_lambda = s_lambda(x) restricted to the box.
inline constexpr ChernRootSign kSchubertConvention = ChernRootSign::negated;

// Expands a symmetric polynomial in mu into Schubert classes of
// Gr(r+1, d+1), dropping partitions with lambda_1 > d - r. Throws
// NonIntegral when a surviving coefficient is not an integer.
SchubertClass schur_reduce(const Poly &p, int r, int d,
                           ChernRootSign convention = kSchubertConvention);

// Product in the Chow ring of Gr(r+1, d+1).
SchubertClass schubert_product(const SchubertClass &a, const SchubertClass &b);

// (a_r - r, ..., a_1 - 1, a_0)
Partition partition_from_sequence(const VanishingSequence &seq);

// Whether the product of the Schubert classes of the profile's sequences
// is nonzero. Throws WeightMismatch on an incomplete profile.
bool profile_exists(const RamificationProfile &profile);

} // namespace orbitcalc

#endif
