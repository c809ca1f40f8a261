#ifndef ORBITCALC_CLASSES_HPP
#define ORBITCALC_CLASSES_HPP

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include <orbitcalc/poly.hpp>
#include <orbitcalc/profile.hpp>
#include <orbitcalc/schubert.hpp>

namespace orbitcalc
{

// prod_j prod_{i not in seq} ((d-i) w1 + i w2 - mu_j)
Poly phi(const VanishingSequence &seq, int r, int d);

// phi(mu; w1, w2) - phi(mu; w2, w1)
Poly psi(const VanishingSequence &seq, int r, int d);

// Stabiliser-weighted orbit class |Gamma| [Orb] as a polynomial in
// mu_0..mu_r, w1, w2 of degree (r+1)(d-r) - 3.
struct EquivariantClass {
    int r;
    int d;
    Poly payload;
    // Set for profiles with at most two points. Such series are fixed by a
    // one-dimensional torus, so the finite-stabiliser hypothesis fails; the
    // formula still evaluates (to zero).
    bool possibly_infinite_stabiliser = false;
};

// Memoizes psi per sequence; not thread-safe, use one per thread.
class OrbitClassCalculator
{
public:
    const Poly &psi(const VanishingSequence &seq, int r, int d);

    // sum_B psi_a(b) + (2 - |B|) psi_(0..r)
    Poly numerator(const RamificationProfile &profile);

    // Throws CodimNegative when (r+1)(d-r) < 3, WeightMismatch when the
    // profile is incomplete, NotDivisible if the numerator is not a
    // multiple of (w1 - w2)^3.
    EquivariantClass weighted_orbit_class(const RamificationProfile &profile);

private:
    std::map<std::tuple<int, int, VanishingSequence>, Poly> psi_cache_;
};

EquivariantClass weighted_orbit_class(const RamificationProfile &profile);

// Sets w1 = w2 = 0 and expands in the Schubert basis of Gr(r+1, d+1).
SchubertClass nonequivariant_class(const EquivariantClass &cls);

// Empty when the class is symmetric in the mu and under w1 <-> w2,
// homogeneous of degree (r+1)(d-r) - 3 (or zero) and integral.
std::vector<std::string> invariant_violations(const EquivariantClass &cls);

} // namespace orbitcalc

#endif
