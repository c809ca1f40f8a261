#include <orbitcalc/classes.hpp>

#include <orbitcalc/errors.hpp>

namespace orbitcalc
{

namespace
{

void check_sequence(const VanishingSequence &seq, int r, int d)
{
    if (r < 0 || d < r) {
        throw InvalidSequence("need 0 <= r <= d");
    }
    seq.check_fits(r, d);
}

// g(mu_j) = prod_{i not in seq} ((d-i) w1 + i w2 - mu_j)
Poly factor_for(const VanishingSequence &seq, int d, Context ctx, std::size_t j)
{
    const Poly w1 = Poly::variable(ctx, ctx.w1());
    const Poly w2 = Poly::variable(ctx, ctx.w2());
    const Poly mu = Poly::variable(ctx, ctx.mu(j));
    Poly g = Poly::constant(ctx, Rational(1));
    std::size_t next = 0;
    for (int i = 0; i <= d; ++i) {
        if (next < seq.orders().size() && seq[next] == i) {
            ++next;
            continue;
        }
        g *= w1 * Rational(d - i) + w2 * Rational(i) - mu;
    }
    return g;
}

} // namespace

Poly phi(const VanishingSequence &seq, int r, int d)
{
    check_sequence(seq, r, d);
    const Context ctx = Context::for_rank(r);
    Poly out = Poly::constant(ctx, Rational(1));
    for (std::size_t j = 0; j < ctx.mu_count(); ++j) {
        out *= factor_for(seq, d, ctx, j);
    }
    return out;
}

Poly psi(const VanishingSequence &seq, int r, int d)
{
    const Poly p = phi(seq, r, d);
    return p - swap_omegas(p);
}

const Poly &OrbitClassCalculator::psi(const VanishingSequence &seq, int r, int d)
{
    auto key = std::make_tuple(r, d, seq);
    auto it = psi_cache_.find(key);
    if (it == psi_cache_.end()) {
        it = psi_cache_.emplace(std::move(key), orbitcalc::psi(seq, r, d)).first;
    }
    return it->second;
}

Poly OrbitClassCalculator::numerator(const RamificationProfile &profile)
{
    const int r = profile.r();
    const int d = profile.d();
    Poly num(Context::for_rank(r));
    const auto &pts = profile.points();
    for (std::size_t i = 0; i < pts.size();) {
        std::size_t j = i;
        while (j < pts.size() && pts[j] == pts[i]) {
            ++j;
        }
        num += psi(pts[i], r, d) * Rational(static_cast<long>(j - i));
        i = j;
    }
    const long generic_coef = 2 - static_cast<long>(pts.size());
    if (generic_coef != 0) {
        num += psi(VanishingSequence::generic(r), r, d) * Rational(generic_coef);
    }
    return num;
}

EquivariantClass OrbitClassCalculator::weighted_orbit_class(const RamificationProfile &profile)
{
    const int r = profile.r();
    const int d = profile.d();
    if (profile.expected_weight() < 3) {
        throw CodimNegative("(r+1)(d-r) = " + std::to_string(profile.expected_weight())
                            + " < 3: the orbit class would have negative codimension");
    }
    profile.require_complete();

    Poly q = numerator(profile);
    for (int k = 0; k < 3; ++k) {
        q = divide_by_omega_difference(q);
    }
    return {r, d, std::move(q), profile.point_count() <= 2};
}

EquivariantClass weighted_orbit_class(const RamificationProfile &profile)
{
    return OrbitClassCalculator().weighted_orbit_class(profile);
}

SchubertClass nonequivariant_class(const EquivariantClass &cls)
{
    const Context ctx = cls.payload.context();
    const Assignment zero{{ctx.w1(), Poly(ctx)}, {ctx.w2(), Poly(ctx)}};
    return schur_reduce(substitute(cls.payload, zero), cls.r, cls.d);
}

std::vector<std::string> invariant_violations(const EquivariantClass &cls)
{
    std::vector<std::string> out;
    const Poly &p = cls.payload;
    if (symmetry_check(p, SymmetryGroup::mu_permutations) != Symmetry::symmetric) {
        out.emplace_back("not symmetric in the mu variables");
    }
    if (symmetry_check(p, SymmetryGroup::omega_swap) != Symmetry::symmetric) {
        out.emplace_back("not symmetric under w1 <-> w2");
    }
    const int expected = (cls.r + 1) * (cls.d - cls.r) - 3;
    const Homogeneity h = is_homogeneous(p);
    if (h.kind == Homogeneity::Kind::mixed) {
        out.emplace_back("not homogeneous");
    } else if (h.kind == Homogeneity::Kind::homogeneous && static_cast<int>(h.degree) != expected) {
        out.emplace_back("degree " + std::to_string(h.degree) + " differs from "
                         + std::to_string(expected));
    }
    if (!has_integer_coefficients(p)) {
        out.emplace_back("non-integer coefficient");
    }
    return out;
}

} // namespace orbitcalc
