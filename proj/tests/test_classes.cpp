#include <doctest.h>

#include <orbitcalc/classes.hpp>
#include <orbitcalc/errors.hpp>
#include <orbitcalc/special.hpp>

#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace orbitcalc;

namespace
{

Poly P(int r, const char *text)
{
    return parse_poly(Context::for_rank(r), text);
}

VanishingSequence S(std::vector<int> a)
{
    return VanishingSequence(std::move(a));
}

RamificationProfile profile(int r, int d, const char *text)
{
    return RamificationProfile(r, d, parse_profile_points(text));
}

std::string schubert_of(int r, int d, const char *text)
{
    return to_string(nonequivariant_class(weighted_orbit_class(profile(r, d, text))));
}

} // namespace

TEST_CASE("phi")
{
    CHECK(phi(S({0}), 0, 2) == P(0, "w1 + w2 - mu0") * P(0, "2*w2 - mu0"));
    CHECK(phi(S({0}), 0, 1) == P(0, "w2 - mu0"));
    CHECK(phi(S({0, 1, 2}), 2, 2) == P(2, "1"));
    CHECK(phi(S({1}), 0, 1) == P(0, "w1 - mu0"));
    CHECK_THROWS_AS(phi(S({0, 5}), 1, 4), InvalidSequence);
    CHECK_THROWS_AS(phi(S({0}), 1, 4), InvalidSequence);
}

TEST_CASE("psi")
{
    CHECK(psi(S({0}), 0, 2) == P(0, "2*w1 + 2*w2 - 2*mu0") * P(0, "w2 - w1"));
    CHECK(psi(S({0, 4}), 1, 4).is_zero());
    CHECK(psi(S({0}), 0, 1) == P(0, "w2 - w1"));

    gen::Rng rng(3);
    for (int iter = 0; iter < 20; ++iter) {
        const int r = rng.uniform(0, 2);
        const int d = rng.uniform(r + 1, 6);
        const auto seqs = gen::ramified_sequences(r, d, 100);
        const Poly p = psi(rng.pick(seqs), r, d);
        if (p.is_zero()) {
            continue;
        }
        CHECK(symmetry_check(p, SymmetryGroup::omega_swap) == Symmetry::antisymmetric);
        CHECK(symmetry_check(p, SymmetryGroup::mu_permutations) == Symmetry::symmetric);
    }
}

TEST_CASE("quartic pencil classes")
{
    CHECK(schubert_of(1, 4, "(0,2)x6") == "24*O[3] + 48*O[2,1]");
    CHECK(schubert_of(1, 4, "(0,3),(0,2)x4") == "16*O[3] + 40*O[2,1]");
    CHECK(schubert_of(1, 4, "(0,4),(0,2)x3") == "12*O[3] + 24*O[2,1]");
    CHECK(schubert_of(1, 4, "(0,3)x2,(0,2)x2") == "8*O[3] + 32*O[2,1]");
    CHECK(schubert_of(1, 4, "(0,3)x3") == "24*O[2,1]");
    CHECK(schubert_of(1, 4, "(0,4),(0,3),(0,2)") == "4*O[3] + 16*O[2,1]");
    CHECK(schubert_of(1, 4, "(0,3)x2,(1,2)") == "8*O[3] + 20*O[2,1]");
    CHECK(schubert_of(1, 4, "(0,2)x2,(1,4)") == "8*O[3] + 8*O[2,1]");
    CHECK(schubert_of(1, 4, "(0,2)x2,(2,3)") == "12*O[2,1]");
}

TEST_CASE("weighted orbit class edge cases")
{
    const auto flat = weighted_orbit_class(profile(1, 4, "(0,4)x2"));
    CHECK(flat.payload.is_zero());
    CHECK(flat.possibly_infinite_stabiliser);
    CHECK(nonequivariant_class(flat).is_zero());

    const auto cubic = weighted_orbit_class(profile(0, 3, "(1)x3"));
    CHECK(cubic.payload == P(0, "6"));
    CHECK_FALSE(cubic.possibly_infinite_stabiliser);

    CHECK_THROWS_AS(weighted_orbit_class(profile(1, 4, "(0,2)x5")), WeightMismatch);
    CHECK_THROWS_AS(weighted_orbit_class(profile(0, 2, "(1)x2")), CodimNegative);
    CHECK_THROWS_AS(weighted_orbit_class(profile(1, 2, "(0,2)")), CodimNegative);

    // an existing profile with at most two points gives zero: one point
    // must be the full flex, two points must be complementary
    gen::Rng rng(9);
    for (int iter = 0; iter < 30; ++iter) {
        const int r = rng.uniform(0, 2);
        const int d = rng.uniform(r + 1, 7);
        const int n = (r + 1) * (d - r);
        if (n < 3) {
            continue;
        }
        const auto seqs = gen::ramified_sequences(r, d, n);
        for (const auto &a : seqs) {
            if (a.weight() == n) {
                CHECK(weighted_orbit_class(RamificationProfile(r, d, {a})).payload.is_zero());
            }
        }
        const auto a = rng.pick(seqs);
        for (const auto &b : seqs) {
            if (a.weight() + b.weight() != n) {
                continue;
            }
            const RamificationProfile p(r, d, {a, b});
            CHECK(profile_exists(p) == (b == complementary(a, d)));
            if (profile_exists(p)) {
                CHECK(weighted_orbit_class(p).payload.is_zero());
            }
        }
    }
}

TEST_CASE("class invariants on random profiles")
{
    gen::Rng rng(27);
    OrbitClassCalculator calc;
    for (int iter = 0; iter < 60; ++iter) {
        const int r = rng.uniform(0, 2);
        const int d = rng.uniform(r + 1, r == 2 ? 5 : 7);
        if ((r + 1) * (d - r) < 3) {
            continue;
        }
        const RamificationProfile p = gen::random_profile(rng, r, d);
        const EquivariantClass c = calc.weighted_orbit_class(p);
        CHECK(invariant_violations(c).empty());
        CHECK_NOTHROW(nonequivariant_class(c));
        CHECK(c.payload == weighted_orbit_class(p).payload);
    }
}

TEST_CASE("rank zero classes are pre-degrees")
{
    gen::Rng rng(33);
    for (int iter = 0; iter < 30; ++iter) {
        const int d = rng.uniform(3, 9);
        const RamificationProfile p = gen::random_profile(rng, 0, d);
        std::vector<int> m;
        for (const auto &s : p.points()) {
            m.push_back(s.weight());
        }
        const SchubertClass c = nonequivariant_class(weighted_orbit_class(p));
        CHECK(c.coefficient(make_partition({d - 3})) == oracle::brute_predegree(m));
        CHECK(c.terms().size() <= 1);
    }
}

TEST_CASE("classes depend only on the profile")
{
    // the two pencils have profile (0,2)x6 but are not related by GL(2)
    const auto a = ramification_profile(LinearSeries({BinaryForm({1, 0, 0, 0, 1}), BinaryForm({0, 1, 1, 0, 0})}));
    const auto b = ramification_profile(LinearSeries({BinaryForm({1, 0, 0, 0, 3}), BinaryForm({0, 1, 0, 2, 0})}));
    REQUIRE(a.profile == b.profile);
    CHECK(weighted_orbit_class(a.profile).payload == weighted_orbit_class(b.profile).payload);
}
