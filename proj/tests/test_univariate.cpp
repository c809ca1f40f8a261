#include <doctest.h>

#include <orbitcalc/errors.hpp>
#include <orbitcalc/upoly.hpp>

#include "support/generators.hpp"

using namespace orbitcalc;

namespace
{

UPoly U(std::vector<long> c)
{
    std::vector<Rational> q(c.begin(), c.end());
    return UPoly(std::move(q));
}

UPoly random_upoly(gen::Rng &rng, int degree)
{
    std::vector<Rational> c(static_cast<std::size_t>(degree + 1));
    for (auto &x : c) {
        x = rng.rational(6, 3);
    }
    c.back() = rng.nonzero_rational(6, 3);
    return UPoly(std::move(c));
}

} // namespace

TEST_CASE("basic operations")
{
    CHECK(U({0, 0, 0}).is_zero());
    CHECK(U({1, 2, 0}).degree() == 1);
    CHECK(U({1, 1}) * U({-1, 1}) == U({-1, 0, 1}));
    CHECK(U({1, 2, 3}).evaluate(2) == 17);
    CHECK(U({1, 2, 3}).derivative() == U({2, 6}));
    CHECK(U({0, 0, 0, 1}).divided_derivative(2) == U({0, 3}));
    CHECK(to_string(U({-2, 0, 1})) == "t^2 - 2");
}

TEST_CASE("division and gcd")
{
    auto [q, r] = divmod(U({-1, 0, 1}), U({-1, 1}));
    CHECK(q == U({1, 1}));
    CHECK(r.is_zero());
    CHECK(gcd(U({-1, 0, 1}), U({-1, 0, 0, 1})) == U({-1, 1}));
    CHECK(gcd(UPoly(), UPoly()).is_zero());
    CHECK(gcd(U({2, 4}), UPoly()) == UPoly(std::vector<Rational>{Rational(1, 2), 1}));
    CHECK_THROWS_AS(divmod(U({1}), UPoly()), InternalError);

    const auto inv = inverse_mod(U({0, 1}), U({-2, 0, 1}));
    REQUIRE(inv.has_value());
    CHECK(divmod(*inv * U({0, 1}), U({-2, 0, 1})).second == U({1}));
    CHECK_FALSE(inverse_mod(U({0, 1}), U({0, 0, 1})).has_value());

    gen::Rng rng(21);
    for (int iter = 0; iter < 40; ++iter) {
        const UPoly a = random_upoly(rng, rng.uniform(0, 5));
        const UPoly b = random_upoly(rng, rng.uniform(0, 4));
        const UPoly g = random_upoly(rng, rng.uniform(0, 2));
        auto [qq, rr] = divmod(a, b);
        CHECK(qq * b + rr == a);
        CHECK(rr.degree() < b.degree());
        const UPoly common = gcd(a * g, b * g);
        CHECK(divmod(common, g.monic()).second.is_zero());
    }
}

TEST_CASE("squarefree decomposition")
{
    // t^2 (t - 1)^3 (t + 2)
    const UPoly f = U({0, 1}) * U({0, 1}) * U({-1, 1}) * U({-1, 1}) * U({-1, 1}) * U({2, 1}) * Rational(3);
    const auto parts = squarefree_decomposition(f);
    REQUIRE(parts.size() == 4);
    CHECK(parts[1] == U({2, 1}));
    CHECK(parts[2] == U({0, 1}));
    CHECK(parts[3] == U({-1, 1}));
    CHECK_FALSE(is_squarefree(f));
    CHECK(is_squarefree(U({-2, 0, 1})));

    gen::Rng rng(8);
    for (int iter = 0; iter < 30; ++iter) {
        UPoly g = U({1});
        for (int k = 0; k < 4; ++k) {
            const UPoly factor = random_upoly(rng, rng.uniform(1, 2));
            for (int e = rng.uniform(1, 3); e > 0; --e) {
                g = g * factor;
            }
        }
        const auto ps = squarefree_decomposition(g);
        UPoly prod = UPoly::constant(g.leading());
        for (std::size_t m = 1; m < ps.size(); ++m) {
            CHECK(is_squarefree(ps[m]));
            for (std::size_t e = 0; e < m; ++e) {
                prod = prod * ps[m];
            }
            for (std::size_t n = m + 1; n < ps.size(); ++n) {
                CHECK(gcd(ps[m], ps[n]) == U({1}));
            }
        }
        CHECK(prod == g);
    }
}
