#include <doctest.h>

#include <orbitcalc/errors.hpp>
#include <orbitcalc/poly.hpp>

#include "support/generators.hpp"

using namespace orbitcalc;

namespace
{

const Context k2 = Context::for_rank(1);

Poly P(const char *text, Context ctx = k2)
{
    return parse_poly(ctx, text);
}

Poly random_poly(gen::Rng &rng, Context ctx, int terms, int max_exp)
{
    Poly::TermMap m;
    for (int i = 0; i < terms; ++i) {
        Exponents e(ctx.nvars());
        for (auto &x : e) {
            x = static_cast<std::uint32_t>(rng.uniform(0, max_exp));
        }
        m[e] += rng.rational(9, 4);
    }
    return Poly::from_terms(ctx, std::move(m));
}

} // namespace

TEST_CASE("rational parsing")
{
    CHECK(parse_rational("7") == 7);
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK(to_string(parse_rational("4/2")) == "2");
    CHECK_THROWS_AS(parse_rational("4/-2"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK(to_string(parse_rational("10/4")) == "5/2");
}

TEST_CASE("arithmetic examples")
{
    CHECK(P("mu0 + w1") + P("-w1") == P("mu0"));
    CHECK(P("w1 - w2") * P("w1 + w2") == P("w1^2 - w2^2"));
    CHECK(arith(P("mu0"), P("mu1"), ArithKind::sub) == P("mu0 - mu1"));
    CHECK((P("w1 + 1")).pow(3) == P("w1^3 + 3*w1^2 + 3*w1 + 1"));
    CHECK(P("0").is_zero());
    CHECK_THROWS_AS(P("mu0") + P("mu0", Context(3)), ContextMismatch);
}

TEST_CASE("ring axioms on random polynomials")
{
    gen::Rng rng(11);
    for (int iter = 0; iter < 60; ++iter) {
        const Context ctx = Context::for_rank(rng.uniform(0, 2));
        const Poly a = random_poly(rng, ctx, 5, 3);
        const Poly b = random_poly(rng, ctx, 5, 3);
        const Poly c = random_poly(rng, ctx, 5, 3);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        CHECK((a - a).is_zero());
        CHECK(a - b == a + (-b));
    }
}

TEST_CASE("exact quotient")
{
    CHECK(exact_quotient(P("w1^2 - w2^2"), P("w1 - w2")) == P("w1 + w2"));
    CHECK(exact_quotient(P("mu0^2*w1 - mu0^2*w2"), P("w1 - w2")) == P("mu0^2"));
    CHECK(exact_quotient(P("mu0^2 - mu1^2"), P("mu0 + mu1")) == P("mu0 - mu1"));
    CHECK(exact_quotient(P("6*w1"), P("3")) == P("2*w1"));
    CHECK_THROWS_AS(exact_quotient(P("w1^2 + w2^2"), P("w1 - w2")), NotDivisible);
    CHECK_THROWS_AS(exact_quotient(P("mu0"), P("mu1")), NotDivisible);
    CHECK_THROWS_AS(exact_quotient(P("mu0"), P("0")), NotDivisible);

    gen::Rng rng(5);
    for (int iter = 0; iter < 40; ++iter) {
        const Poly q = random_poly(rng, k2, 6, 3);
        const Poly den = iter % 2 == 0 ? P("w1 - w2") : random_poly(rng, k2, 3, 2);
        if (den.is_zero()) {
            continue;
        }
        CHECK(exact_quotient(q * den, den) == q);
        if (iter % 2 == 0) {
            CHECK(divide_by_omega_difference(q * den) == q);
        }
    }
}

TEST_CASE("substitution")
{
    const Poly p = P("mu0^2 + mu0*w1");
    CHECK(substitute(p, {{k2.mu(0), P("mu0")}}) == p);
    CHECK(substitute(p, {{k2.mu(0), P("w2 + 1")}}) == P("w2^2 + 2*w2 + 1 + w1*w2 + w1"));
    // simultaneous, not sequential
    CHECK(substitute(P("mu0 - mu1"), {{k2.mu(0), P("mu1")}, {k2.mu(1), P("mu0")}}) == P("mu1 - mu0"));
    CHECK(swap_omegas(P("w1^2*mu1 + w2")) == P("w2^2*mu1 + w1"));
    const std::size_t perm[] = {1, 0};
    CHECK(permute_mu(P("mu0^2*mu1"), perm) == P("mu1^2*mu0"));
}

TEST_CASE("symmetry and homogeneity")
{
    CHECK(symmetry_check(P("w1 - w2"), SymmetryGroup::omega_swap) == Symmetry::antisymmetric);
    CHECK(symmetry_check(P("w1*w2"), SymmetryGroup::omega_swap) == Symmetry::symmetric);
    CHECK(symmetry_check(P("w1"), SymmetryGroup::omega_swap) == Symmetry::neither);
    CHECK(symmetry_check(P("mu0 + mu1"), SymmetryGroup::mu_permutations) == Symmetry::symmetric);
    CHECK(symmetry_check(P("mu0 - mu1"), SymmetryGroup::mu_permutations) == Symmetry::antisymmetric);
    CHECK(symmetry_check(P("0"), SymmetryGroup::mu_permutations) == Symmetry::symmetric);
    const Context k3 = Context::for_rank(2);
    CHECK(symmetry_check(P("mu0*mu1 + mu2", k3), SymmetryGroup::mu_permutations) == Symmetry::neither);

    CHECK(is_homogeneous(P("mu0*w1 + w2^2")) == Homogeneity{Homogeneity::Kind::homogeneous, 2});
    CHECK(is_homogeneous(P("mu0 + 1")).kind == Homogeneity::Kind::mixed);
    CHECK(is_homogeneous(P("0")).kind == Homogeneity::Kind::zero);
    CHECK(is_homogeneous(P("5")) == Homogeneity{Homogeneity::Kind::homogeneous, 0});
    CHECK(has_integer_coefficients(P("3*mu0 - 2")));
    CHECK_FALSE(has_integer_coefficients(P("1/2*mu0")));
}

TEST_CASE("serialization")
{
    CHECK(to_string(P("0")) == "0");
    CHECK(to_string(P("w1 + mu0")) == "mu0 + w1");
    CHECK(to_string(P("-1/2*w2 + 3 - mu1^2*mu0")) == "-mu0*mu1^2 - 1/2*w2 + 3");
    CHECK(to_string(P("1*mu0 - 1*w1")) == "mu0 - w1");
    CHECK_THROWS_AS(P("mu0 +"), ParseError);
    CHECK_THROWS_AS(P("mu7"), ParseError);
    CHECK_THROWS_AS(P("x"), ParseError);

    gen::Rng rng(3);
    for (int iter = 0; iter < 50; ++iter) {
        const Context ctx = Context::for_rank(rng.uniform(0, 3));
        const Poly p = random_poly(rng, ctx, 7, 4);
        const std::string text = to_string(p);
        CHECK(parse_poly(ctx, text) == p);
        CHECK(to_string(parse_poly(ctx, text)) == text);
    }
}
