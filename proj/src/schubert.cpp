#include <orbitcalc/schubert.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include <orbitcalc/errors.hpp>

namespace orbitcalc
{

Partition make_partition(std::vector<int> parts)
{
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0 || (i > 0 && parts[i] > parts[i - 1])) {
            throw InvalidSequence("not a partition");
        }
    }
    while (!parts.empty() && parts.back() == 0) {
        parts.pop_back();
    }
    return parts;
}

int size(const Partition &p)
{
    return std::accumulate(p.begin(), p.end(), 0);
}

bool fits_box(const Partition &p, int rows, int cols)
{
    return static_cast<int>(p.size()) <= rows && (p.empty() || p.front() <= cols);
}

std::string to_string(const Partition &p)
{
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += std::to_string(p[i]);
    }
    return out;
}

Integer SchubertClass::coefficient(const Partition &p) const
{
    auto it = terms_.find(p);
    return it == terms_.end() ? Integer(0) : it->second;
}

void SchubertClass::add(const Partition &p, const Integer &coef)
{
    if (!fits_box(p, r_ + 1, d_ - r_)) {
        throw InvalidSequence("partition (" + to_string(p) + ") does not fit the "
                              + std::to_string(r_ + 1) + "x" + std::to_string(d_ - r_) + " box");
    }
    if (coef == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(p, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

SchubertClass &SchubertClass::operator+=(const SchubertClass &o)
{
    if (o.r_ != r_ || o.d_ != d_) {
        throw ContextMismatch("Schubert classes on different Grassmannians");
    }
    for (const auto &[p, c] : o.terms_) {
        add(p, c);
    }
    return *this;
}

SchubertClass &SchubertClass::operator*=(const Integer &k)
{
    if (k == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &kv : terms_) {
        kv.second *= k;
    }
    return *this;
}

SchubertClass schubert_basis(int r, int d, const Partition &p)
{
    SchubertClass c(r, d);
    c.add(p, Integer(1));
    return c;
}

std::string to_string(const SchubertClass &c)
{
    if (c.is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (auto it = c.terms().rbegin(); it != c.terms().rend(); ++it) {
        const Integer &k = it->second;
        if (first) {
            if (k < 0) {
                os << '-';
            }
        } else {
            os << (k < 0 ? " - " : " + ");
        }
        first = false;
        os << Integer(abs(k)).get_str() << "*O[" << to_string(it->first) << ']';
    }
    return os.str();
}

namespace
{

Poly vandermonde(Context ctx)
{
    Poly v = Poly::constant(ctx, Rational(1));
    const std::size_t n = ctx.mu_count();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            v *= Poly::variable(ctx, ctx.mu(i)) - Poly::variable(ctx, ctx.mu(j));
        }
    }
    return v;
}

int permutation_sign(const std::vector<std::size_t> &perm)
{
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        for (std::size_t j = i + 1; j < perm.size(); ++j) {
            if (perm[i] > perm[j]) {
                sign = -sign;
            }
        }
    }
    return sign;
}

Poly negate_variables(const Poly &p)
{
    Poly::TermMap out;
    for (const auto &[e, c] : p.terms()) {
        out.emplace(e, total_degree(e) % 2 == 0 ? c : Rational(-c));
    }
    return Poly::from_terms(p.context(), std::move(out));
}

// Combination of Schur polynomials, mu context of rank r.
Poly schur_combination(const SchubertClass &c)
{
    const Context ctx = Context::for_rank(c.r());
    Poly out(ctx);
    for (const auto &[p, k] : c.terms()) {
        out += schur_polynomial(p, ctx) * Rational(k);
    }
    return out;
}

SchubertClass truncate_to_box(const std::map<Partition, Rational> &expansion, int r, int d)
{
    SchubertClass out(r, d);
    for (const auto &[lambda, c] : expansion) {
        if (!fits_box(lambda, r + 1, d - r)) {
            continue;
        }
        if (!is_integer(c)) {
            throw NonIntegral("coefficient " + to_string(c) + " of O[" + to_string(lambda)
                              + "] is not an integer");
        }
        out.add(lambda, c.get_num());
    }
    return out;
}

} // namespace

Poly schur_polynomial(const Partition &p, Context ctx)
{
    const std::size_t n = ctx.mu_count();
    if (p.size() > n) {
        return Poly(ctx);
    }
    std::vector<std::uint32_t> shifted(n);
    for (std::size_t i = 0; i < n; ++i) {
        const int part = i < p.size() ? p[i] : 0;
        shifted[i] = static_cast<std::uint32_t>(part + static_cast<int>(n - 1 - i));
    }
    Poly::TermMap alternant;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        Exponents e(ctx.nvars(), 0);
        for (std::size_t i = 0; i < n; ++i) {
            e[ctx.mu(perm[i])] = shifted[i];
        }
        alternant.emplace(std::move(e), Rational(permutation_sign(perm)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return exact_quotient(Poly::from_terms(ctx, std::move(alternant)), vandermonde(ctx));
}

std::map<Partition, Rational> schur_expand(const Poly &p)
{
    const Context ctx = p.context();
    for (const auto &kv : p.terms()) {
        if (kv.first[ctx.w1()] != 0 || kv.first[ctx.w2()] != 0) {
            throw ContextMismatch("schur_expand expects a polynomial in the mu variables only");
        }
    }
    if (symmetry_check(p, SymmetryGroup::mu_permutations) != Symmetry::symmetric) {
        throw NotSymmetric("polynomial is not symmetric in the mu variables: " + to_string(p));
    }
    const std::size_t n = ctx.mu_count();
    const Poly product = p * vandermonde(ctx);
    std::map<Partition, Rational> out;
    for (const auto &[e, c] : product.terms()) {
        bool strictly_decreasing = true;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (e[i] <= e[i + 1]) {
                strictly_decreasing = false;
                break;
            }
        }
        if (!strictly_decreasing) {
            continue;
        }
        std::vector<int> parts(n);
        for (std::size_t i = 0; i < n; ++i) {
            parts[i] = static_cast<int>(e[i]) - static_cast<int>(n - 1 - i);
        }
        out.emplace(make_partition(std::move(parts)), c);
    }
    return out;
}

SchubertClass schur_reduce(const Poly &p, int r, int d, ChernRootSign convention)
{
    if (p.context().mu_count() != static_cast<std::size_t>(r + 1)) {
        throw ContextMismatch("polynomial context does not match rank r");
    }
    const Poly in_roots = convention == ChernRootSign::negated ? negate_variables(p) : p;
    return truncate_to_box(schur_expand(in_roots), r, d);
}

SchubertClass schubert_product(const SchubertClass &a, const SchubertClass &b)
{
    if (a.r() != b.r() || a.d() != b.d()) {
        throw ContextMismatch("Schubert classes on different Grassmannians");
    }
    if (a.is_zero() || b.is_zero()) {
        return SchubertClass(a.r(), a.d());
    }
    return truncate_to_box(schur_expand(schur_combination(a) * schur_combination(b)), a.r(), a.d());
}

Partition partition_from_sequence(const VanishingSequence &seq)
{
    std::vector<int> parts;
    for (int i = seq.rank(); i >= 0; --i) {
        parts.push_back(seq[static_cast<std::size_t>(i)] - i);
    }
    return make_partition(std::move(parts));
}

bool profile_exists(const RamificationProfile &profile)
{
    profile.require_complete();
    const int r = profile.r();
    const int d = profile.d();
    SchubertClass acc = schubert_basis(r, d, Partition{});
    for (const auto &seq : profile.points()) {
        acc = schubert_product(acc, schubert_basis(r, d, partition_from_sequence(seq)));
        if (acc.is_zero()) {
            return false;
        }
    }
    return !acc.is_zero();
}

} // namespace orbitcalc
