#include <orbitcalc/poly.hpp>

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include <orbitcalc/errors.hpp>

namespace orbitcalc
{

std::string Context::variable_name(std::size_t index) const
{
    if (index < mu_count_) {
        return "mu" + std::to_string(index);
    }
    if (index == w1()) {
        return "w1";
    }
    if (index == w2()) {
        return "w2";
    }
    throw ContextMismatch("variable index " + std::to_string(index) + " out of range");
}

unsigned total_degree(const Exponents &e)
{
    return std::accumulate(e.begin(), e.end(), 0u);
}

Poly Poly::constant(Context ctx, const Rational &c)
{
    Poly p(ctx);
    if (c != 0) {
        p.terms_.emplace(Exponents(ctx.nvars(), 0), c);
    }
    return p;
}

Poly Poly::variable(Context ctx, std::size_t index)
{
    if (index >= ctx.nvars()) {
        throw ContextMismatch("variable index " + std::to_string(index) + " out of range");
    }
    Poly p(ctx);
    Exponents e(ctx.nvars(), 0);
    e[index] = 1;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

Poly Poly::from_terms(Context ctx, TermMap terms)
{
    Poly p(ctx);
    for (auto it = terms.begin(); it != terms.end();) {
        if (it->first.size() != ctx.nvars()) {
            throw ContextMismatch("exponent vector has wrong length");
        }
        if (it->second == 0) {
            it = terms.erase(it);
        } else {
            ++it;
        }
    }
    p.terms_ = std::move(terms);
    return p;
}

Rational Poly::coefficient(const Exponents &e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::check_context(const Poly &other) const
{
    if (!(ctx_ == other.ctx_)) {
        throw ContextMismatch("polynomials live in different variable contexts");
    }
}

void Poly::add_scaled(const Poly &other, const Rational &scale)
{
    check_context(other);
    auto hint = terms_.begin();
    for (const auto &[e, c] : other.terms_) {
        // other is iterated in the same order as terms_, so the hint is
        // usually the exact insertion position.
        hint = terms_.lower_bound(e);
        if (hint != terms_.end() && hint->first == e) {
            hint->second += scale * c;
            if (hint->second == 0) {
                hint = terms_.erase(hint);
            }
        } else {
            hint = terms_.emplace_hint(hint, e, scale * c);
        }
    }
}

Poly &Poly::operator+=(const Poly &other)
{
    add_scaled(other, Rational(1));
    return *this;
}

Poly &Poly::operator-=(const Poly &other)
{
    add_scaled(other, Rational(-1));
    return *this;
}

Poly operator*(const Poly &a, const Poly &b)
{
    a.check_context(b);
    Poly out(a.ctx_);
    if (a.is_zero() || b.is_zero()) {
        return out;
    }
    const std::size_t n = a.ctx_.nvars();
    Exponents e(n);
    Rational prod;
    for (const auto &[ea, ca] : a.terms_) {
        for (const auto &[eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < n; ++i) {
                e[i] = ea[i] + eb[i];
            }
            mpq_mul(prod.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
            auto [it, inserted] = out.terms_.try_emplace(e, prod);
            if (!inserted) {
                it->second += prod;
            }
        }
    }
    std::erase_if(out.terms_, [](const auto &kv) { return kv.second == 0; });
    return out;
}

Poly &Poly::operator*=(const Poly &other)
{
    *this = *this * other;
    return *this;
}

Poly &Poly::operator*=(const Rational &c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &kv : terms_) {
        kv.second *= c;
    }
    return *this;
}

Poly Poly::operator-() const
{
    Poly out = *this;
    for (auto &kv : out.terms_) {
        kv.second = -kv.second;
    }
    return out;
}

Poly Poly::pow(unsigned n) const
{
    Poly result = constant(ctx_, Rational(1));
    Poly base = *this;
    while (n > 0) {
        if (n & 1u) {
            result *= base;
        }
        n >>= 1;
        if (n > 0) {
            base *= base;
        }
    }
    return result;
}

Poly arith(const Poly &a, const Poly &b, ArithKind kind)
{
    switch (kind) {
        case ArithKind::add:
            return a + b;
        case ArithKind::sub:
            return a - b;
        case ArithKind::mul:
            return a * b;
    }
    throw InternalError("unknown arithmetic kind");
}

namespace
{

// Exact quotient by (w1 - c*w2), synthetic division in w1 over the
// remaining variables.
Poly divide_by_linear_omega(const Poly &num, const Rational &c)
{
    const Context ctx = num.context();
    const std::size_t iw1 = ctx.w1();
    const std::size_t iw2 = ctx.w2();
    if (num.is_zero()) {
        return num;
    }

    // Coefficients of num as a polynomial in w1; index k holds the terms
    // of w1-degree k with the w1 exponent cleared.
    std::vector<Poly::TermMap> coeff;
    for (const auto &[e, q] : num.terms()) {
        const std::size_t k = e[iw1];
        if (coeff.size() <= k) {
            coeff.resize(k + 1);
        }
        Exponents stripped = e;
        stripped[iw1] = 0;
        coeff[k].emplace(std::move(stripped), q);
    }
    const std::size_t n = coeff.size() - 1;

    auto times_cw2 = [&](const Poly::TermMap &t) {
        Poly::TermMap out;
        for (const auto &[e, q] : t) {
            Exponents shifted = e;
            ++shifted[iw2];
            out.emplace(std::move(shifted), c * q);
        }
        return Poly::from_terms(ctx, std::move(out));
    };

    std::vector<Poly> quot(n, Poly(ctx));
    Poly carry(ctx);
    for (std::size_t k = n; k-- > 0;) {
        // q_k = C_{k+1} + c*w2*q_{k+1}
        Poly ck = Poly::from_terms(ctx, coeff[k + 1]);
        quot[k] = k + 1 == n ? ck : ck + carry;
        carry = times_cw2(quot[k].terms());
    }
    Poly remainder = Poly::from_terms(ctx, coeff[0]);
    if (n > 0) {
        remainder += carry;
    }
    if (!remainder.is_zero()) {
        throw NotDivisible("remainder " + to_string(remainder) + " after division by w1 - "
                           + to_string(c) + "*w2");
    }

    Poly::TermMap out;
    for (std::size_t k = 0; k < n; ++k) {
        for (const auto &[e, q] : quot[k].terms()) {
            Exponents raised = e;
            raised[iw1] = static_cast<std::uint32_t>(k);
            out.emplace(std::move(raised), q);
        }
    }
    return Poly::from_terms(ctx, std::move(out));
}

// Matches den = a*w1 + b*w2 with a != 0 and returns -b/a.
std::optional<Rational> linear_omega_root(const Poly &den)
{
    const Context ctx = den.context();
    Rational a = 0;
    Rational b = 0;
    for (const auto &[e, q] : den.terms()) {
        if (total_degree(e) != 1) {
            return std::nullopt;
        }
        if (e[ctx.w1()] == 1) {
            a = q;
        } else if (e[ctx.w2()] == 1) {
            b = q;
        } else {
            return std::nullopt;
        }
    }
    if (a == 0) {
        return std::nullopt;
    }
    return Rational(-b / a);
}

Poly general_quotient(const Poly &num, const Poly &den)
{
    const Context ctx = num.context();
    const auto &[lead_e, lead_c] = *den.terms().begin();
    Poly rem = num;
    Poly::TermMap quot;
    while (!rem.is_zero()) {
        const auto &[e, c] = *rem.terms().begin();
        Exponents diff(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < lead_e[i]) {
                throw NotDivisible("leading term of remainder is not divisible by the leading "
                                   "term of the divisor");
            }
            diff[i] = e[i] - lead_e[i];
        }
        Rational factor = c / lead_c;
        Poly::TermMap single;
        single.emplace(diff, factor);
        quot.emplace(std::move(diff), factor);
        rem -= Poly::from_terms(ctx, std::move(single)) * den;
    }
    return Poly::from_terms(ctx, std::move(quot));
}

} // namespace

Poly divide_by_omega_difference(const Poly &num)
{
    return divide_by_linear_omega(num, Rational(1));
}

Poly exact_quotient(const Poly &num, const Poly &den)
{
    if (!(num.context() == den.context())) {
        throw ContextMismatch("exact_quotient: context mismatch");
    }
    if (den.is_zero()) {
        throw NotDivisible("division by the zero polynomial");
    }
    if (auto root = linear_omega_root(den)) {
        const Rational lead = den.coefficient([&] {
            Exponents e(den.context().nvars(), 0);
            e[den.context().w1()] = 1;
            return e;
        }());
        Poly q = divide_by_linear_omega(num, *root);
        q *= Rational(1) / lead;
        return q;
    }
    return general_quotient(num, den);
}

Poly substitute(const Poly &p, const Assignment &assignment)
{
    const Context ctx = p.context();
    for (const auto &[var, value] : assignment) {
        if (var >= ctx.nvars()) {
            throw ContextMismatch("substitution for unknown variable index");
        }
        if (!(value.context() == ctx)) {
            throw ContextMismatch("substituted value lives in a different context");
        }
    }

    // powers[var][k] = value^k, grown on demand
    std::map<std::size_t, std::vector<Poly>> powers;
    auto power_of = [&](std::size_t var, unsigned k) -> const Poly & {
        auto &table = powers[var];
        if (table.empty()) {
            table.push_back(Poly::constant(ctx, Rational(1)));
        }
        while (table.size() <= k) {
            table.push_back(table.back() * assignment.at(var));
        }
        return table[k];
    };

    Poly out(ctx);
    for (const auto &[e, c] : p.terms()) {
        Exponents kept = e;
        for (const auto &kv : assignment) {
            kept[kv.first] = 0;
        }
        Poly::TermMap mono;
        mono.emplace(std::move(kept), c);
        Poly term = Poly::from_terms(ctx, std::move(mono));
        for (const auto &kv : assignment) {
            const unsigned k = e[kv.first];
            if (k > 0) {
                term *= power_of(kv.first, k);
            }
        }
        out += term;
    }
    return out;
}

Poly swap_omegas(const Poly &p)
{
    const Context ctx = p.context();
    Poly::TermMap out;
    for (const auto &[e, c] : p.terms()) {
        Exponents f = e;
        std::swap(f[ctx.w1()], f[ctx.w2()]);
        out.emplace(std::move(f), c);
    }
    return Poly::from_terms(ctx, std::move(out));
}

Poly permute_mu(const Poly &p, std::span<const std::size_t> perm)
{
    const Context ctx = p.context();
    if (perm.size() != ctx.mu_count()) {
        throw ContextMismatch("permutation length differs from the number of mu variables");
    }
    std::vector<bool> seen(perm.size(), false);
    for (std::size_t j : perm) {
        if (j >= perm.size() || seen[j]) {
            throw ContextMismatch("not a permutation of the mu variables");
        }
        seen[j] = true;
    }
    Poly::TermMap out;
    for (const auto &[e, c] : p.terms()) {
        Exponents f = e;
        for (std::size_t j = 0; j < perm.size(); ++j) {
            f[perm[j]] = e[j];
        }
        out.emplace(std::move(f), c);
    }
    return Poly::from_terms(ctx, std::move(out));
}

Symmetry symmetry_check(const Poly &p, SymmetryGroup group)
{
    std::vector<Poly> images;
    if (group == SymmetryGroup::omega_swap) {
        images.push_back(swap_omegas(p));
    } else {
        // Adjacent transpositions generate the symmetric group.
        const std::size_t n = p.context().mu_count();
        for (std::size_t j = 0; j + 1 < n; ++j) {
            std::vector<std::size_t> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            std::swap(perm[j], perm[j + 1]);
            images.push_back(permute_mu(p, perm));
        }
    }
    const bool sym = std::all_of(images.begin(), images.end(), [&](const Poly &q) { return q == p; });
    if (sym) {
        return Symmetry::symmetric;
    }
    const Poly neg = -p;
    const bool anti = std::all_of(images.begin(), images.end(), [&](const Poly &q) { return q == neg; });
    return anti ? Symmetry::antisymmetric : Symmetry::neither;
}

Homogeneity is_homogeneous(const Poly &p)
{
    if (p.is_zero()) {
        return {Homogeneity::Kind::zero, 0};
    }
    const unsigned deg = total_degree(p.terms().begin()->first);
    for (const auto &kv : p.terms()) {
        if (total_degree(kv.first) != deg) {
            return {Homogeneity::Kind::mixed, 0};
        }
    }
    return {Homogeneity::Kind::homogeneous, deg};
}

bool has_integer_coefficients(const Poly &p)
{
    return std::all_of(p.terms().begin(), p.terms().end(),
                       [](const auto &kv) { return is_integer(kv.second); });
}

std::string to_string(const Poly &p)
{
    if (p.is_zero()) {
        return "0";
    }
    const Context ctx = p.context();
    std::ostringstream os;
    bool first = true;
    for (const auto &[e, c] : p.terms()) {
        const bool negative = c < 0;
        if (first) {
            if (negative) {
                os << '-';
            }
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        const Rational mag = abs(c);
        const bool constant = total_degree(e) == 0;
        bool need_star = false;
        if (constant || mag != 1) {
            os << to_string(mag);
            need_star = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) {
                continue;
            }
            if (need_star) {
                os << '*';
            }
            os << ctx.variable_name(i);
            if (e[i] > 1) {
                os << '^' << e[i];
            }
            need_star = true;
        }
    }
    return os.str();
}

namespace
{

class PolyParser
{
public:
    PolyParser(Context ctx, std::string_view text) : ctx_(ctx), s_(text) {}

    Poly parse()
    {
        skip_ws();
        if (pos_ == s_.size()) {
            fail("empty polynomial");
        }
        Poly out(ctx_);
        bool first = true;
        while (true) {
            skip_ws();
            if (pos_ == s_.size()) {
                break;
            }
            bool negative = false;
            if (peek() == '+' || peek() == '-') {
                negative = peek() == '-';
                ++pos_;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-' between terms");
            }
            first = false;
            Poly t = term();
            if (negative) {
                t = -t;
            }
            out += t;
        }
        return out;
    }

private:
    [[noreturn]] void fail(const std::string &what) const
    {
        throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
    }

    char peek() const
    {
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    void skip_ws()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
            ++pos_;
        }
    }

    std::string digits()
    {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected digits");
        }
        return std::string(s_.substr(start, pos_ - start));
    }

    Poly term()
    {
        Rational coef(1);
        Exponents e(ctx_.nvars(), 0);
        while (true) {
            skip_ws();
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                std::string num = digits();
                skip_ws();
                if (peek() == '/') {
                    ++pos_;
                    skip_ws();
                    num += "/" + digits();
                }
                coef *= parse_rational(num);
            } else {
                const std::size_t var = variable();
                unsigned k = 1;
                skip_ws();
                if (peek() == '^') {
                    ++pos_;
                    skip_ws();
                    k = static_cast<unsigned>(std::stoul(digits()));
                }
                e[var] += k;
            }
            skip_ws();
            if (peek() != '*') {
                break;
            }
            ++pos_;
        }
        Poly::TermMap t;
        t.emplace(std::move(e), coef);
        return Poly::from_terms(ctx_, std::move(t));
    }

    std::size_t variable()
    {
        if (s_.substr(pos_, 2) == "mu") {
            pos_ += 2;
            const std::size_t j = std::stoul(digits());
            if (j >= ctx_.mu_count()) {
                fail("mu index out of range for this context");
            }
            return ctx_.mu(j);
        }
        if (s_.substr(pos_, 2) == "w1") {
            pos_ += 2;
            return ctx_.w1();
        }
        if (s_.substr(pos_, 2) == "w2") {
            pos_ += 2;
            return ctx_.w2();
        }
        fail("expected a coefficient or a variable");
    }

    Context ctx_;
    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace

Poly parse_poly(Context ctx, std::string_view text)
{
    return PolyParser(ctx, text).parse();
}

} // namespace orbitcalc
