#include <orbitcalc/upoly.hpp>

#include <sstream>

#include <orbitcalc/errors.hpp>

namespace orbitcalc
{

UPoly::UPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

UPoly UPoly::constant(const Rational &c)
{
    return UPoly(std::vector<Rational>{c});
}

UPoly UPoly::monomial(const Rational &c, unsigned k)
{
    std::vector<Rational> v(k + 1, Rational(0));
    v[k] = c;
    return UPoly(std::move(v));
}

void UPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

UPoly &UPoly::operator+=(const UPoly &o)
{
    if (coeffs_.size() < o.coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size(), Rational(0));
    }
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
        coeffs_[k] += o.coeffs_[k];
    }
    trim();
    return *this;
}

UPoly &UPoly::operator-=(const UPoly &o)
{
    if (coeffs_.size() < o.coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size(), Rational(0));
    }
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
        coeffs_[k] -= o.coeffs_[k];
    }
    trim();
    return *this;
}

UPoly &UPoly::operator*=(const Rational &c)
{
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto &x : coeffs_) {
        x *= c;
    }
    return *this;
}

UPoly operator*(const UPoly &a, const UPoly &b)
{
    if (a.is_zero() || b.is_zero()) {
        return UPoly();
    }
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return UPoly(std::move(out));
}

UPoly UPoly::operator-() const
{
    UPoly out = *this;
    for (auto &x : out.coeffs_) {
        x = -x;
    }
    return out;
}

Rational UPoly::evaluate(const Rational &x) const
{
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

UPoly UPoly::derivative() const
{
    if (coeffs_.size() <= 1) {
        return UPoly();
    }
    std::vector<Rational> out(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        out[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
    }
    return UPoly(std::move(out));
}

UPoly UPoly::divided_derivative(unsigned k) const
{
    // coefficient of t^j in f^(k)/k! is binom(j+k, k) * c_{j+k}
    if (coeffs_.size() <= k) {
        return UPoly();
    }
    std::vector<Rational> out(coeffs_.size() - k);
    for (std::size_t j = 0; j < out.size(); ++j) {
        Integer binom;
        mpz_bin_uiui(binom.get_mpz_t(), j + k, k);
        out[j] = coeffs_[j + k] * Rational(binom);
    }
    return UPoly(std::move(out));
}

UPoly UPoly::monic() const
{
    if (is_zero()) {
        return *this;
    }
    UPoly out = *this;
    out *= Rational(1) / leading();
    return out;
}

std::pair<UPoly, UPoly> divmod(const UPoly &a, const UPoly &b)
{
    if (b.is_zero()) {
        throw InternalError("univariate division by zero");
    }
    std::vector<Rational> rem = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) {
        return {UPoly(), a};
    }
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
    const Rational inv_lead = Rational(1) / b.leading();
    for (int k = a.degree(); k >= db; --k) {
        const Rational c = rem[static_cast<std::size_t>(k)] * inv_lead;
        if (c == 0) {
            continue;
        }
        quot[static_cast<std::size_t>(k - db)] = c;
        for (int j = 0; j <= db; ++j) {
            rem[static_cast<std::size_t>(k - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
        }
    }
    rem.resize(static_cast<std::size_t>(db));
    return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

UPoly gcd(const UPoly &a, const UPoly &b)
{
    UPoly x = a;
    UPoly y = b;
    while (!y.is_zero()) {
        UPoly r = divmod(x, y).second;
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

std::optional<UPoly> inverse_mod(const UPoly &a, const UPoly &f)
{
    // extended Euclid tracking only the coefficient of a
    UPoly r0 = f;
    UPoly r1 = divmod(a, f).second;
    UPoly s0;
    UPoly s1 = UPoly::constant(Rational(1));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        UPoly s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.degree() != 0) {
        return std::nullopt;
    }
    UPoly inv = s0 * (Rational(1) / r0.leading());
    return divmod(inv, f).second;
}

bool is_squarefree(const UPoly &f)
{
    if (f.is_zero()) {
        return false;
    }
    return gcd(f, f.derivative()).degree() == 0;
}

std::vector<UPoly> squarefree_decomposition(const UPoly &f)
{
    if (f.is_zero()) {
        throw InternalError("squarefree decomposition of the zero polynomial");
    }
    std::vector<UPoly> parts{UPoly::constant(Rational(1))};
    if (f.degree() == 0) {
        return parts;
    }
    const UPoly df = f.derivative();
    UPoly a = gcd(f, df);
    UPoly b = divmod(f, a).first;
    UPoly c = divmod(df, a).first;
    UPoly dd = c - b.derivative();
    while (b.degree() > 0) {
        UPoly g = gcd(b, dd);
        parts.push_back(g);
        b = divmod(b, g).first;
        c = divmod(dd, g).first;
        dd = c - b.derivative();
    }
    return parts;
}

std::string to_string(const UPoly &p, const std::string &var)
{
    if (p.is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        const Rational &c = p.coeffs()[static_cast<std::size_t>(k)];
        if (c == 0) {
            continue;
        }
        if (first) {
            if (c < 0) {
                os << '-';
            }
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        const Rational mag = abs(c);
        if (k == 0 || mag != 1) {
            os << to_string(mag);
            if (k > 0) {
                os << '*';
            }
        }
        if (k > 0) {
            os << var;
            if (k > 1) {
                os << '^' << k;
            }
        }
    }
    return os.str();
}

} // namespace orbitcalc
