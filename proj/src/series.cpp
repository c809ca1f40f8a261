#include <orbitcalc/series.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include <orbitcalc/errors.hpp>

namespace orbitcalc
{

namespace
{

using Matrix = std::vector<std::vector<Rational>>;

// Row reduction in place, columns scanned left to right. Returns the pivot
// columns; reduced rows end up in pivot order at the top.
std::vector<int> row_echelon(Matrix &m)
{
    std::vector<int> pivots;
    std::size_t row = 0;
    const std::size_t cols = m.empty() ? 0 : m.front().size();
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t pick = row;
        while (pick < m.size() && m[pick][col] == 0) {
            ++pick;
        }
        if (pick == m.size()) {
            continue;
        }
        std::swap(m[row], m[pick]);
        const Rational inv = Rational(1) / m[row][col];
        for (std::size_t c = col; c < cols; ++c) {
            m[row][c] *= inv;
        }
        for (std::size_t k = 0; k < m.size(); ++k) {
            if (k == row || m[k][col] == 0) {
                continue;
            }
            const Rational factor = m[k][col];
            for (std::size_t c = col; c < cols; ++c) {
                m[k][c] -= factor * m[row][c];
            }
        }
        pivots.push_back(static_cast<int>(col));
        ++row;
    }
    return pivots;
}

Matrix coefficient_matrix(const std::vector<BinaryForm> &forms)
{
    Matrix m;
    m.reserve(forms.size());
    for (const auto &f : forms) {
        m.push_back(f.coeffs());
    }
    return m;
}

// Coefficients of (x*u1 + y*u2)^k indexed by the power of u2.
std::vector<Rational> linear_power(const Rational &x, const Rational &y, int k)
{
    std::vector<Rational> out{Rational(1)};
    for (int step = 0; step < k; ++step) {
        std::vector<Rational> next(out.size() + 1, Rational(0));
        for (std::size_t i = 0; i < out.size(); ++i) {
            next[i] += out[i] * x;
            next[i + 1] += out[i] * y;
        }
        out = std::move(next);
    }
    return out;
}

LinearSeries map_basis(const LinearSeries &s, const std::function<BinaryForm(const BinaryForm &)> &fn)
{
    std::vector<BinaryForm> out;
    out.reserve(s.basis().size());
    for (const auto &f : s.basis()) {
        out.push_back(fn(f));
    }
    return LinearSeries(std::move(out));
}

UPoly reduce(const UPoly &a, const UPoly &f)
{
    return divmod(a, f).second;
}

void algebraic_echelon(const std::vector<std::vector<UPoly>> &entries, const UPoly &f, int r,
                       std::vector<FactorSequence> &out)
{
    std::vector<std::vector<UPoly>> rows = entries;
    for (auto &row : rows) {
        for (auto &e : row) {
            e = reduce(e, f);
        }
    }
    const std::size_t cols = rows.front().size();
    std::vector<bool> used(rows.size(), false);
    std::vector<int> pivots;
    for (std::size_t col = 0; col < cols && pivots.size() < rows.size(); ++col) {
        std::optional<std::size_t> pick;
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (used[k] || rows[k][col].is_zero()) {
                continue;
            }
            const UPoly g = gcd(rows[k][col], f);
            if (g.degree() == 0) {
                pick = k;
                break;
            }
            // Zero divisor: the roots of g and of f/g behave differently
            // at this entry. Restart on each factor.
            algebraic_echelon(entries, g, r, out);
            algebraic_echelon(entries, divmod(f, g).first, r, out);
            return;
        }
        if (!pick) {
            continue;
        }
        const std::size_t p = *pick;
        used[p] = true;
        pivots.push_back(static_cast<int>(col));
        const UPoly inv = *inverse_mod(rows[p][col], f);
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (used[k] || rows[k][col].is_zero()) {
                continue;
            }
            const UPoly factor = reduce(rows[k][col] * inv, f);
            for (std::size_t c = col; c < cols; ++c) {
                rows[k][c] = reduce(rows[k][c] - factor * rows[p][c], f);
            }
        }
    }
    if (static_cast<int>(pivots.size()) != r + 1) {
        throw DegenerateBasis("basis is dependent modulo " + to_string(f));
    }
    out.push_back({f.monic(), VanishingSequence(std::move(pivots))});
}

UPoly exact_div(const UPoly &a, const UPoly &b)
{
    auto [q, rem] = divmod(a, b);
    if (!rem.is_zero()) {
        throw InternalError("inexact division in fraction-free elimination");
    }
    return q;
}

// Bareiss fraction-free determinant over Q[t].
UPoly determinant(std::vector<std::vector<UPoly>> m)
{
    const std::size_t n = m.size();
    bool negate = false;
    UPoly prev = UPoly::constant(Rational(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) {
                ++swap_row;
            }
            if (swap_row == n) {
                return UPoly();
            }
            std::swap(m[k], m[swap_row]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            }
        }
        prev = m[k][k];
    }
    UPoly det = m[n - 1][n - 1];
    return negate ? -det : det;
}

int valuation(const std::vector<UPoly> &v)
{
    int best = -1;
    for (const auto &e : v) {
        if (e.is_zero()) {
            continue;
        }
        int k = 0;
        while (e.coeffs()[static_cast<std::size_t>(k)] == 0) {
            ++k;
        }
        best = best < 0 ? k : std::min(best, k);
    }
    return best;
}

UPoly shift_down(const UPoly &e, int k)
{
    if (e.is_zero()) {
        return e;
    }
    return UPoly(std::vector<Rational>(e.coeffs().begin() + k, e.coeffs().end()));
}

// A vector lambda with lambda^T m = 0, if the rows of m are dependent.
std::optional<std::vector<Rational>> left_kernel_vector(const Matrix &m)
{
    const std::size_t rows = m.size();
    const std::size_t cols = m.front().size();
    Matrix aug(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        aug[i] = m[i];
        aug[i].resize(cols + rows, Rational(0));
        aug[i][cols + i] = 1;
    }
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pick = row;
        while (pick < rows && aug[pick][col] == 0) {
            ++pick;
        }
        if (pick == rows) {
            continue;
        }
        std::swap(aug[row], aug[pick]);
        for (std::size_t k = row + 1; k < rows; ++k) {
            if (aug[k][col] == 0) {
                continue;
            }
            const Rational factor = aug[k][col] / aug[row][col];
            for (std::size_t c = col; c < cols + rows; ++c) {
                aug[k][c] -= factor * aug[row][c];
            }
        }
        ++row;
    }
    if (row == rows) {
        return std::nullopt;
    }
    return std::vector<Rational>(aug[row].begin() + static_cast<std::ptrdiff_t>(cols), aug[row].end());
}

} // namespace

BinaryForm::BinaryForm(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) {
        throw InvalidSequence("a binary form of degree d needs d+1 coefficients");
    }
}

bool BinaryForm::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational &c) { return c == 0; });
}

UPoly BinaryForm::affine() const
{
    std::vector<Rational> v(coeffs_.rbegin(), coeffs_.rend());
    return UPoly(std::move(v));
}

BinaryForm BinaryForm::normalized() const
{
    if (is_zero()) {
        return *this;
    }
    Integer den_lcm = 1;
    for (const auto &c : coeffs_) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    }
    std::vector<Rational> scaled;
    Integer content = 0;
    for (const auto &c : coeffs_) {
        Rational s = c * Rational(den_lcm);
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), s.get_num_mpz_t());
        scaled.push_back(std::move(s));
    }
    const auto lead = std::find_if(scaled.begin(), scaled.end(), [](const Rational &c) { return c != 0; });
    Rational factor(Integer(1), content);
    if (*lead < 0) {
        factor = -factor;
    }
    for (auto &s : scaled) {
        s *= factor;
    }
    return BinaryForm(std::move(scaled));
}

std::string to_string(const BinaryForm &f)
{
    if (f.is_zero()) {
        return "0";
    }
    const int d = f.degree();
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= d; ++i) {
        const Rational &c = f.coeffs()[static_cast<std::size_t>(i)];
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
        bool need_star = false;
        if (d == 0 || mag != 1) {
            os << to_string(mag);
            need_star = true;
        }
        auto factor = [&](const char *var, int k) {
            if (k == 0) {
                return;
            }
            if (need_star) {
                os << '*';
            }
            os << var;
            if (k > 1) {
                os << '^' << k;
            }
            need_star = true;
        };
        factor("v1", d - i);
        factor("v2", i);
    }
    return os.str();
}

ProjPoint::ProjPoint(const Rational &p1, const Rational &p2)
{
    if (p1 == 0 && p2 == 0) {
        throw InvalidSequence("[0:0] is not a point of P^1");
    }
    if (p1 != 0) {
        p1_ = 1;
        p2_ = p2 / p1;
    } else {
        p1_ = 0;
        p2_ = 1;
    }
}

std::string to_string(const ProjPoint &p)
{
    return "[" + to_string(p.first()) + ":" + to_string(p.second()) + "]";
}

BinaryForm transform(const BinaryForm &f, const Substitution &g)
{
    const int d = f.degree();
    std::vector<Rational> out(static_cast<std::size_t>(d + 1), Rational(0));
    for (int i = 0; i <= d; ++i) {
        const Rational &c = f.coeffs()[static_cast<std::size_t>(i)];
        if (c == 0) {
            continue;
        }
        const auto p1 = linear_power(g.a, g.b, d - i);
        const auto p2 = linear_power(g.c, g.e, i);
        for (std::size_t x = 0; x < p1.size(); ++x) {
            if (p1[x] == 0) {
                continue;
            }
            for (std::size_t y = 0; y < p2.size(); ++y) {
                out[x + y] += c * p1[x] * p2[y];
            }
        }
    }
    return BinaryForm(std::move(out));
}

Substitution move_to_origin(const ProjPoint &p)
{
    if (p.first() != 0) {
        return {Rational(1), Rational(0), p.second(), Rational(1)};
    }
    return {Rational(0), Rational(1), Rational(1), Rational(0)};
}

int order_at(const BinaryForm &f, const ProjPoint &p)
{
    if (f.is_zero()) {
        throw InvalidSequence("order of vanishing of the zero form is undefined");
    }
    const BinaryForm moved = transform(f, move_to_origin(p));
    int k = 0;
    while (moved.coeffs()[static_cast<std::size_t>(k)] == 0) {
        ++k;
    }
    return k;
}

LinearSeries::LinearSeries(std::vector<BinaryForm> basis) : basis_(std::move(basis))
{
    if (basis_.empty()) {
        throw InvalidSequence("a linear series needs at least one basis form");
    }
    const int d = basis_.front().degree();
    for (const auto &f : basis_) {
        if (f.degree() != d) {
            throw InvalidSequence("basis forms have different degrees");
        }
    }
    if (static_cast<int>(basis_.size()) > d + 1) {
        throw DegenerateBasis("more than d+1 forms of degree d are always dependent");
    }
    Matrix m = coefficient_matrix(basis_);
    if (row_echelon(m).size() != basis_.size()) {
        throw DegenerateBasis("basis forms are linearly dependent");
    }
}

LinearSeries LinearSeries::transformed(const Substitution &g) const
{
    if (g.determinant() == 0) {
        throw DegenerateBasis("coordinate change is not invertible");
    }
    return map_basis(*this, [&](const BinaryForm &f) { return transform(f, g); });
}

LinearSeries LinearSeries::rebased(const std::vector<std::vector<Rational>> &change) const
{
    const std::size_t n = basis_.size();
    if (change.size() != n) {
        throw InvalidSequence("basis change has the wrong size");
    }
    std::vector<BinaryForm> out;
    for (const auto &row : change) {
        if (row.size() != n) {
            throw InvalidSequence("basis change has the wrong size");
        }
        std::vector<Rational> coeffs(static_cast<std::size_t>(d() + 1), Rational(0));
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t i = 0; i < coeffs.size(); ++i) {
                coeffs[i] += row[j] * basis_[j].coeffs()[i];
            }
        }
        out.emplace_back(std::move(coeffs));
    }
    return LinearSeries(std::move(out));
}

LinearSeries monomial_series(const VanishingSequence &seq, int d)
{
    seq.check_fits(seq.rank(), d);
    std::vector<BinaryForm> basis;
    for (int a : seq.orders()) {
        std::vector<Rational> coeffs(static_cast<std::size_t>(d + 1), Rational(0));
        coeffs[static_cast<std::size_t>(a)] = 1;
        basis.emplace_back(std::move(coeffs));
    }
    return LinearSeries(std::move(basis));
}

std::string to_string(const AlgebraicPointClass &cls)
{
    if (cls.chart == AlgebraicPointClass::Chart::infinity) {
        return "[1:t], " + to_string(cls.defining) + " = 0";
    }
    return "[t:1], " + to_string(cls.defining) + " = 0";
}

VanishingSequence vanishing_sequence(const LinearSeries &s, const ProjPoint &p)
{
    const LinearSeries moved = s.transformed(move_to_origin(p));
    Matrix m = coefficient_matrix(moved.basis());
    std::vector<int> pivots = row_echelon(m);
    if (static_cast<int>(pivots.size()) != s.r() + 1) {
        throw DegenerateBasis("basis is dependent");
    }
    return VanishingSequence(std::move(pivots));
}

std::vector<FactorSequence> vanishing_sequence_algebraic(const LinearSeries &s,
                                                         const AlgebraicPointClass &cls)
{
    const UPoly &f = cls.defining;
    if (f.degree() < 1) {
        throw NotSquarefree("defining polynomial must be nonconstant");
    }
    if (!is_squarefree(f)) {
        throw NotSquarefree("defining polynomial " + to_string(f) + " is not squarefree");
    }
    const LinearSeries chart = cls.chart == AlgebraicPointClass::Chart::infinity
                                   ? s.transformed({Rational(0), Rational(1), Rational(1), Rational(0)})
                                   : s;
    // entries[j][i] = f_j^(i)(t) / i!, the coefficient of (t - root)^i
    std::vector<std::vector<UPoly>> entries;
    for (const auto &form : chart.basis()) {
        const UPoly fj = form.affine();
        std::vector<UPoly> row;
        for (int i = 0; i <= s.d(); ++i) {
            row.push_back(fj.divided_derivative(static_cast<unsigned>(i)));
        }
        entries.push_back(std::move(row));
    }
    std::vector<FactorSequence> raw;
    algebraic_echelon(entries, f.monic(), s.r(), raw);

    std::map<VanishingSequence, UPoly> merged;
    for (auto &fs : raw) {
        auto it = merged.find(fs.sequence);
        if (it == merged.end()) {
            merged.emplace(fs.sequence, fs.factor);
        } else {
            it->second = it->second * fs.factor;
        }
    }
    std::vector<FactorSequence> out;
    for (auto &[seq, factor] : merged) {
        out.push_back({factor, seq});
    }
    return out;
}

BinaryForm wronskian(const LinearSeries &s)
{
    const int n = s.r() + 1;
    const int big_n = (s.r() + 1) * (s.d() - s.r());
    std::vector<std::vector<UPoly>> m(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        for (const auto &form : s.basis()) {
            UPoly f = form.affine();
            for (int step = 0; step < k; ++step) {
                f = f.derivative();
            }
            m[static_cast<std::size_t>(k)].push_back(std::move(f));
        }
    }
    const UPoly det = determinant(std::move(m));
    if (det.is_zero()) {
        throw InternalError("Wronskian vanishes identically for an independent basis");
    }
    if (det.degree() > big_n) {
        throw InternalError("Wronskian determinant exceeds degree (r+1)(d-r)");
    }
    std::vector<Rational> coeffs(static_cast<std::size_t>(big_n + 1), Rational(0));
    for (int i = 0; i <= big_n; ++i) {
        coeffs[static_cast<std::size_t>(i)] = det.coeff(static_cast<std::size_t>(big_n - i));
    }
    return BinaryForm(std::move(coeffs)).normalized();
}

RamificationData ramification_profile(const LinearSeries &s)
{
    const BinaryForm w = wronskian(s);
    std::vector<VanishingSequence> points;
    std::vector<RamificationPoint> classes;

    const auto parts = squarefree_decomposition(w.affine());
    for (std::size_t m = 1; m < parts.size(); ++m) {
        if (parts[m].degree() < 1) {
            continue;
        }
        for (auto &fs : vanishing_sequence_algebraic(s, {parts[m], AlgebraicPointClass::Chart::affine})) {
            if (fs.sequence.weight() != static_cast<int>(m)) {
                throw InternalError("Wronskian multiplicity " + std::to_string(m)
                                    + " differs from the weight of " + to_string(fs.sequence));
            }
            for (int k = 0; k < fs.factor.degree(); ++k) {
                points.push_back(fs.sequence);
            }
            classes.push_back({{fs.factor, AlgebraicPointClass::Chart::affine}, fs.sequence,
                               static_cast<int>(m)});
        }
    }

    int at_infinity = 0;
    while (w.coeffs()[static_cast<std::size_t>(at_infinity)] == 0) {
        ++at_infinity;
    }
    if (at_infinity > 0) {
        VanishingSequence seq = vanishing_sequence(s, ProjPoint(Rational(1), Rational(0)));
        if (seq.weight() != at_infinity) {
            throw InternalError("Wronskian multiplicity at [1:0] differs from the weight of "
                                + to_string(seq));
        }
        points.push_back(seq);
        classes.push_back({{UPoly::monomial(Rational(1), 1), AlgebraicPointClass::Chart::infinity},
                           seq, at_infinity});
    }

    RamificationProfile profile(s.r(), s.d(), std::move(points));
    if (!profile.is_complete()) {
        throw InternalError("ramification weights do not add up to (r+1)(d-r)");
    }
    return {std::move(profile), std::move(classes)};
}

VanishingSequence degenerate_at(const LinearSeries &s, const ProjPoint &b)
{
    const LinearSeries moved = s.transformed(move_to_origin(b));
    const std::size_t cols = static_cast<std::size_t>(s.d() + 1);

    // diag(1, t) sends v1^(d-i) v2^i to t^i w1^(d-i) w2^i.
    std::vector<std::vector<UPoly>> vecs;
    for (const auto &form : moved.basis()) {
        std::vector<UPoly> v;
        for (std::size_t i = 0; i < cols; ++i) {
            v.push_back(UPoly::monomial(form.coeffs()[i], static_cast<unsigned>(i)));
        }
        vecs.push_back(std::move(v));
    }

    // Saturate the Q[t]-lattice spanned by the rows: whenever the t = 0
    // reductions are dependent, replace a row by the combination that
    // vanishes at t = 0 and divide out t.
    const int max_rounds = 64 * static_cast<int>(cols * vecs.size()) + 64;
    Matrix at_zero;
    for (int round = 0;; ++round) {
        if (round > max_rounds) {
            throw InternalError("flat-limit saturation did not terminate");
        }
        at_zero.clear();
        for (auto &v : vecs) {
            const int k = valuation(v);
            if (k < 0) {
                throw DegenerateBasis("basis is dependent");
            }
            for (auto &e : v) {
                e = shift_down(e, k);
            }
            std::vector<Rational> row;
            for (const auto &e : v) {
                row.push_back(e.coeff(0));
            }
            at_zero.push_back(std::move(row));
        }
        const auto lambda = left_kernel_vector(at_zero);
        if (!lambda) {
            break;
        }
        std::size_t target = 0;
        for (std::size_t j = 0; j < lambda->size(); ++j) {
            if ((*lambda)[j] != 0) {
                target = j;
            }
        }
        std::vector<UPoly> combo(cols);
        for (std::size_t j = 0; j < vecs.size(); ++j) {
            if ((*lambda)[j] == 0) {
                continue;
            }
            for (std::size_t i = 0; i < cols; ++i) {
                combo[i] += vecs[j][i] * (*lambda)[j];
            }
        }
        vecs[target] = std::move(combo);
    }

    row_echelon(at_zero);
    std::vector<int> exponents;
    for (const auto &row : at_zero) {
        const auto nonzero = std::count_if(row.begin(), row.end(), [](const Rational &c) { return c != 0; });
        if (nonzero != 1) {
            throw InternalError("flat limit is not a monomial subspace");
        }
        const auto it = std::find_if(row.begin(), row.end(), [](const Rational &c) { return c != 0; });
        exponents.push_back(static_cast<int>(it - row.begin()));
    }
    std::sort(exponents.begin(), exponents.end());
    return VanishingSequence(std::move(exponents));
}

std::vector<BoundaryOrbit> boundary_orbits(const LinearSeries &s)
{
    const RamificationData data = ramification_profile(s);
    std::vector<BoundaryOrbit> out;
    const VanishingSequence generic = VanishingSequence::generic(s.r());
    out.push_back({generic, 1, monomial_series(generic, s.d())});
    for (const auto &seq : data.profile.points()) {
        if (out.back().sequence == seq) {
            continue;
        }
        out.push_back({seq, 2, monomial_series(seq, s.d())});
    }
    return out;
}

} // namespace orbitcalc
