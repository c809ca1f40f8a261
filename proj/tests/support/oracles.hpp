#ifndef ORBITCALC_TESTS_ORACLES_HPP
#define ORBITCALC_TESTS_ORACLES_HPP

// Reference implementations used only to cross-check the library. They
// deliberately take a different route from the production code.

#include <vector>

#include <orbitcalc/poly.hpp>
#include <orbitcalc/schubert.hpp>
#include <orbitcalc/series.hpp>

namespace oracle
{

using namespace orbitcalc;

// Schur polynomial as the sum over semistandard tableaux with entries
// 0..n-1, each tableau contributing prod x_entry.
inline Poly ssyt_schur(const Partition &shape, Context ctx)
{
    const std::size_t n = ctx.mu_count();
    Poly out(ctx);
    if (shape.size() > n) {
        return out;
    }
    std::vector<std::vector<int>> tab;
    for (int len : shape) {
        tab.emplace_back(static_cast<std::size_t>(len), 0);
    }
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 0; i < tab.size(); ++i) {
        for (std::size_t j = 0; j < tab[i].size(); ++j) {
            cells.emplace_back(i, j);
        }
    }
    auto rec = [&](auto &&self, std::size_t k) -> void {
        if (k == cells.size()) {
            Exponents e(ctx.nvars(), 0);
            for (const auto &row : tab) {
                for (int x : row) {
                    ++e[static_cast<std::size_t>(x)];
                }
            }
            out += Poly::from_terms(ctx, {{e, Rational(1)}});
            return;
        }
        const auto [i, j] = cells[k];
        int lo = 0;
        if (j > 0) {
            lo = tab[i][j - 1]; // weakly increasing along rows
        }
        if (i > 0) {
            lo = std::max(lo, tab[i - 1][j] + 1); // strictly down columns
        }
        for (int x = lo; x < static_cast<int>(n); ++x) {
            tab[i][j] = x;
            self(self, k + 1);
        }
    };
    rec(rec, 0);
    return out;
}

// Sum over ordered triples of distinct indices of m_i m_j m_k.
inline Integer brute_predegree(const std::vector<int> &m)
{
    Integer total = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) {
            for (std::size_t k = 0; k < m.size(); ++k) {
                if (i != j && j != k && i != k) {
                    total += Integer(m[i]) * m[j] * m[k];
                }
            }
        }
    }
    return total;
}

// Taylor coefficients of F at p in a local parameter. For p = [1:0] the
// local parameter is v2/v1 and the coefficients are read off directly;
// otherwise p = [t0:1] and f(t) = F(t, 1) is re-expanded around t0 by
// repeated Horner division.
inline std::vector<Rational> local_expansion(const BinaryForm &f, const ProjPoint &p)
{
    if (p.second() == 0) {
        return f.coeffs();
    }
    const Rational t0 = p.first() / p.second();
    // ascending powers of t: coefficient of t^k is coeffs[d-k]
    std::vector<Rational> a(f.coeffs().rbegin(), f.coeffs().rend());
    std::vector<Rational> out;
    while (!a.empty()) {
        // divide a(t) by (t - t0): remainder is a(t0)
        std::vector<Rational> q(a.size() - 1);
        Rational acc = 0;
        for (std::size_t k = a.size(); k-- > 0;) {
            acc = acc * t0 + a[k];
            if (k > 0) {
                q[k - 1] = acc;
            }
        }
        out.push_back(acc);
        a = std::move(q);
    }
    return out;
}

inline int taylor_order(const BinaryForm &f, const ProjPoint &p)
{
    const auto c = local_expansion(f, p);
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] != 0) {
            return static_cast<int>(k);
        }
    }
    return -1;
}

// Pivot columns of the row-reduced Taylor matrix.
inline std::vector<int> taylor_vanishing(const LinearSeries &s, const ProjPoint &p)
{
    std::vector<std::vector<Rational>> m;
    for (const auto &f : s.basis()) {
        m.push_back(local_expansion(f, p));
    }
    std::vector<int> pivots;
    std::size_t row = 0;
    const std::size_t cols = m.front().size();
    for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
        std::size_t piv = row;
        while (piv < m.size() && m[piv][c] == 0) {
            ++piv;
        }
        if (piv == m.size()) {
            continue;
        }
        std::swap(m[piv], m[row]);
        for (std::size_t i = row + 1; i < m.size(); ++i) {
            const Rational f = m[i][c] / m[row][c];
            for (std::size_t j = c; j < cols; ++j) {
                m[i][j] -= f * m[row][j];
            }
        }
        pivots.push_back(static_cast<int>(c));
        ++row;
    }
    return pivots;
}

} // namespace oracle

#endif
