#pragma once

#include "ncdef/poly.hpp"

#include <functional>

namespace ncdef {

// Multivariate division: remainder of f by basis; no term of the result is
// divisible by any leading term of the basis. Empty basis returns f.
inline Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis, MonOrder order)
{
    Polynomial rem;
    Polynomial work = f;
    while (!work.is_zero()) {
        const Monomial* lm = poly_leading(work, order);
        bool divided = false;
        for (auto& g : basis) {
            if (g.is_zero())
                continue;
            const Monomial* lg = poly_leading(g, order);
            if (!mon_divides(*lg, *lm))
                continue;
            Rational factor = work.terms.at(*lm) / g.terms.at(*lg);
            Monomial shift = mon_div(*lm, *lg);
            work = poly_sub(work, poly_mul(poly_term(shift, factor), g));
            divided = true;
            break;
        }
        if (!divided) {
            Rational c = work.terms.at(*lm);
            poly_add_inplace(rem, *lm, c);
            poly_add_inplace(work, *lm, -c);
        }
    }
    return rem;
}

inline Polynomial s_poly(const Polynomial& f, const Polynomial& g, MonOrder order)
{
    const Monomial* lf = poly_leading(f, order);
    const Monomial* lg = poly_leading(g, order);
    Monomial l = mon_lcm(*lf, *lg);
    Polynomial a = poly_mul(poly_term(mon_div(l, *lf), Rational(1) / f.terms.at(*lf)), f);
    Polynomial b = poly_mul(poly_term(mon_div(l, *lg), Rational(1) / g.terms.at(*lg)), g);
    return poly_sub(a, b);
}

// Buchberger with inter-reduction; output is the reduced Groebner basis,
// monic, sorted by leading monomial.
inline std::vector<Polynomial> gb_complete(std::vector<Polynomial> gens, MonOrder order)
{
    std::vector<Polynomial> g;
    for (auto& f : gens)
        if (!f.is_zero())
            g.push_back(f);
    bool changed = true;
    while (changed) {
        changed = false;
        size_t n = g.size();
        for (size_t i = 0; i < n && !changed; ++i) {
            for (size_t j = i + 1; j < n && !changed; ++j) {
                Polynomial s = reduce(s_poly(g[i], g[j], order), g, order);
                if (!s.is_zero()) {
                    g.push_back(s);
                    changed = true;
                }
            }
        }
    }
    // reduce each element by the others, drop zeros, make monic
    std::vector<Polynomial> out;
    for (size_t i = 0; i < g.size(); ++i) {
        std::vector<Polynomial> rest;
        for (size_t j = 0; j < g.size(); ++j)
            if (j != i)
                rest.push_back(g[j]);
        Polynomial r = reduce(g[i], rest, order);
        if (!r.is_zero()) {
            g[i] = r;
            out.push_back(r);
        } else {
            g.erase(g.begin() + i);
            --i;
        }
    }
    for (auto& f : out)
        f = poly_scale(f, Rational(1) / f.terms.at(*poly_leading(f, order)));
    std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
        return mon_less(*poly_leading(a, order), *poly_leading(b, order), order);
    });
    return out;
}

// Monomials of total degree <= d that avoid the leading terms of gb: a
// basis of the degree-<=d slice of the quotient ring (filtration semantics
// for non-homogeneous ideals).
inline std::vector<Monomial> graded_basis(const CommRing& ring, const std::vector<Polynomial>& gb,
                                          int d)
{
    std::vector<Monomial> leads;
    for (auto& g : gb)
        leads.push_back(*poly_leading(g, ring.order));
    std::vector<Monomial> out;
    std::function<void(Monomial&, size_t, int)> rec = [&](Monomial& m, size_t i, int left) {
        if (i == ring.nvars()) {
            for (auto& l : leads)
                if (mon_divides(l, m))
                    return;
            out.push_back(m);
            return;
        }
        for (int k = 0; k <= left; ++k) {
            m.e[i] = (unsigned)k;
            rec(m, i + 1, left - k);
        }
        m.e[i] = 0;
    };
    Monomial m(ring.nvars());
    rec(m, 0, d);
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
        return mon_less(a, b, ring.order);
    });
    return out;
}

}  // namespace ncdef
