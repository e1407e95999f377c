#pragma once

#include "ncdef/resolution.hpp"

#include <optional>

namespace ncdef {

struct DiagramArrow {
    int src = 0, tgt = 0, label = 1;
    Polynomial g;  // quotient-to-quotient map v -> g*v
    ChainMap lift; // filled by lift_module_map
};

// Everything the Ext/Massey machinery needs: the base ring, one verified
// resolution per point, the diagram arrows with their chain lifts, and the
// truncation degree for all linear algebra.
struct DiagramData {
    CommRing ring;
    std::vector<Resolution> res;
    std::vector<DiagramArrow> arrows;
    int dbound = 6;

    int npoints() const { return (int)res.size(); }
    const Resolution& R(int i) const { return res[i - 1]; }
    int len(int i) const { return R(i).length(); }
    int rank(int i, int n) const { return R(i).rank_at(n); }

    int max_map_deg() const
    {
        int d = 1;
        for (auto& r : res)
            d = std::max(d, r.max_map_deg());
        return d;
    }
};

// Degree-p family of maps xi_n : L_{n+p}^bi -> L_n^bj.
struct YCochain {
    int p = 1, bi = 1, bj = 1;
    std::vector<PolyMatrix> comp;

    bool zero() const
    {
        for (auto& c : comp)
            if (!c.is_zero())
                return false;
        return true;
    }
};

inline int y_slots(const DiagramData& D, int p, int bi, int bj)
{
    int n = std::min(D.len(bi) - p, D.len(bj));
    return n < 0 ? 0 : n + 1;
}

inline YCochain y_zero(const DiagramData& D, int p, int bi, int bj)
{
    YCochain c;
    c.p = p;
    c.bi = bi;
    c.bj = bj;
    int slots = y_slots(D, p, bi, bj);
    for (int n = 0; n < slots; ++n)
        c.comp.emplace_back(D.rank(bj, n), D.rank(bi, n + p));
    return c;
}

inline YCochain y_add(const YCochain& a, const YCochain& b)
{
    YCochain c = a;
    for (size_t n = 0; n < c.comp.size() && n < b.comp.size(); ++n)
        c.comp[n] = pm_add(c.comp[n], b.comp[n]);
    return c;
}

inline YCochain y_scale(const YCochain& a, const Rational& k)
{
    YCochain c = a;
    for (auto& m : c.comp)
        m = pm_scale(m, k);
    return c;
}

// (d xi)_n = xi_n . d^{bi}_{n+p}  -  (-1)^p  d^{bj}_n . xi_{n+1}
inline YCochain y_diff(const DiagramData& D, const YCochain& xi)
{
    YCochain out = y_zero(D, xi.p + 1, xi.bi, xi.bj);
    Rational sign = (xi.p % 2 == 0) ? 1 : -1;
    for (int n = 0; n < (int)out.comp.size(); ++n) {
        PolyMatrix acc = out.comp[n];
        const PolyMatrix* din = D.R(xi.bi).map_at(n + xi.p);
        if (n < (int)xi.comp.size() && din)
            acc = pm_add(acc, pm_mul(xi.comp[n], *din));
        const PolyMatrix* dout = D.R(xi.bj).map_at(n);
        if (n + 1 < (int)xi.comp.size() && dout)
            acc = pm_sub(acc, pm_scale(pm_mul(*dout, xi.comp[n + 1]), sign));
        out.comp[n] = acc;
    }
    return out;
}

// Composite "first then second" of second : L^bj -> L^bk (degree q) with
// first : L^bi -> L^bj (degree p); the word convention of the hull engine:
// (second o first)_n = second_n . first_{n+q}.
inline YCochain y_compose(const DiagramData& D, const YCochain& second, const YCochain& first)
{
    if (first.bj != second.bi)
        throw RingError("cochain blocks do not compose");
    YCochain out = y_zero(D, first.p + second.p, first.bi, second.bj);
    for (int n = 0; n < (int)out.comp.size(); ++n) {
        int k = n + second.p;
        if (n < (int)second.comp.size() && k < (int)first.comp.size())
            out.comp[n] = pm_mul(second.comp[n], first.comp[k]);
    }
    return out;
}

// Flat coordinates of the degree-p cochain space in block (bi,bj): slot
// order (n, row, col), monomials ascending; entry degrees <= width.
struct YSpace {
    const DiagramData* D = nullptr;
    int p = 1, bi = 1, bj = 1;
    PolyVecSpace entries; // one "component" per matrix entry across slots
    std::vector<std::array<int, 3>> slots; // (n, row, col)

    YSpace() = default;
    YSpace(const DiagramData& dd, int p_, int bi_, int bj_, int width) : D(&dd), p(p_), bi(bi_), bj(bj_)
    {
        int ns = y_slots(dd, p, bi, bj);
        for (int n = 0; n < ns; ++n)
            for (int r = 0; r < dd.rank(bj, n); ++r)
                for (int c = 0; c < dd.rank(bi, n + p); ++c)
                    slots.push_back({n, r, c});
        entries = PolyVecSpace((int)slots.size(), all_monomials(dd.ring, width));
    }

    size_t dim() const { return entries.dim(); }

    QVec flatten(const YCochain& y) const
    {
        std::vector<Polynomial> v(slots.size());
        for (size_t s = 0; s < slots.size(); ++s) {
            auto [n, r, c] = slots[s];
            if (n < (int)y.comp.size())
                v[s] = y.comp[n].at(r, c);
        }
        return entries.flatten(v);
    }

    YCochain unflatten(const QVec& x) const
    {
        YCochain y = y_zero(*D, p, bi, bj);
        auto v = entries.unflatten(x);
        for (size_t s = 0; s < slots.size(); ++s) {
            auto [n, r, c] = slots[s];
            y.comp[n].at(r, c) = v[s];
        }
        return y;
    }
};

// Matrix of the Yoneda differential from space(p, width) to space(p+1, wide).
inline QMatrix y_diff_matrix(const DiagramData& D, const YSpace& src, const YSpace& tgt)
{
    QMatrix M(tgt.dim(), src.dim());
    for (size_t j = 0; j < src.dim(); ++j) {
        QVec e(src.dim(), Rational(0));
        e[j] = 1;
        QVec img = tgt.flatten(y_diff(D, src.unflatten(e)));
        for (size_t i = 0; i < img.size(); ++i)
            M.at(i, j) = img[i];
    }
    return M;
}

// Hom-complex cochain: phi : L_p^bi -> V_bj, entries in normal form.
struct HCochain {
    int p = 0, bi = 1, bj = 1;
    std::vector<Polynomial> val; // one entry per generator of L_p^bi
};

struct HSpace {
    const DiagramData* D = nullptr;
    int p = 0, bi = 1, bj = 1;
    PolyVecSpace entries;

    HSpace() = default;
    HSpace(const DiagramData& dd, int p_, int bi_, int bj_, int width = -1)
        : D(&dd), p(p_), bi(bi_), bj(bj_)
    {
        if (width < 0)
            width = dd.dbound;
        entries = PolyVecSpace(dd.rank(bi, p),
                               graded_basis(dd.ring, dd.R(bj).module.gb, width));
    }
    size_t dim() const { return entries.dim(); }
    QVec flatten(const HCochain& h) const { return entries.flatten(h.val); }
    HCochain unflatten(const QVec& x) const
    {
        HCochain h;
        h.p = p;
        h.bi = bi;
        h.bj = bj;
        h.val = entries.unflatten(x);
        return h;
    }
};

// (d phi) = phi . d^{bi}_p, reduced mod I_bj.
inline HCochain h_diff(const DiagramData& D, const HCochain& phi)
{
    HCochain out;
    out.p = phi.p + 1;
    out.bi = phi.bi;
    out.bj = phi.bj;
    const PolyMatrix* d = D.R(phi.bi).map_at(phi.p);
    int cols = D.rank(phi.bi, phi.p + 1);
    out.val.assign(cols, Polynomial{});
    if (!d)
        return out;
    for (int c = 0; c < cols; ++c) {
        Polynomial s;
        for (int k = 0; k < d->rows; ++k)
            s = poly_add(s, poly_mul(phi.val[k], d->at(k, c)));
        out.val[c] = D.R(phi.bj).module.nf(s);
    }
    return out;
}

struct ExtClass {
    HCochain hom;
    YCochain yon;
    std::string label;
};

struct ExtBasis {
    int p = 1, bi = 1, bj = 1;
    std::vector<ExtClass> classes;
    size_t dim() const { return classes.size(); }
};

// Lift a Hom-level cocycle to a Yoneda cocycle: xi_0 lifts phi through the
// augmentation, higher components solve d . xi_{n+1} = (-1)^p xi_n . d.
inline YCochain hom_to_yoneda(const DiagramData& D, const HCochain& phi)
{
    YCochain xi = y_zero(D, phi.p, phi.bi, phi.bj);
    if (xi.comp.empty())
        return xi;
    for (int c = 0; c < (int)phi.val.size(); ++c)
        xi.comp[0].at(0, c) = phi.val[c];
    Rational sign = (phi.p % 2 == 0) ? 1 : -1;
    for (int n = 0; n + 1 < (int)xi.comp.size(); ++n) {
        const PolyMatrix* din = D.R(phi.bi).map_at(n + phi.p);
        const PolyMatrix* dout = D.R(phi.bj).map_at(n);
        if (!din || !dout)
            break;
        PolyMatrix rhs = pm_scale(pm_mul(xi.comp[n], *din), sign);
        auto X = solve_poly_matrix(D.ring, *dout, rhs, D.dbound);
        if (!X)
            throw RingError("yoneda lift failed: input not a cocycle?");
        xi.comp[n + 1] = *X;
    }
    return xi;
}

inline HCochain yoneda_to_hom(const DiagramData& D, const YCochain& xi)
{
    HCochain phi;
    phi.p = xi.p;
    phi.bi = xi.bi;
    phi.bj = xi.bj;
    int cols = D.rank(xi.bi, xi.p);
    phi.val.assign(cols, Polynomial{});
    if (!xi.comp.empty())
        for (int c = 0; c < cols; ++c)
            phi.val[c] = D.R(xi.bj).module.nf(xi.comp[0].at(0, c));
    return phi;
}

// Basis of Ext^p(V_bi, V_bj) on the degree-truncated slice, via the Hom
// complex.  slice >= 0 restricts cocycles to entries homogeneous of that
// degree before passing to cohomology (the paper's "linear homogeneous
// deformations" restriction).
inline ExtBasis compute_ext(const DiagramData& D, int p, int bi, int bj, int slice = -1)
{
    ExtBasis basis;
    basis.p = p;
    basis.bi = bi;
    basis.bj = bj;
    if (p > D.len(bi))
        return basis; // no cochains at all
    HSpace here(D, p, bi, bj);
    if (here.dim() == 0)
        return basis;

    // cocycles
    std::vector<QVec> cocycles;
    if (p < D.len(bi)) {
        HSpace next(D, p + 1, bi, bj, D.dbound + D.max_map_deg());
        QMatrix M(next.dim(), here.dim());
        for (size_t j = 0; j < here.dim(); ++j) {
            QVec e(here.dim(), Rational(0));
            e[j] = 1;
            QVec img = next.flatten(h_diff(D, here.unflatten(e)));
            for (size_t i = 0; i < img.size(); ++i)
                M.at(i, j) = img[i];
        }
        cocycles = kernel_basis(M);
    } else {
        for (size_t j = 0; j < here.dim(); ++j) {
            QVec e(here.dim(), Rational(0));
            e[j] = 1;
            cocycles.push_back(e);
        }
    }

    // coboundaries whose entries fit the truncation width
    EchelonBasis cob(here.dim());
    if (p >= 1) {
        HSpace prev(D, p - 1, bi, bj);
        for (size_t j = 0; j < prev.dim(); ++j) {
            QVec e(prev.dim(), Rational(0));
            e[j] = 1;
            HCochain b = h_diff(D, prev.unflatten(e));
            bool fits = true;
            for (auto& q : b.val)
                if (q.degree() > D.dbound)
                    fits = false;
            if (fits)
                cob.insert(here.flatten(b));
        }
    }

    // optional homogeneous-degree slice of the cocycle space
    std::vector<QVec> pool;
    if (slice >= 0) {
        EchelonBasis cospan(here.dim());
        for (auto& v : cocycles)
            cospan.insert(v);
        for (size_t j = 0; j < here.dim(); ++j) {
            // coordinate j corresponds to (component, monomial)
            size_t nm = here.entries.mons.size();
            if (here.entries.mons[j % nm].deg() != slice)
                continue;
            QVec e(here.dim(), Rational(0));
            e[j] = 1;
            if (cospan.contains(e))
                pool.push_back(e);
        }
    } else {
        pool = cocycles;
    }

    EchelonBasis seen(here.dim());
    for (auto& v : pool) {
        QVec red = seen.reduce(cob.reduce(v));
        size_t lead = 0;
        while (lead < red.size() && red[lead] == 0)
            ++lead;
        if (lead == red.size())
            continue;
        QVec rep = red;
        Rational inv = rep[lead];
        for (auto& x : rep)
            x /= inv;
        seen.insert(red);
        ExtClass cls;
        cls.hom = here.unflatten(rep);
        cls.yon = hom_to_yoneda(D, cls.hom);
        basis.classes.push_back(std::move(cls));
    }
    return basis;
}

// Classifier for degree-p cochains modulo coboundaries.  The obstruction
// basis is adopted on first contact: the first cochain with a nonzero
// class supplies the representative, normalized so its first nonzero flat
// coordinate is +1.  All later cochains get coordinates against the
// adopted representatives, plus a canonical witness for the rest.
struct CochainClassifier {
    const DiagramData* D = nullptr;
    int p = 2, bi = 1, bj = 1;
    YSpace wit_space;  // degree p-1, entries <= dbound
    YSpace obs_space;  // degree p, entries <= dbound + map degree
    QMatrix dmat;      // y_diff : wit_space -> obs_space
    EchelonBasis cob;  // image of dmat
    std::vector<QVec> basis_flats;     // adopted class representatives
    std::vector<YCochain> basis_reps;
    EchelonBasis span; // cob + basis_flats

    CochainClassifier() = default;
    CochainClassifier(const DiagramData& dd, int p_, int bi_, int bj_)
        : D(&dd), p(p_), bi(bi_), bj(bj_),
          wit_space(dd, p_ - 1, bi_, bj_, dd.dbound),
          obs_space(dd, p_, bi_, bj_, dd.dbound + dd.max_map_deg()),
          cob(obs_space.dim()), span(obs_space.dim())
    {
        dmat = y_diff_matrix(dd, wit_space, obs_space);
        for (size_t j = 0; j < wit_space.dim(); ++j) {
            QVec col(obs_space.dim());
            for (size_t i = 0; i < obs_space.dim(); ++i)
                col[i] = dmat.at(i, j);
            cob.insert(col);
            span.insert(std::move(col));
        }
    }

    bool is_cocycle(const YCochain& c) const { return y_diff(*D, c).zero(); }

    // Adopt a new basis direction from the class of c (must not be in span).
    void adopt(const QVec& flat_c)
    {
        QVec red = span.reduce(flat_c);
        size_t lead = 0;
        while (lead < red.size() && red[lead] == 0)
            ++lead;
        Rational inv = red[lead];
        for (auto& x : red)
            x /= inv;
        basis_flats.push_back(red);
        basis_reps.push_back(obs_space.unflatten(red));
        span.insert(red);
    }

    struct Result {
        bool is_coboundary = false;
        std::vector<Rational> coords; // against the adopted basis
        YCochain witness;             // d(witness) = c - sum coords*basis
    };

    // May adopt a new basis vector when allow_adopt is set.
    Result classify(const YCochain& c, bool allow_adopt)
    {
        QVec flat = obs_space.flatten(c);
        if (!span.contains(flat) && allow_adopt)
            adopt(flat);
        // solve [dmat | basis] x = flat
        size_t nb = basis_flats.size();
        QMatrix M(obs_space.dim(), wit_space.dim() + nb);
        for (size_t i = 0; i < obs_space.dim(); ++i) {
            for (size_t j = 0; j < wit_space.dim(); ++j)
                M.at(i, j) = dmat.at(i, j);
            for (size_t k = 0; k < nb; ++k)
                M.at(i, wit_space.dim() + k) = basis_flats[k][i];
        }
        auto x = solve(M, flat);
        if (!x)
            throw RingError("cochain not expressible: classifier invariant broken");
        Result res;
        res.coords.assign(nb, Rational(0));
        for (size_t k = 0; k < nb; ++k)
            res.coords[k] = (*x)[wit_space.dim() + k];
        res.is_coboundary = true;
        for (auto& q : res.coords)
            if (q != 0)
                res.is_coboundary = false;
        res.witness = wit_space.unflatten(QVec(x->begin(), x->begin() + wit_space.dim()));
        return res;
    }
};

}  // namespace ncdef
