#pragma once

#include "ncdef/groebner.hpp"
#include "ncdef/linalg.hpp"

#include <optional>
#include <string>

namespace ncdef {

// Matrix of polynomials acting on column vectors: rows = target rank,
// cols = source rank, composition (f then g) = M(g) * M(f).
struct PolyMatrix {
    int rows = 0, cols = 0;
    std::vector<Polynomial> m; // row-major

    PolyMatrix() = default;
    PolyMatrix(int r, int c) : rows(r), cols(c), m(r * c) {}

    Polynomial& at(int r, int c) { return m[r * cols + c]; }
    const Polynomial& at(int r, int c) const { return m[r * cols + c]; }

    bool is_zero() const
    {
        for (auto& p : m)
            if (!p.is_zero())
                return false;
        return true;
    }
    int max_deg() const
    {
        int d = 0;
        for (auto& p : m)
            d = std::max(d, p.degree());
        return d;
    }
    bool operator==(const PolyMatrix& o) const
    {
        return rows == o.rows && cols == o.cols && m == o.m;
    }
};

inline PolyMatrix pm_mul(const PolyMatrix& a, const PolyMatrix& b)
{
    if (a.cols != b.rows)
        throw RingError("matrix shape mismatch in product");
    PolyMatrix c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < b.cols; ++j) {
            Polynomial s;
            for (int k = 0; k < a.cols; ++k)
                s = poly_add(s, poly_mul(a.at(i, k), b.at(k, j)));
            c.at(i, j) = s;
        }
    return c;
}

inline PolyMatrix pm_add(const PolyMatrix& a, const PolyMatrix& b)
{
    PolyMatrix c(a.rows, a.cols);
    for (size_t i = 0; i < a.m.size(); ++i)
        c.m[i] = poly_add(a.m[i], b.m[i]);
    return c;
}

inline PolyMatrix pm_scale(const PolyMatrix& a, const Rational& c)
{
    PolyMatrix r(a.rows, a.cols);
    for (size_t i = 0; i < a.m.size(); ++i)
        r.m[i] = poly_scale(a.m[i], c);
    return r;
}

inline PolyMatrix pm_sub(const PolyMatrix& a, const PolyMatrix& b)
{
    return pm_add(a, pm_scale(b, Rational(-1)));
}

inline PolyMatrix pm_truncate(const PolyMatrix& a, int d)
{
    PolyMatrix r(a.rows, a.cols);
    for (size_t i = 0; i < a.m.size(); ++i)
        r.m[i] = poly_truncate(a.m[i], d);
    return r;
}

// Coordinates for vectors of polynomials: `ncomp` components, entries
// spanned by a fixed monomial list (ascending in the ring order).
struct PolyVecSpace {
    int ncomp = 0;
    std::vector<Monomial> mons;
    std::map<Monomial, size_t> index;

    PolyVecSpace() = default;
    PolyVecSpace(int n, std::vector<Monomial> ms) : ncomp(n), mons(std::move(ms))
    {
        for (size_t i = 0; i < mons.size(); ++i)
            index[mons[i]] = i;
    }

    size_t dim() const { return (size_t)ncomp * mons.size(); }
    size_t coord(int comp, size_t mi) const { return (size_t)comp * mons.size() + mi; }

    QVec flatten(const std::vector<Polynomial>& v) const
    {
        QVec out(dim(), Rational(0));
        for (int c = 0; c < ncomp; ++c)
            for (auto& [m, k] : v[c].terms) {
                auto it = index.find(m);
                if (it == index.end())
                    throw RingError("monomial outside coordinate space");
                out[coord(c, it->second)] = k;
            }
        return out;
    }

    std::vector<Polynomial> unflatten(const QVec& x) const
    {
        std::vector<Polynomial> v(ncomp);
        for (int c = 0; c < ncomp; ++c)
            for (size_t i = 0; i < mons.size(); ++i)
                if (x[coord(c, i)] != 0)
                    poly_add_inplace(v[c], mons[i], x[coord(c, i)]);
        return v;
    }
};

inline std::vector<Monomial> all_monomials(const CommRing& ring, int d)
{
    return graded_basis(ring, {}, d);
}

// Cyclic module V = A/I with a cached Groebner basis.
struct QuotientModule {
    std::string name;
    CommRing ring;
    std::vector<Polynomial> ideal; // as given
    std::vector<Polynomial> gb;    // completed

    void complete()
    {
        gb = gb_complete(ideal, ring.order);
    }
    Polynomial nf(const Polynomial& f) const { return reduce(f, gb, ring.order); }
};

// Augmented free resolution 0 <- V <- L_0 <- L_1 <- ... <- L_m <- 0 of a
// cyclic module; L_0 has rank one and the augmentation is the quotient map.
struct Resolution {
    QuotientModule module;
    std::vector<int> ranks;      // ranks of L_0..L_m
    std::vector<PolyMatrix> d;   // d[n] : L_{n+1} -> L_n

    int length() const { return (int)ranks.size() - 1; }
    int rank_at(int n) const { return (n >= 0 && n < (int)ranks.size()) ? ranks[n] : 0; }
    const PolyMatrix* map_at(int n) const { return (n >= 0 && n < (int)d.size()) ? &d[n] : nullptr; }

    int max_map_deg() const
    {
        int deg = 0;
        for (auto& mp : d)
            deg = std::max(deg, mp.max_deg());
        return deg;
    }
};

struct ComplexReport {
    bool ok = true;
    std::vector<std::string> failures;
};

// d_n . d_{n+1} = 0 and aug . d_0 = 0, exact arithmetic.
inline ComplexReport verify_complex(const Resolution& R)
{
    ComplexReport rep;
    const CommRing& ring = R.module.ring;
    if (!R.d.empty()) {
        for (int c = 0; c < R.d[0].cols; ++c) {
            Polynomial nf = R.module.nf(R.d[0].at(0, c));
            if (!nf.is_zero()) {
                rep.ok = false;
                rep.failures.push_back("aug*d0 column " + std::to_string(c) + " = " +
                                       ring.poly_str(nf));
            }
        }
    }
    for (size_t n = 0; n + 1 < R.d.size(); ++n) {
        PolyMatrix comp = pm_mul(R.d[n], R.d[n + 1]);
        for (int i = 0; i < comp.rows; ++i)
            for (int j = 0; j < comp.cols; ++j)
                if (!comp.at(i, j).is_zero()) {
                    rep.ok = false;
                    rep.failures.push_back("d" + std::to_string(n) + "*d" + std::to_string(n + 1) +
                                           " entry (" + std::to_string(i) + "," +
                                           std::to_string(j) + ") = " +
                                           ring.poly_str(comp.at(i, j)));
                }
    }
    return rep;
}

// Matrix of "apply M" from src-coordinates (deg <= dsrc) into
// tgt-coordinates (deg <= dsrc + deg M).
inline QMatrix pm_as_linear_map(const CommRing& ring, const PolyMatrix& M,
                                const PolyVecSpace& src, const PolyVecSpace& tgt)
{
    QMatrix out(tgt.dim(), src.dim());
    for (int c = 0; c < src.ncomp; ++c)
        for (size_t mi = 0; mi < src.mons.size(); ++mi) {
            std::vector<Polynomial> v(tgt.ncomp);
            for (int r = 0; r < tgt.ncomp; ++r)
                v[r] = poly_mul(M.at(r, c), poly_term(src.mons[mi], Rational(1)));
            QVec col = tgt.flatten(v);
            for (size_t i = 0; i < col.size(); ++i)
                out.at(i, src.coord(c, mi)) = col[i];
        }
    (void)ring;
    return out;
}

// Rank-based exactness check on degree slices.  Kernels are computed
// without truncation error (targets are widened by the map degree), and
// membership in the image is certified degree <= dbound.
inline ComplexReport verify_exactness(const Resolution& R, int dbound)
{
    ComplexReport rep;
    const CommRing& ring = R.module.ring;
    int mdeg = std::max(1, R.max_map_deg());
    if (dbound < mdeg) {
        rep.ok = false;
        rep.failures.push_back("degree bound below generator degree");
        return rep;
    }
    int din = dbound;           // degrees of candidate kernel elements
    int dwide = dbound + mdeg;  // widened target degree

    for (int pos = 0; pos <= R.length(); ++pos) {
        PolyVecSpace here(R.rank_at(pos), all_monomials(ring, din));
        // kernel of the outgoing map
        std::vector<QVec> ker;
        if (pos == 0) {
            // kernel of the augmentation: entries reducing to zero mod I
            auto qb = graded_basis(ring, R.module.gb, din);
            PolyVecSpace vq(1, qb);
            QMatrix M(vq.dim(), here.dim());
            for (size_t mi = 0; mi < here.mons.size(); ++mi) {
                Polynomial nf = R.module.nf(poly_term(here.mons[mi], Rational(1)));
                QVec col = vq.flatten({nf});
                for (size_t i = 0; i < col.size(); ++i)
                    M.at(i, mi) = col[i];
            }
            ker = kernel_basis(M);
        } else {
            const PolyMatrix& out = R.d[pos - 1];
            PolyVecSpace tgt(R.rank_at(pos - 1), all_monomials(ring, dwide));
            QMatrix M = pm_as_linear_map(ring, out, here, tgt);
            ker = kernel_basis(M);
        }
        // image of the incoming map
        EchelonBasis img(here.dim());
        if (pos < R.length()) {
            const PolyMatrix& in = R.d[pos];
            PolyVecSpace src(R.rank_at(pos + 1), all_monomials(ring, din));
            for (size_t j = 0; j < src.dim(); ++j) {
                QVec e(src.dim(), Rational(0));
                e[j] = 1;
                auto v = src.unflatten(e);
                std::vector<Polynomial> w(here.ncomp);
                for (int r = 0; r < here.ncomp; ++r) {
                    Polynomial s;
                    for (int c = 0; c < (int)v.size(); ++c)
                        s = poly_add(s, poly_mul(in.at(r, c), v[c]));
                    w[r] = s;
                }
                bool fits = true;
                for (auto& p : w)
                    if (p.degree() > din)
                        fits = false;
                if (fits)
                    img.insert(here.flatten(w));
            }
        }
        // every kernel element of degree <= dbound - mdeg must be hit
        for (auto& k : ker) {
            auto v = here.unflatten(k);
            int deg = -1;
            for (auto& p : v)
                deg = std::max(deg, p.degree());
            if (deg > din - mdeg)
                continue; // boundary slice, not certified either way
            if (!img.contains(k)) {
                rep.ok = false;
                std::string vs;
                for (auto& p : v)
                    vs += (vs.empty() ? "(" : ", ") + ring.poly_str(p);
                rep.failures.push_back("homology at position " + std::to_string(pos) +
                                       ": witness " + vs + ")");
            }
        }
    }
    return rep;
}

// Solves d_tgt * X = RHS for a polynomial matrix X with entries of degree
// <= dbound; canonical solution, or nullopt when inconsistent.
inline std::optional<PolyMatrix> solve_poly_matrix(const CommRing& ring, const PolyMatrix& d_tgt,
                                                   const PolyMatrix& rhs, int dbound)
{
    PolyVecSpace src(d_tgt.cols, all_monomials(ring, dbound));
    PolyVecSpace tgt(d_tgt.rows, all_monomials(ring, dbound + std::max(1, d_tgt.max_deg())));
    QMatrix M = pm_as_linear_map(ring, d_tgt, src, tgt);
    PolyMatrix X(d_tgt.cols, rhs.cols);
    for (int j = 0; j < rhs.cols; ++j) {
        std::vector<Polynomial> col(rhs.rows);
        for (int i = 0; i < rhs.rows; ++i)
            col[i] = rhs.at(i, j);
        auto x = solve(M, tgt.flatten(col));
        if (!x)
            return std::nullopt;
        auto v = src.unflatten(*x);
        for (int i = 0; i < d_tgt.cols; ++i)
            X.at(i, j) = v[i];
    }
    return X;
}

struct ChainMap {
    std::vector<PolyMatrix> comp; // comp[n] : L_n^src -> L_n^tgt
    bool truncated = false;       // ran past the shorter resolution
};

// Lifts an A-linear map of cyclic quotients V_i -> V_j (given by the
// polynomial g, v -> g*v) to a chain map of resolutions.
inline ChainMap lift_module_map(const Polynomial& g, const Resolution& Ri, const Resolution& Rj,
                                int depth, int dbound)
{
    const CommRing& ring = Ri.module.ring;
    for (auto& gen : Ri.module.ideal)
        if (!Rj.module.nf(poly_mul(g, gen)).is_zero())
            throw RingError("map is not defined on the quotients");
    ChainMap cm;
    PolyMatrix g0(1, 1);
    g0.at(0, 0) = g;
    cm.comp.push_back(g0);
    for (int n = 0; n < depth; ++n) {
        if (n >= (int)Ri.d.size()) {
            break; // source resolution ended; nothing left to lift
        }
        if (n >= (int)Rj.d.size()) {
            cm.truncated = true;
            cm.comp.push_back(PolyMatrix(0, Ri.rank_at(n + 1)));
            break;
        }
        PolyMatrix rhs = pm_mul(cm.comp[n], Ri.d[n]);
        auto X = solve_poly_matrix(ring, Rj.d[n], rhs, dbound);
        if (!X)
            throw RingError("chain lift failed at level " + std::to_string(n + 1));
        cm.comp.push_back(*X);
    }
    return cm;
}

// Chain homotopy between two lifts of the same map: returns s with
// (f - g)_n = d^tgt_n . s_{n+1}-free part... solves
// delta_0 = d^tgt_0 s_1, delta_{n} = d^tgt_n s_{n+1} + s_n d^src_{n-1}.
inline bool null_homotopy_between(const ChainMap& f, const ChainMap& g, const Resolution& Ri,
                                  const Resolution& Rj, int dbound)
{
    const CommRing& ring = Ri.module.ring;
    size_t levels = std::min(f.comp.size(), g.comp.size());
    std::vector<PolyMatrix> s; // s[n] : L_n^i -> L_{n+1}^j
    for (size_t n = 0; n < levels; ++n) {
        PolyMatrix delta = pm_sub(f.comp[n], g.comp[n]);
        if (n > 0 && !s.empty())
            delta = pm_sub(delta, pm_mul(s[n - 1], Ri.d[n - 1]));
        if (delta.is_zero() && n >= Rj.d.size()) {
            s.push_back(PolyMatrix(Rj.rank_at((int)n + 1), Ri.rank_at((int)n)));
            continue;
        }
        if (n >= Rj.d.size())
            return delta.is_zero();
        auto X = solve_poly_matrix(ring, Rj.d[n], delta, dbound);
        if (!X)
            return false;
        s.push_back(*X);
    }
    return true;
}

// Taylor complex of a monomial ideal (experimental; used for automatic
// resolutions when none is supplied).
inline Resolution taylor_resolution(const QuotientModule& mod)
{
    std::vector<Monomial> gens;
    for (auto& g : mod.gb) {
        if (g.terms.size() != 1)
            throw RingError("taylor resolution needs a monomial ideal");
        gens.push_back(g.terms.begin()->first);
    }
    size_t s = gens.size();
    Resolution R;
    R.module = mod;
    // level p has one generator per subset of size p
    std::vector<std::vector<std::vector<size_t>>> subsets(s + 1);
    subsets[0] = {{}};
    for (size_t p = 1; p <= s; ++p) {
        std::vector<std::vector<size_t>> cur;
        std::function<void(size_t, std::vector<size_t>&)> rec = [&](size_t start,
                                                                    std::vector<size_t>& acc) {
            if (acc.size() == p) {
                cur.push_back(acc);
                return;
            }
            for (size_t k = start; k < s; ++k) {
                acc.push_back(k);
                rec(k + 1, acc);
                acc.pop_back();
            }
        };
        std::vector<size_t> acc;
        rec(0, acc);
        subsets[p] = cur;
    }
    auto lcm_of = [&](const std::vector<size_t>& S) {
        Monomial l(mod.ring.nvars());
        for (auto i : S)
            l = mon_lcm(l, gens[i]);
        return l;
    };
    for (size_t p = 0; p <= s; ++p)
        R.ranks.push_back((int)subsets[p].size());
    for (size_t p = 0; p + 1 <= s; ++p) {
        PolyMatrix D((int)subsets[p].size(), (int)subsets[p + 1].size());
        for (size_t c = 0; c < subsets[p + 1].size(); ++c) {
            auto& S = subsets[p + 1][c];
            Monomial lS = lcm_of(S);
            for (size_t k = 0; k < S.size(); ++k) {
                auto T = S;
                T.erase(T.begin() + k);
                // find T's index
                size_t r = 0;
                while (subsets[p][r] != T)
                    ++r;
                Rational sign = (k % 2 == 0) ? 1 : -1;
                D.at((int)r, (int)c) = poly_term(mon_div(lS, lcm_of(T)), sign);
            }
        }
        R.d.push_back(D);
    }
    return R;
}

}  // namespace ncdef
