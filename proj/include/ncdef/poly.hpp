#pragma once

#include "ncdef/rational.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace ncdef {

struct RingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exponent vector; length = number of ring variables.
struct Monomial {
    std::vector<unsigned> e;

    explicit Monomial(size_t nvars = 0) : e(nvars, 0) {}
    int deg() const
    {
        int d = 0;
        for (auto x : e)
            d += (int)x;
        return d;
    }
    bool is_one() const { return deg() == 0; }
    bool operator==(const Monomial& o) const { return e == o.e; }
    // storage order only (maps); term order is separate
    bool operator<(const Monomial& o) const { return e < o.e; }
};

inline Monomial mon_mul(const Monomial& a, const Monomial& b)
{
    Monomial c = a;
    for (size_t i = 0; i < c.e.size(); ++i)
        c.e[i] += b.e[i];
    return c;
}

inline bool mon_divides(const Monomial& a, const Monomial& b)
{
    for (size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > b.e[i])
            return false;
    return true;
}

inline Monomial mon_div(const Monomial& a, const Monomial& b)
{
    Monomial c = a;
    for (size_t i = 0; i < c.e.size(); ++i)
        c.e[i] -= b.e[i];
    return c;
}

inline Monomial mon_lcm(const Monomial& a, const Monomial& b)
{
    Monomial c = a;
    for (size_t i = 0; i < c.e.size(); ++i)
        c.e[i] = std::max(c.e[i], b.e[i]);
    return c;
}

enum class MonOrder { deglex, degrevlex, lex };

inline bool mon_less(const Monomial& a, const Monomial& b, MonOrder o)
{
    switch (o) {
    case MonOrder::lex:
        return a.e < b.e;
    case MonOrder::deglex: {
        int da = a.deg(), db = b.deg();
        if (da != db)
            return da < db;
        return a.e < b.e;
    }
    case MonOrder::degrevlex: {
        int da = a.deg(), db = b.deg();
        if (da != db)
            return da < db;
        for (size_t i = a.e.size(); i-- > 0;)
            if (a.e[i] != b.e[i])
                return a.e[i] > b.e[i];
        return false;
    }
    }
    return false;
}

// Exact multivariate polynomial; no zero coefficients stored. The zero
// polynomial is the empty term map (degree() reports -1 for it).
struct Polynomial {
    std::map<Monomial, Rational> terms;

    bool is_zero() const { return terms.empty(); }
    int degree() const
    {
        int d = -1;
        for (auto& [m, c] : terms)
            d = std::max(d, m.deg());
        return d;
    }
    bool operator==(const Polynomial& o) const { return terms == o.terms; }
};

inline Polynomial poly_zero() { return {}; }

inline Polynomial poly_term(const Monomial& m, const Rational& c)
{
    Polynomial p;
    if (c != 0)
        p.terms[m] = c;
    return p;
}

inline Polynomial poly_const(size_t nvars, const Rational& c)
{
    return poly_term(Monomial(nvars), c);
}

inline void poly_add_inplace(Polynomial& f, const Monomial& m, const Rational& c)
{
    if (c == 0)
        return;
    auto it = f.terms.find(m);
    if (it == f.terms.end()) {
        f.terms.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0)
            f.terms.erase(it);
    }
}

inline Polynomial poly_add(const Polynomial& f, const Polynomial& g)
{
    Polynomial h = f;
    for (auto& [m, c] : g.terms)
        poly_add_inplace(h, m, c);
    return h;
}

inline Polynomial poly_neg(const Polynomial& f)
{
    Polynomial h = f;
    for (auto& [m, c] : h.terms)
        c = -c;
    return h;
}

inline Polynomial poly_sub(const Polynomial& f, const Polynomial& g)
{
    return poly_add(f, poly_neg(g));
}

inline Polynomial poly_scale(const Polynomial& f, const Rational& c)
{
    Polynomial h;
    if (c == 0)
        return h;
    for (auto& [m, k] : f.terms)
        h.terms[m] = k * c;
    return h;
}

inline Polynomial poly_mul(const Polynomial& f, const Polynomial& g)
{
    Polynomial h;
    for (auto& [mf, cf] : f.terms)
        for (auto& [mg, cg] : g.terms)
            poly_add_inplace(h, mon_mul(mf, mg), cf * cg);
    return h;
}

// Drop every term of total degree > d.
inline Polynomial poly_truncate(const Polynomial& f, int d)
{
    Polynomial h;
    for (auto& [m, c] : f.terms)
        if (m.deg() <= d)
            h.terms[m] = c;
    return h;
}

inline Polynomial poly_homog_part(const Polynomial& f, int d)
{
    Polynomial h;
    for (auto& [m, c] : f.terms)
        if (m.deg() == d)
            h.terms[m] = c;
    return h;
}

inline const Monomial* poly_leading(const Polynomial& f, MonOrder o)
{
    const Monomial* lead = nullptr;
    for (auto& [m, c] : f.terms)
        if (!lead || mon_less(*lead, m, o))
            lead = &m;
    return lead;
}

// Commutative polynomial ring presentation: named variables, a term order
// and (optionally) ideal generators for working in the quotient.
struct CommRing {
    std::vector<std::string> vars;
    MonOrder order = MonOrder::deglex;
    std::vector<Polynomial> ideal; // generators; gb_complete() makes them a GB

    size_t nvars() const { return vars.size(); }

    int var_index(const std::string& name) const
    {
        for (size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name)
                return (int)i;
        return -1;
    }

    Monomial var_mon(size_t i, unsigned k = 1) const
    {
        Monomial m(nvars());
        m.e[i] = k;
        return m;
    }

    std::string mon_str(const Monomial& m) const
    {
        std::string s;
        for (size_t i = 0; i < m.e.size(); ++i) {
            if (m.e[i] == 0)
                continue;
            if (!s.empty())
                s += "*";
            s += vars[i];
            if (m.e[i] > 1)
                s += "^" + std::to_string(m.e[i]);
        }
        return s;
    }

    std::string poly_str(const Polynomial& f) const
    {
        if (f.is_zero())
            return "0";
        // print highest term first, per the ring order
        std::vector<const Monomial*> ms;
        for (auto& [m, c] : f.terms)
            ms.push_back(&m);
        std::sort(ms.begin(), ms.end(),
                  [&](const Monomial* a, const Monomial* b) { return mon_less(*b, *a, order); });
        std::string s;
        for (auto* m : ms) {
            Rational c = f.terms.at(*m);
            std::string cs = rat_str(c < 0 ? -c : c);
            bool neg = c < 0;
            if (s.empty())
                s += neg ? "-" : "";
            else
                s += neg ? " - " : " + ";
            if (m->is_one()) {
                s += cs;
            } else {
                if (cs != "1")
                    s += cs + "*";
                s += mon_str(*m);
            }
        }
        return s;
    }
};

// --- polynomial text grammar -------------------------------------------
// term    := coeff | coeff '*' monom | monom
// coeff   := int | int '/' int
// monom   := var ('^' int)? ('*' var ('^' int)?)*
// poly    := term (('+'|'-') term)*

namespace detail {

struct PolyLexer {
    const std::string& s;
    size_t i = 0;
    explicit PolyLexer(const std::string& str) : s(str) {}
    void skip()
    {
        while (i < s.size() && isspace((unsigned char)s[i]))
            ++i;
    }
    bool eof()
    {
        skip();
        return i >= s.size();
    }
    char peek()
    {
        skip();
        return i < s.size() ? s[i] : '\0';
    }
    char get()
    {
        skip();
        return s[i++];
    }
    std::string ident()
    {
        skip();
        size_t j = i;
        while (j < s.size() && (isalnum((unsigned char)s[j]) || s[j] == '_'))
            ++j;
        std::string r = s.substr(i, j - i);
        i = j;
        return r;
    }
    std::string number()
    {
        skip();
        size_t j = i;
        while (j < s.size() && isdigit((unsigned char)s[j]))
            ++j;
        std::string r = s.substr(i, j - i);
        i = j;
        return r;
    }
};

} // namespace detail

inline Polynomial parse_poly(const CommRing& ring, const std::string& text)
{
    detail::PolyLexer lx(text);
    Polynomial out;
    bool first = true;
    while (!lx.eof()) {
        Rational sign = 1;
        char c = lx.peek();
        if (c == '+' || c == '-') {
            lx.get();
            sign = (c == '-') ? -1 : 1;
        } else if (!first) {
            throw RingError("expected '+' or '-' in polynomial: " + text);
        }
        first = false;
        // one term
        Rational coef = 1;
        Monomial mon(ring.nvars());
        bool any = false;
        bool expect_factor = true;
        while (expect_factor) {
            char p = lx.peek();
            if (isdigit((unsigned char)p)) {
                std::string n = lx.number();
                if (lx.peek() == '/') {
                    lx.get();
                    std::string d = lx.number();
                    if (d.empty())
                        throw RingError("bad rational in polynomial: " + text);
                    coef *= rat_parse(n + "/" + d);
                } else {
                    coef *= rat_parse(n);
                }
                any = true;
            } else if (isalpha((unsigned char)p) || p == '_') {
                std::string name = lx.ident();
                int vi = ring.var_index(name);
                if (vi < 0)
                    throw RingError("unknown variable '" + name + "'");
                unsigned k = 1;
                if (lx.peek() == '^') {
                    lx.get();
                    std::string n = lx.number();
                    if (n.empty())
                        throw RingError("bad exponent in polynomial: " + text);
                    k = (unsigned)std::stoul(n);
                }
                mon.e[vi] += k;
                any = true;
            } else {
                throw RingError("unexpected character in polynomial: " + text);
            }
            if (lx.peek() == '*') {
                lx.get();
            } else {
                expect_factor = false;
            }
        }
        if (!any)
            throw RingError("empty term in polynomial: " + text);
        poly_add_inplace(out, mon, sign * coef);
    }
    return out;
}

}  // namespace ncdef
