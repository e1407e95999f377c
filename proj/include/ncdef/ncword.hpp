#pragma once

#include "ncdef/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncdef {

struct NCError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A generator of a free matrix algebra / path algebra over k^r.
// Points are 1-based.  kind 0 = matrix variable t, kind 1 = arrow g.
struct NCLetter {
    int src = 0, tgt = 0, label = 1;
    int kind = 0;
    std::string name; // canonical print name, e.g. "t22(2)"
};

// Index-composable word; the empty word at point i stands for e_i.
struct Word {
    int base = 0;            // point of e_i when letters empty
    std::vector<int> ls;     // letter ids into the ambient spec

    bool empty() const { return ls.empty(); }
    size_t len() const { return ls.size(); }
};

struct NCAlgebraSpec {
    int r = 1;
    std::vector<NCLetter> letters;
    int trunc = 4;                       // words longer than this vanish
    std::vector<int> commutative_points; // diagonal blocks declared commutative

    int src_of(const Word& w) const { return w.empty() ? w.base : letters[w.ls.front()].src; }
    int tgt_of(const Word& w) const { return w.empty() ? w.base : letters[w.ls.back()].tgt; }

    bool composable(const Word& a, const Word& b) const { return tgt_of(a) == src_of(b); }

    int find_letter(const std::string& name) const
    {
        for (size_t i = 0; i < letters.size(); ++i)
            if (letters[i].name == name)
                return (int)i;
        return -1;
    }

    // letters of one block, in label order
    std::vector<int> block_letters(int i, int j, int kind = 0) const
    {
        std::vector<int> out;
        for (size_t k = 0; k < letters.size(); ++k)
            if (letters[k].src == i && letters[k].tgt == j && letters[k].kind == kind)
                out.push_back((int)k);
        return out;
    }

    // length first, then letter-wise by (src, tgt, kind, label)
    int word_cmp(const Word& a, const Word& b) const
    {
        if (a.len() != b.len())
            return a.len() < b.len() ? -1 : 1;
        if (a.empty())
            return a.base == b.base ? 0 : (a.base < b.base ? -1 : 1);
        for (size_t k = 0; k < a.len(); ++k) {
            const NCLetter &x = letters[a.ls[k]], &y = letters[b.ls[k]];
            auto tx = std::tuple(x.src, x.tgt, x.kind, x.label);
            auto ty = std::tuple(y.src, y.tgt, y.kind, y.label);
            if (tx != ty)
                return tx < ty ? -1 : 1;
        }
        return 0;
    }

    std::string word_str(const Word& w) const
    {
        if (w.empty())
            return "e" + std::to_string(w.base);
        std::string s;
        for (auto id : w.ls) {
            if (!s.empty())
                s += "*";
            s += letters[id].name;
        }
        return s;
    }
};

struct WordLess {
    const NCAlgebraSpec* spec;
    bool operator()(const Word& a, const Word& b) const { return spec->word_cmp(a, b) < 0; }
};

// Rational combination of index-composable words.
struct NCElement {
    const NCAlgebraSpec* spec = nullptr;
    std::map<Word, Rational, WordLess> terms;

    explicit NCElement(const NCAlgebraSpec* s = nullptr) : spec(s), terms(WordLess{s}) {}

    bool is_zero() const { return terms.empty(); }

    void add(const Word& w, const Rational& c)
    {
        if (c == 0)
            return;
        auto it = terms.find(w);
        if (it == terms.end()) {
            terms.emplace(w, c);
        } else {
            it->second += c;
            if (it->second == 0)
                terms.erase(it);
        }
    }

    const Word* leading() const
    {
        if (terms.empty())
            return nullptr;
        return &terms.rbegin()->first; // largest under the word order
    }

    bool operator==(const NCElement& o) const
    {
        if (terms.size() != o.terms.size())
            return false;
        auto a = terms.begin();
        auto b = o.terms.begin();
        for (; a != terms.end(); ++a, ++b)
            if (spec->word_cmp(a->first, b->first) != 0 || a->second != b->second)
                return false;
        return true;
    }
};

inline NCElement nc_scale(const NCElement& f, const Rational& c)
{
    NCElement h(f.spec);
    if (c == 0)
        return h;
    for (auto& [w, k] : f.terms)
        h.add(w, k * c);
    return h;
}

inline NCElement nc_add(const NCElement& f, const NCElement& g)
{
    NCElement h = f;
    for (auto& [w, c] : g.terms)
        h.add(w, c);
    return h;
}

inline NCElement nc_sub(const NCElement& f, const NCElement& g)
{
    return nc_add(f, nc_scale(g, Rational(-1)));
}

// Does w contain f as a contiguous factor?  Returns position or -1.
inline int word_find_factor(const NCAlgebraSpec& spec, const Word& w, const Word& f)
{
    if (f.empty() || f.len() > w.len())
        return -1;
    for (size_t pos = 0; pos + f.len() <= w.len(); ++pos) {
        bool ok = true;
        for (size_t k = 0; k < f.len() && ok; ++k)
            ok = (w.ls[pos + k] == f.ls[k]);
        if (ok)
            return (int)pos;
    }
    (void)spec;
    return -1;
}

// Rewrite f by the oriented rules (leading word of each relation is its
// largest term); words longer than N are dropped.  One-pass confluence is
// not attempted: rules fire in relation order at the leftmost match, which
// together with the descending term order guarantees termination.
inline NCElement nc_reduce(const NCElement& f, const std::vector<NCElement>& rels, int N)
{
    const NCAlgebraSpec* spec = f.spec;
    NCElement out(spec);
    NCElement work(spec);
    for (auto& [w, c] : f.terms)
        if ((int)w.len() <= N)
            work.add(w, c);
    while (!work.is_zero()) {
        Word w = work.terms.rbegin()->first;
        Rational c = work.terms.rbegin()->second;
        bool fired = false;
        for (auto& rel : rels) {
            if (rel.is_zero())
                continue;
            const Word* lead = rel.leading();
            int pos = word_find_factor(*spec, w, *lead);
            if (pos < 0)
                continue;
            Rational lc = rel.terms.at(*lead);
            // w = a * lead * b  ->  -(1/lc) * sum_{t != lead} c_t a*t*b
            work.add(w, -c);
            for (auto& [t, ct] : rel.terms) {
                if (spec->word_cmp(t, *lead) == 0)
                    continue;
                Word nw;
                nw.ls.assign(w.ls.begin(), w.ls.begin() + pos);
                for (auto id : t.ls)
                    nw.ls.push_back(id);
                for (size_t k = pos + lead->len(); k < w.len(); ++k)
                    nw.ls.push_back(w.ls[k]);
                if (nw.ls.empty())
                    nw.base = spec->src_of(w);
                if ((int)nw.len() <= N)
                    work.add(nw, -c * ct / lc);
            }
            fired = true;
            break;
        }
        if (!fired) {
            out.add(w, c);
            work.add(w, -c);
        }
    }
    return out;
}

// Blockwise product with word concatenation; non-composable pairs vanish.
inline NCElement nc_mul(const NCElement& a, const NCElement& b,
                        const std::vector<NCElement>& rels = {}, int N = -1)
{
    if (a.spec != b.spec)
        throw NCError("nc_mul: ambient spec mismatch");
    const NCAlgebraSpec* spec = a.spec;
    if (N < 0)
        N = spec->trunc;
    NCElement h(spec);
    for (auto& [u, cu] : a.terms) {
        for (auto& [v, cv] : b.terms) {
            if (!spec->composable(u, v))
                continue;
            Word w;
            if (u.empty() && v.empty()) {
                w.base = u.base;
            } else {
                w.ls = u.ls;
                for (auto id : v.ls)
                    w.ls.push_back(id);
                if (w.ls.empty())
                    w.base = u.base;
            }
            if ((int)w.len() <= N)
                h.add(w, cu * cv);
        }
    }
    return rels.empty() ? h : nc_reduce(h, rels, N);
}

inline std::string nc_str(const NCElement& f)
{
    if (f.is_zero())
        return "0";
    std::string s;
    // largest word first
    for (auto it = f.terms.rbegin(); it != f.terms.rend(); ++it) {
        const Rational& c = it->second;
        Rational ac = c < 0 ? -c : c;
        if (s.empty())
            s += (c < 0) ? "-" : "";
        else
            s += (c < 0) ? " - " : " + ";
        if (ac != 1 || it->first.empty())
            s += rat_str(ac) + (it->first.empty() ? "*" : "*");
        s += f.spec->word_str(it->first);
    }
    return s;
}

inline std::string letter_name(int i, int j, int label, bool multi, int kind = 0)
{
    std::string base = (kind == 0 ? "t" : "g") + std::to_string(i) + std::to_string(j);
    if (multi || kind == 1)
        base += "(" + std::to_string(label) + ")";
    return base;
}

// Free matrix algebra on d[i][j] variables per block (d is r x r, counts).
inline NCAlgebraSpec free_matrix_algebra(int r, const std::vector<std::vector<int>>& d, int trunc = 4)
{
    NCAlgebraSpec spec;
    spec.r = r;
    spec.trunc = trunc;
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= r; ++j)
            for (int l = 1; l <= d[i - 1][j - 1]; ++l)
                spec.letters.push_back(
                    {i, j, l, 0, letter_name(i, j, l, d[i - 1][j - 1] > 1)});
    return spec;
}

struct QuiverArrow {
    int src = 0, tgt = 0, label = 1;
};

// Quiver path algebra k[Gamma]: arrows as degree-one generators, e_i as
// empty paths; words of length <= trunc enumerate paths.
inline NCAlgebraSpec path_algebra(int r, const std::vector<QuiverArrow>& arrows, int trunc = 4)
{
    NCAlgebraSpec spec;
    spec.r = r;
    spec.trunc = trunc;
    std::map<std::pair<int, int>, int> counts;
    for (auto& a : arrows)
        counts[{a.src, a.tgt}]++;
    for (auto& a : arrows) {
        if (a.src < 1 || a.src > r || a.tgt < 1 || a.tgt > r)
            throw NCError("path_algebra: dangling arrow endpoint");
        spec.letters.push_back(
            {a.src, a.tgt, a.label, 1, letter_name(a.src, a.tgt, a.label, counts[{a.src, a.tgt}] > 1, 1)});
    }
    return spec;
}

// Count of index-composable words from i to j with length <= maxlen.
inline int path_count(const NCAlgebraSpec& spec, int i, int j, int maxlen)
{
    // dp over word length
    std::vector<std::vector<long>> cur(spec.r + 1, std::vector<long>(spec.r + 1, 0));
    for (int p = 1; p <= spec.r; ++p)
        cur[p][p] = 1;
    std::vector<std::vector<long>> total = cur;
    for (int len = 1; len <= maxlen; ++len) {
        std::vector<std::vector<long>> next(spec.r + 1, std::vector<long>(spec.r + 1, 0));
        for (int a = 1; a <= spec.r; ++a)
            for (int b = 1; b <= spec.r; ++b) {
                if (!cur[a][b])
                    continue;
                for (auto& l : spec.letters)
                    if (l.src == b)
                        next[a][l.tgt] += cur[a][b];
            }
        for (int a = 1; a <= spec.r; ++a)
            for (int b = 1; b <= spec.r; ++b)
                total[a][b] += next[a][b];
        cur = next;
    }
    return (int)total[i][j];
}

// Test algebra: k[Gamma] tensor_{k^r} (t_ij)/(t_ij)^2 -- arrows plus one
// matrix variable per pair, radical squared zero.
inline NCAlgebraSpec test_algebra(int r, const std::vector<QuiverArrow>& gamma)
{
    NCAlgebraSpec spec = path_algebra(r, gamma, 1);
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= r; ++j)
            spec.letters.push_back({i, j, 1, 0, letter_name(i, j, 1, false)});
    spec.trunc = 1; // rad^2 = 0
    return spec;
}

inline int test_algebra_dim(const NCAlgebraSpec& spec)
{
    return spec.r + (int)spec.letters.size();
}

// Generators with point indices plus a finite relation set in the free
// matrix algebra, truncated at `order`.
struct HullPresentation {
    NCAlgebraSpec spec;            // tangent variables as letters
    std::vector<NCElement> relations;
    int order = 0;
    bool converged = false;

    std::string block_str(int i, int j) const
    {
        auto ls = spec.block_letters(i, j);
        if (i == j) {
            if (ls.empty())
                return "k";
            std::string vars;
            for (auto id : ls) {
                if (!vars.empty())
                    vars += ",";
                vars += spec.letters[id].name;
            }
            bool comm = ls.size() == 1;
            for (auto p : spec.commutative_points)
                if (p == i)
                    comm = true;
            return comm ? ("k[" + vars + "]") : ("k<" + vars + ">");
        }
        if (ls.empty())
            return "0";
        std::string vars;
        for (auto id : ls) {
            if (!vars.empty())
                vars += ",";
            vars += spec.letters[id].name;
        }
        return vars;
    }

    std::string to_string() const
    {
        std::string s = "[ ";
        for (int i = 1; i <= spec.r; ++i) {
            for (int j = 1; j <= spec.r; ++j) {
                s += block_str(i, j);
                if (j < spec.r)
                    s += "  ";
            }
            if (i < spec.r)
                s += " ; ";
        }
        s += " ]";
        if (!relations.empty()) {
            s += " / (";
            for (size_t k = 0; k < relations.size(); ++k) {
                if (k)
                    s += ", ";
                s += nc_str(relations[k]);
            }
            s += ")";
        }
        return s;
    }
};

// Parses words/elements like "t22(2)*t21*t11 - t21*t12" over spec's letters.
inline NCElement parse_nc(const NCAlgebraSpec& spec, const std::string& text)
{
    NCElement out(&spec);
    size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && isspace((unsigned char)text[i]))
            ++i;
    };
    bool first = true;
    while (true) {
        skip();
        if (i >= text.size())
            break;
        Rational sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            throw NCError("expected '+' or '-' in: " + text);
        }
        first = false;
        Rational coef = 1;
        Word w;
        bool any = false, have_letters = false;
        while (true) {
            skip();
            if (i < text.size() && isdigit((unsigned char)text[i])) {
                size_t j = i;
                while (j < text.size() && (isdigit((unsigned char)text[j]) || text[j] == '/'))
                    ++j;
                coef *= rat_parse(text.substr(i, j - i));
                i = j;
                any = true;
            } else if (i < text.size() &&
                       (isalpha((unsigned char)text[i]) || text[i] == '_')) {
                size_t j = i;
                while (j < text.size() && (isalnum((unsigned char)text[j]) || text[j] == '_'))
                    ++j;
                std::string name = text.substr(i, j - i);
                i = j;
                skip();
                if (i < text.size() && text[i] == '(') {
                    size_t k = text.find(')', i);
                    if (k == std::string::npos)
                        throw NCError("unbalanced '(' in: " + text);
                    name += text.substr(i, k - i + 1);
                    i = k + 1;
                }
                int id = spec.find_letter(name);
                if (id < 0)
                    throw NCError("unknown generator '" + name + "'");
                if (have_letters && spec.letters[w.ls.back()].tgt != spec.letters[id].src)
                    throw NCError("non-composable word in: " + text);
                w.ls.push_back(id);
                any = have_letters = true;
            } else {
                break;
            }
            skip();
            if (i < text.size() && text[i] == '*') {
                ++i;
                continue;
            }
            break;
        }
        if (!any)
            throw NCError("empty term in: " + text);
        if (!have_letters)
            throw NCError("scalar terms need a point: " + text);
        out.add(w, sign * coef);
    }
    return out;
}

}  // namespace ncdef
