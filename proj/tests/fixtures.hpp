#pragma once

// Shared test fixtures: the worked geometries used across the suites.

#include "ncdef/yoneda.hpp"

namespace fx {

using namespace ncdef;

inline CommRing plane()
{
    CommRing r;
    r.vars = {"x", "y"};
    return r;
}

inline CommRing line()
{
    CommRing r;
    r.vars = {"x"};
    return r;
}

inline QuotientModule module_of(const CommRing& ring, std::vector<std::string> gens,
                                const std::string& name)
{
    QuotientModule q;
    q.name = name;
    q.ring = ring;
    for (auto& g : gens)
        q.ideal.push_back(parse_poly(ring, g));
    q.complete();
    return q;
}

// 0 <- A/(y) <- A <- A <- 0
inline Resolution res_axis(const CommRing& ring)
{
    Resolution R;
    R.module = module_of(ring, {"y"}, "V1");
    R.ranks = {1, 1};
    PolyMatrix d0(1, 1);
    d0.at(0, 0) = parse_poly(ring, "y");
    R.d = {d0};
    return R;
}

// 0 <- A/(x,y) <- A <- A^2 <- A <- 0
inline Resolution res_origin(const CommRing& ring)
{
    Resolution R;
    R.module = module_of(ring, {"x", "y"}, "V2");
    R.ranks = {1, 2, 1};
    PolyMatrix d0(1, 2), d1(2, 1);
    d0.at(0, 0) = parse_poly(ring, "x");
    d0.at(0, 1) = parse_poly(ring, "y");
    d1.at(0, 0) = parse_poly(ring, "y");
    d1.at(1, 0) = parse_poly(ring, "-x");
    R.d = {d0, d1};
    return R;
}

// the pair (line, point) in the plane: V1 = A/(y), V2 = A/(x,y)
inline DiagramData line_point(int dbound = 6)
{
    DiagramData D;
    D.ring = plane();
    D.res = {res_axis(D.ring), res_origin(D.ring)};
    D.dbound = dbound;
    return D;
}

// the fixed line and a point on it: A = k[x], V1 = A, V2 = A/(x)
inline DiagramData fixed_line_point(int dbound = 6)
{
    DiagramData D;
    D.ring = line();
    Resolution R1;
    R1.module = module_of(D.ring, {}, "V1");
    R1.ranks = {1};
    Resolution R2;
    R2.module = module_of(D.ring, {"x"}, "V2");
    R2.ranks = {1, 1};
    PolyMatrix d0(1, 1);
    d0.at(0, 0) = parse_poly(D.ring, "x");
    R2.d = {d0};
    D.res = {R1, R2};
    D.dbound = dbound;
    DiagramArrow g;
    g.src = 1;
    g.tgt = 2;
    g.label = 1;
    g.g = parse_poly(D.ring, "1");
    g.lift = lift_module_map(g.g, R1, R2, 1, dbound);
    D.arrows = {g};
    return D;
}

// line and point with the incidence arrow (point on the line)
inline DiagramData incidence_line_point(int dbound = 6)
{
    DiagramData D = line_point(dbound);
    DiagramArrow g;
    g.src = 1;
    g.tgt = 2;
    g.label = 1;
    g.g = parse_poly(D.ring, "1");
    g.lift = lift_module_map(g.g, D.res[0], D.res[1], 2, dbound);
    D.arrows = {g};
    return D;
}

// the five tangent representatives of the line-point problem, in hull
// variable order: t11, t12, t21, t22(1), t22(2)
inline std::vector<YCochain> line_point_tangent(const DiagramData& D)
{
    const CommRing& ring = D.ring;
    std::vector<YCochain> reps;
    {
        YCochain t11 = y_zero(D, 1, 1, 1);
        t11.comp[0].at(0, 0) = parse_poly(ring, "x");
        reps.push_back(t11);
    }
    {
        YCochain t12 = y_zero(D, 1, 1, 2);
        t12.comp[0].at(0, 0) = parse_poly(ring, "1");
        reps.push_back(t12);
    }
    {
        YCochain t21 = y_zero(D, 1, 2, 1);
        t21.comp[0].at(0, 0) = parse_poly(ring, "1");
        t21.comp[1].at(0, 0) = parse_poly(ring, "-1");
        reps.push_back(t21);
    }
    {
        YCochain a = y_zero(D, 1, 2, 2);
        a.comp[0].at(0, 0) = parse_poly(ring, "1");
        a.comp[1].at(1, 0) = parse_poly(ring, "-1");
        reps.push_back(a);
    }
    {
        YCochain b = y_zero(D, 1, 2, 2);
        b.comp[0].at(0, 1) = parse_poly(ring, "1");
        b.comp[1].at(0, 0) = parse_poly(ring, "1");
        reps.push_back(b);
    }
    return reps;
}

}  // namespace fx
