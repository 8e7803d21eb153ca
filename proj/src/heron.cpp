#include "tetsym/heron.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tetsym/errors.hpp"

namespace tetsym {

bool satisfies_triangle_inequality(double a, double b, double c) {
    double s[3] = {a, b, c};
    std::sort(s, s + 3);
    return s[0] + s[1] >= s[2] * (1.0 - 1e-12);
}

namespace {

void check_triangle(double a, double b, double c, const char* what) {
    if (!(a > 0.0 && b > 0.0 && c > 0.0))
        throw NonPositiveEdge(std::string(what) + ": side lengths must be positive");
    if (!satisfies_triangle_inequality(a, b, c))
        throw InvalidTriangle(std::string(what) + ": triangle inequality violated");
}

double sq(double x) { return x * x; }

} // namespace

double heron_triangle_area(double a, double b, double c) {
    check_triangle(a, b, c, "heron_triangle_area");
    // Kahan's ordering: a >= b >= c.
    double s[3] = {a, b, c};
    std::sort(s, s + 3);
    c = s[0]; b = s[1]; a = s[2];
    double t1 = a + (b + c);
    double t2 = c - (a - b);
    double t3 = c + (a - b);
    double t4 = a + (b - c);
    if (t2 < 0.0) t2 = 0.0; // sub-tolerance deficit already screened above
    return 0.25 * std::sqrt(t1 * t2 * t3 * t4);
}

double isosceles_volume_sq(double a, double b, double c) {
    double qa = a * a, qb = b * b, qc = c * c;
    return (qa + qb - qc) * (qa - qb + qc) * (-qa + qb + qc) / 72.0;
}

ReversibleParams::ReversibleParams(double a_, double b_, double c_, double d_)
    : a(a_), b(b_), c(c_), d(d_) {
    check_triangle(a, b, c, "ReversibleParams(a,b,c)");
    check_triangle(a, b, d, "ReversibleParams(a,b,d)");
}

double ReversibleParams::max_length() const { return std::max({a, b, c, d}); }

double reversible_volume_sq(const ReversibleParams& p) {
    double f1 = (p.c * p.c) * (p.d * p.d) - sq(p.a * p.a - p.b * p.b);
    double f2 = p.a * p.a + p.b * p.b - (p.c * p.c + p.d * p.d) / 2.0;
    return f1 * f2 / 72.0;
}

std::array<double, 3> reversible_volume_factors(const ReversibleParams& p) {
    double cd = p.c * p.d;
    double qa = p.a * p.a, qb = p.b * p.b;
    return {cd + qa - qb, cd - qa + qb, qa + qb - (p.c * p.c + p.d * p.d) / 2.0};
}

double reversible_volume_sq_factored(const ReversibleParams& p) {
    auto f = reversible_volume_factors(p);
    return f[0] * f[1] * f[2] / 72.0;
}

RealizabilityVerdict realizability(const ReversibleParams& p) {
    RealizabilityVerdict v;
    v.factor1 = (p.c * p.c) * (p.d * p.d) - sq(p.a * p.a - p.b * p.b);
    v.factor2 = p.a * p.a + p.b * p.b - (p.c * p.c + p.d * p.d) / 2.0;

    double L = p.max_length();
    double L2 = L * L;
    double floor1 = kManifoldFloor * L2 * L2; // factor1 is degree 4 in length
    double floor2 = kManifoldFloor * L2;      // factor2 is degree 2

    v.realizable = v.factor1 >= -floor1 && v.factor2 >= -floor2;
    bool on_trap = std::abs(v.factor1) <= floor1;
    bool on_para = std::abs(v.factor2) <= floor2;
    v.kind = on_para && on_trap ? DegeneracyKind::Both
           : on_para            ? DegeneracyKind::Parallelogram
           : on_trap            ? DegeneracyKind::Trapezoid
                                : DegeneracyKind::None;
    return v;
}

namespace {

Tetrahedron build_reversible_impl(const ReversibleParams& p, bool allow_degenerate) {
    double x = (p.b * p.b - p.a * p.a) / (2.0 * p.c);
    double y2 = p.d * p.d / 4.0 - x * x;
    double h2 = (p.a * p.a + p.b * p.b) / 2.0 - (p.c * p.c + p.d * p.d) / 4.0;

    double L = p.max_length();
    double tol2 = kManifoldFloor * L * L;
    if (y2 < -tol2 || h2 < -tol2)
        throw NotRealizable("build_reversible: parameters do not embed in 3-space");
    double y = std::sqrt(std::max(0.0, y2));
    double h = std::sqrt(std::max(0.0, h2));

    Vec3 v0{p.c / 2.0, 0.0, 0.0};
    Vec3 v1{-p.c / 2.0, 0.0, 0.0};
    Vec3 v2{x, y, h};
    Vec3 v3{-x, -y, h};
    if (allow_degenerate) return Tetrahedron::allow_degenerate(v0, v1, v2, v3);
    return Tetrahedron(v0, v1, v2, v3);
}

} // namespace

Tetrahedron build_reversible(const ReversibleParams& p) {
    return build_reversible_impl(p, false);
}

Tetrahedron build_reversible_allow_degenerate(const ReversibleParams& p) {
    return build_reversible_impl(p, true);
}

EdgeLengths edge_set(const ReversibleParams& p) {
    return EdgeLengths(p.c, p.a, p.b, p.b, p.a, p.d);
}

const char* regge_action_name(ReggeAction a) {
    switch (a) {
        case ReggeAction::FixCD: return "fix-cd";
        case ReggeAction::FixAA: return "fix-aa";
        default: return "fix-bb";
    }
}

ReversibleParams regge_transform(const ReversibleParams& p, ReggeAction action) {
    double a = p.a, b = p.b, c = p.c, d = p.d;
    double na, nb, nc, nd;
    switch (action) {
        case ReggeAction::FixCD: {
            // s = a + b; a,a,b,b -> s-a, s-a, s-b, s-b: swaps a and b.
            na = b; nb = a; nc = c; nd = d;
            break;
        }
        case ReggeAction::FixAA: {
            double s = b + (c + d) / 2.0;
            na = a; nb = s - b; nc = s - c; nd = s - d;
            break;
        }
        default: { // FixBB
            double s = a + (c + d) / 2.0;
            na = s - a; nb = b; nc = s - c; nd = s - d;
            break;
        }
    }
    if (!(na > 0.0 && nb > 0.0 && nc > 0.0 && nd > 0.0))
        throw NonPositiveEdge("regge_transform: transformed edge length is not positive");
    return ReversibleParams(na, nb, nc, nd);
}

PerimeterImplication perimeter_pairing_implication(const EdgeLengths& l, int pairing,
                                                   double tol) {
    // Edge index order: 0:e01 1:e02 2:e03 3:e12 4:e13 5:e23. Opposite pairs
    // are (0,5), (1,4), (2,3). The two perimeter equations of a pairing
    // reduce to equality of two opposite pairs, leaving one pair free:
    //   {(f0,f1),(f2,f3)}: e02=e13, e03=e12, (e01,e23) free
    //   {(f0,f2),(f1,f3)}: e01=e23, e03=e12, (e02,e13) free
    //   {(f0,f3),(f1,f2)}: e01=e23, e02=e13, (e03,e12) free
    static constexpr std::array<std::array<int, 2>, 3> kOpposite{{{0, 5}, {1, 4}, {2, 3}}};
    static constexpr std::array<std::array<std::array<int, 2>, 2>, 3> kPairs{{
        {{{0, 1}, {2, 3}}},
        {{{0, 2}, {1, 3}}},
        {{{0, 3}, {1, 2}}},
    }};

    PerimeterImplication out;
    out.pairing = pairing;
    int free_op = pairing;  // pairing p leaves opposite pair p free
    out.free_pair = kOpposite[std::size_t(free_op)];
    int k = 0;
    for (int op = 0; op < 3; ++op)
        if (op != free_op) out.implied[std::size_t(k++)] = kOpposite[std::size_t(op)];

    auto per = facet_perimeters(l);
    double pres = 0.0;
    for (const auto& pr : kPairs[std::size_t(pairing)])
        pres = std::max(pres, rel_residual(per[std::size_t(pr[0])], per[std::size_t(pr[1])]));
    out.perimeter_residual = pres;
    out.perimeters_equal = pres <= tol;

    if (out.perimeters_equal) {
        bool hold = true;
        for (int q = 0; q < 2; ++q) {
            auto e = out.implied[std::size_t(q)];
            out.implied_residuals[std::size_t(q)] = rel_residual(l[e[0]], l[e[1]]);
            hold = hold && out.implied_residuals[std::size_t(q)] <= tol;
        }
        out.implied_hold = hold;
    }
    return out;
}

const char* degeneracy_name(DegeneracyKind k) {
    switch (k) {
        case DegeneracyKind::None: return "none";
        case DegeneracyKind::Parallelogram: return "parallelogram";
        case DegeneracyKind::Trapezoid: return "trapezoid";
        default: return "both";
    }
}

} // namespace tetsym
