#include "tetsym/tetra.hpp"

#include <algorithm>
#include <cmath>

#include "tetsym/errors.hpp"
#include "tetsym/heron.hpp"

namespace tetsym {

namespace {

double orientation_det(const std::array<Vec3, 4>& v) {
    return det(Mat3::from_columns(v[1] - v[0], v[2] - v[0], v[3] - v[0]));
}

double longest_edge_of(const std::array<Vec3, 4>& v) {
    double l = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) l = std::max(l, norm(v[std::size_t(i)] - v[std::size_t(j)]));
    return l;
}

std::array<Vec3, 4> orient(std::array<Vec3, 4> v) {
    if (orientation_det(v) < 0.0) std::swap(v[2], v[3]);
    return v;
}

} // namespace

Tetrahedron::Tetrahedron(Vec3 v0, Vec3 v1, Vec3 v2, Vec3 v3)
    : v_(orient({v0, v1, v2, v3})) {
    double l = longest_edge_of(v_);
    if (orientation_det(v_) <= kDegeneracyFloor * l * l * l)
        throw DegenerateTetrahedron("Tetrahedron: vertices are (nearly) coplanar");
}

Tetrahedron Tetrahedron::allow_degenerate(Vec3 v0, Vec3 v1, Vec3 v2, Vec3 v3) {
    return Tetrahedron(unchecked_tag{}, orient({v0, v1, v2, v3}));
}

Tetrahedron Tetrahedron::translated(Vec3 t) const {
    return Tetrahedron(unchecked_tag{}, {v_[0] + t, v_[1] + t, v_[2] + t, v_[3] + t});
}

FacetData::FacetData(std::array<FacetRecord, 4> records) : f(records) {
    double area_sum = 0.0;
    for (const auto& r : f) {
        if (!(r.area > 0.0)) throw NonPositiveArea("FacetData: facet area must be positive");
        if (std::abs(norm(r.normal) - 1.0) > kUnitNormTol)
            throw DegenerateNormals("FacetData: facet normal is not unit length");
        area_sum += r.area;
    }
    // Rank-3 test: some triple of unit normals must have a determinant above
    // the floor.
    double best = 0.0;
    for (int i = 0; i < 4; ++i) {
        Mat3 m = Mat3::from_columns(f[std::size_t((i + 1) % 4)].normal,
                                    f[std::size_t((i + 2) % 4)].normal,
                                    f[std::size_t((i + 3) % 4)].normal);
        best = std::max(best, std::abs(det(m)));
    }
    if (best <= kSpanFloor)
        throw DegenerateNormals("FacetData: normals do not span 3-space");
    Vec3 s{};
    for (const auto& r : f) s = s + r.area * r.normal;
    if (norm(s) > kClosureTol * area_sum)
        throw ClosureViolation("FacetData: closure identity violated beyond tolerance");
}

FacetData FacetData::unchecked(std::array<FacetRecord, 4> records) {
    return FacetData(unchecked_tag{}, records);
}

std::array<TriangleFacet, 4> facets(const Tetrahedron& t) {
    std::array<TriangleFacet, 4> out;
    for (int i = 0; i < 4; ++i) {
        TriangleFacet& fc = out[std::size_t(i)];
        fc.index = i;
        int k = 0;
        for (int j = 0; j < 4; ++j)
            if (j != i) fc.p[std::size_t(k++)] = t.v(j);
    }
    return out;
}

FacetData facet_data(const Tetrahedron& t) {
    // Cross-product identities with v0 at the origin: each n_i below equals
    // -2 alpha_i u_i, and the four sum to zero termwise.
    Vec3 w1 = t.v(1) - t.v(0);
    Vec3 w2 = t.v(2) - t.v(0);
    Vec3 w3 = t.v(3) - t.v(0);
    std::array<Vec3, 4> n;
    n[1] = cross(w2, w3);
    n[2] = cross(w3, w1);
    n[3] = cross(w1, w2);
    n[0] = cross(w3 - w1, w2 - w1);

    double l = longest_edge(t);
    std::array<FacetRecord, 4> rec;
    for (int i = 0; i < 4; ++i) {
        double len = norm(n[std::size_t(i)]);
        if (len <= 1e-14 * l * l)
            throw DegenerateTetrahedron("facet_data: facet area below the degeneracy floor");
        rec[std::size_t(i)].normal = n[std::size_t(i)] / -len;
        rec[std::size_t(i)].area = 0.5 * len;
    }
    return FacetData(rec);
}

double volume_from_vertices(const Tetrahedron& t) {
    const auto& v = t.vertices();
    return det(Mat3::from_columns(v[1] - v[0], v[2] - v[0], v[3] - v[0])) / 6.0;
}

EdgeLengths edge_lengths(const Tetrahedron& t) {
    const auto& v = t.vertices();
    return EdgeLengths(norm(v[0] - v[1]), norm(v[0] - v[2]), norm(v[0] - v[3]),
                       norm(v[1] - v[2]), norm(v[1] - v[3]), norm(v[2] - v[3]));
}

double longest_edge(const Tetrahedron& t) { return longest_edge_of(t.vertices()); }

bool is_degenerate(const Tetrahedron& t) {
    double l = longest_edge(t);
    return 6.0 * volume_from_vertices(t) <= kDegeneracyFloor * l * l * l;
}

EdgeLengths::EdgeLengths(double e01_, double e02_, double e03_, double e12_, double e13_,
                         double e23_)
    : e01(e01_), e02(e02_), e03(e03_), e12(e12_), e13(e13_), e23(e23_) {
    for (int k = 0; k < 6; ++k) {
        double e = (*this)[k];
        if (!(e > 0.0) || !std::isfinite(e))
            throw NonPositiveEdge("EdgeLengths: edges must be positive and finite");
    }
    for (int i = 0; i < 4; ++i) {
        auto s = facet_sides(i);
        std::sort(s.begin(), s.end());
        if (s[0] + s[1] < s[2] * (1.0 - 1e-12))
            throw InvalidTriangle("EdgeLengths: facet triple violates the triangle inequality");
    }
}

double EdgeLengths::operator[](int k) const {
    switch (k) {
        case 0: return e01;
        case 1: return e02;
        case 2: return e03;
        case 3: return e12;
        case 4: return e13;
        default: return e23;
    }
}

double EdgeLengths::max_length() const {
    double m = 0.0;
    for (int k = 0; k < 6; ++k) m = std::max(m, (*this)[k]);
    return m;
}

std::array<double, 3> EdgeLengths::facet_sides(int i) const {
    switch (i) {
        case 0: return {e12, e13, e23};
        case 1: return {e02, e03, e23};
        case 2: return {e01, e03, e13};
        default: return {e01, e02, e12};
    }
}

double cayley_menger_volume_sq(const EdgeLengths& l) {
    // Lengths are normalized by the longest edge before the determinant is
    // taken, keeping the elimination well scaled for any dilation.
    double scale = l.max_length();
    double d01 = l.e01 / scale, d02 = l.e02 / scale, d03 = l.e03 / scale;
    double d12 = l.e12 / scale, d13 = l.e13 / scale, d23 = l.e23 / scale;
    double q01 = d01 * d01, q02 = d02 * d02, q03 = d03 * d03;
    double q12 = d12 * d12, q13 = d13 * d13, q23 = d23 * d23;

    double a[5][5] = {
        {0, 1, 1, 1, 1},
        {1, 0, q01, q02, q03},
        {1, q01, 0, q12, q13},
        {1, q02, q12, 0, q23},
        {1, q03, q13, q23, 0},
    };

    // LU with partial pivoting.
    double detv = 1.0;
    for (int k = 0; k < 5; ++k) {
        int piv = k;
        for (int i = k + 1; i < 5; ++i)
            if (std::abs(a[i][k]) > std::abs(a[piv][k])) piv = i;
        if (piv != k) {
            for (int j = 0; j < 5; ++j) std::swap(a[k][j], a[piv][j]);
            detv = -detv;
        }
        if (a[k][k] == 0.0) return 0.0;
        detv *= a[k][k];
        for (int i = k + 1; i < 5; ++i) {
            double f = a[i][k] / a[k][k];
            for (int j = k; j < 5; ++j) a[i][j] -= f * a[k][j];
        }
    }

    double s2 = scale * scale;
    double s6 = s2 * s2 * s2;
    return detv / 288.0 * s6;
}

double triangle_congruence_residual(std::array<double, 3> t1, std::array<double, 3> t2) {
    std::sort(t1.begin(), t1.end());
    std::sort(t2.begin(), t2.end());
    double r = 0.0;
    for (int k = 0; k < 3; ++k)
        r = std::max(r, rel_residual(t1[std::size_t(k)], t2[std::size_t(k)]));
    return r;
}

bool triangles_congruent(std::array<double, 3> t1, std::array<double, 3> t2, double tol) {
    return triangle_congruence_residual(t1, t2) <= tol;
}

namespace {

constexpr std::array<std::array<std::array<int, 2>, 2>, 3> kPairings{{
    {{{0, 1}, {2, 3}}},
    {{{0, 2}, {1, 3}}},
    {{{0, 3}, {1, 2}}},
}};

Classification classify_impl(const EdgeLengths& l, const std::array<double, 4>& areas,
                             double tol) {
    Classification cls;
    cls.tolerance = tol;

    double emin = l[0], emax = l[0];
    for (int k = 1; k < 6; ++k) {
        emin = std::min(emin, l[k]);
        emax = std::max(emax, l[k]);
    }
    cls.regular_residual = (emax - emin) / emax;

    cls.opposite_pair_residuals = {rel_residual(l.e01, l.e23), rel_residual(l.e02, l.e13),
                                   rel_residual(l.e03, l.e12)};

    std::array<std::array<double, 3>, 4> sides;
    for (int i = 0; i < 4; ++i) sides[std::size_t(i)] = l.facet_sides(i);

    for (int p = 0; p < 3; ++p) {
        PairingCheck& pc = cls.pairings[std::size_t(p)];
        pc.id = p;
        pc.pairs = kPairings[std::size_t(p)];
        bool ok = true;
        for (int q = 0; q < 2; ++q) {
            int i = pc.pairs[std::size_t(q)][0];
            int j = pc.pairs[std::size_t(q)][1];
            pc.congruence_residual[std::size_t(q)] =
                triangle_congruence_residual(sides[std::size_t(i)], sides[std::size_t(j)]);
            pc.area_residual[std::size_t(q)] =
                rel_residual(areas[std::size_t(i)], areas[std::size_t(j)]);
            ok = ok && pc.congruence_residual[std::size_t(q)] <= tol;
        }
        pc.congruent = ok;
        if (ok) cls.passing.push_back(p);
    }

    bool isosceles = true;
    for (double r : cls.opposite_pair_residuals) isosceles = isosceles && r <= tol;

    if (cls.regular_residual <= tol)
        cls.verdict = Verdict::Regular;
    else if (isosceles)
        cls.verdict = Verdict::Isosceles;
    else if (!cls.passing.empty())
        cls.verdict = Verdict::Reversible;
    else
        cls.verdict = Verdict::Generic;
    return cls;
}

} // namespace

Classification classify(const Tetrahedron& t, double tol) {
    if (is_degenerate(t))
        throw DegenerateTetrahedron("classify: degenerate tetrahedron");
    FacetData d = facet_data(t);
    std::array<double, 4> areas{d[0].area, d[1].area, d[2].area, d[3].area};
    return classify_impl(edge_lengths(t), areas, tol);
}

Classification classify_edges(const EdgeLengths& l, double tol) {
    double v2 = cayley_menger_volume_sq(l);
    double s = l.max_length();
    double s6 = s * s * s * s * s * s;
    // 288 V^2 <= (floor * s^3)^2 mirrors the vertex-determinant floor.
    if (v2 <= kDegeneracyFloor * kDegeneracyFloor * s6 / 36.0)
        throw DegenerateTetrahedron("classify_edges: lengths do not embed as a solid tetrahedron");
    std::array<double, 4> areas;
    for (int i = 0; i < 4; ++i) {
        auto sd = l.facet_sides(i);
        areas[std::size_t(i)] = heron_triangle_area(sd[0], sd[1], sd[2]);
    }
    return classify_impl(l, areas, tol);
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Regular: return "regular";
        case Verdict::Isosceles: return "isosceles";
        case Verdict::Reversible: return "reversible";
        default: return "generic";
    }
}

std::array<double, 4> facet_perimeters(const EdgeLengths& l) {
    std::array<double, 4> out;
    for (int i = 0; i < 4; ++i) {
        auto s = l.facet_sides(i);
        out[std::size_t(i)] = s[0] + s[1] + s[2];
    }
    return out;
}

std::array<double, 4> facet_perimeters(const Tetrahedron& t) {
    return facet_perimeters(edge_lengths(t));
}

double rel_residual_vol_sq(double x, double y, double scale) {
    double s2 = scale * scale;
    double floor = s2 * s2 * s2 / 72.0;
    return std::abs(x - y) / std::max({std::abs(x), std::abs(y), floor});
}

} // namespace tetsym
