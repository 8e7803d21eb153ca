#include "tetsym/minkowski.hpp"

#include <algorithm>
#include <cmath>

#include "tetsym/errors.hpp"
#include "tetsym/rng.hpp"

namespace tetsym {

namespace {

constexpr int kMaxRejectionRounds = 1000;

Vec3 weighted_normal_sum(const FacetData& d) {
    Vec3 s{};
    for (const auto& r : d.f) s = s + r.area * r.normal;
    return s;
}

double area_sum(const FacetData& d) {
    double s = 0.0;
    for (const auto& r : d.f) s += r.area;
    return s;
}

// Minimum-norm area perturbation delta with U (alpha + delta) = 0, where U
// is the 3x4 matrix of normals: delta = -U^t (U U^t)^{-1} r.
FacetData repair_areas(const FacetData& d) {
    Vec3 r = weighted_normal_sum(d);
    Mat3 g; // U U^t = sum u_i u_i^t
    for (const auto& rec : d.f) {
        const Vec3& u = rec.normal;
        double uu[3] = {u.x, u.y, u.z};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) g.m[i][j] += uu[i] * uu[j];
    }
    double dg = det(g);
    if (std::abs(dg) <= singularity_floor(g))
        throw DegenerateNormals("reconstruct: normals too close to coplanar for closure repair");
    Vec3 x = (1.0 / dg) * (cofactor(g) * r); // g is symmetric, so cof(g)/det = g^{-1}
    std::array<FacetRecord, 4> rec = d.f;
    for (auto& fr : rec) {
        fr.area -= dot(fr.normal, x);
        if (!(fr.area > 0.0))
            throw NonPositiveArea("reconstruct: closure repair drove a facet area non-positive");
    }
    return FacetData::unchecked(rec);
}

} // namespace

double closure_residual(const FacetData& d) {
    return norm(weighted_normal_sum(d)) / area_sum(d);
}

ReconstructionReport reconstruct(const FacetData& d) {
    double input_residual = closure_residual(d);
    if (input_residual > FacetData::kClosureTol)
        throw ClosureViolation("reconstruct: closure residual beyond tolerance");

    bool repaired = input_residual > kClosureAccept;
    FacetData data = repaired ? repair_areas(d) : d;

    // Column order (1,2,3); a negative determinant means mirror-labeled
    // input, repaired by swapping the records for facets 2 and 3.
    std::array<int, 4> label{0, 1, 2, 3};
    auto col = [&](int i) { return -2.0 * data[label[std::size_t(i)]].area * data[label[std::size_t(i)]].normal; };
    Mat3 c = Mat3::from_columns(col(1), col(2), col(3));
    bool swapped = false;
    if (det(c) < 0.0) {
        std::swap(label[2], label[3]);
        c = Mat3::from_columns(col(1), col(2), col(3));
        swapped = true;
    }
    double dc = det(c);
    if (dc <= singularity_floor(c))
        throw DegenerateNormals("reconstruct: facet normals do not span 3-space");

    Mat3 a = std::sqrt(dc) * solve_inverse_transpose(c);
    Tetrahedron t = Tetrahedron::allow_degenerate(Vec3{}, a.column(0), a.column(1), a.column(2));

    ReconstructionReport rep{t};
    rep.input_closure_residual = input_residual;
    rep.areas_repaired = repaired;
    rep.columns_swapped = swapped;

    FacetData out = facet_data(t);
    for (int i = 0; i < 4; ++i) {
        const FacetRecord& want = d[label[std::size_t(i)]];
        const FacetRecord& got = out[i];
        rep.roundtrip_normal_error =
            std::max(rep.roundtrip_normal_error, angle_between(want.normal, got.normal));
        rep.roundtrip_area_error =
            std::max(rep.roundtrip_area_error, rel_residual(want.area, got.area));
    }
    return rep;
}

Tetrahedron generate_paired_area(std::uint64_t rng_seed, double scale) {
    if (!(scale > 0.0)) throw Error("generate_paired_area: scale must be positive");
    SampleRng rng(rng_seed);
    for (int round = 0; round < kMaxRejectionRounds; ++round) {
        Vec3 u0 = rng.unit_vector();
        Vec3 u1 = rng.unit_vector();
        Vec3 u2 = rng.unit_vector();
        Vec3 s = u0 + u1;
        double ss = norm_sq(s);
        if (ss <= 1e-12) continue;
        // |t s + u2| = 1 has the nonzero root t = -2 (s.u2)/|s|^2; a positive
        // ratio alpha/beta is required.
        double t = -2.0 * dot(s, u2) / ss;
        if (!(t > 0.0)) continue;
        Vec3 u3 = -1.0 * (t * s) - u2;

        double beta = scale * scale;
        double alpha = t * beta;
        std::array<FacetRecord, 4> rec{{{u0, alpha}, {u1, alpha}, {u2, beta}, {u3, beta}}};
        try {
            FacetData d(rec);
            Tetrahedron t4 = reconstruct(d).tetrahedron;
            if (is_degenerate(t4)) continue;
            const auto& v = t4.vertices();
            return Tetrahedron(v[0], v[1], v[2], v[3]);
        } catch (const Error&) {
            continue;
        }
    }
    throw GenerationFailed("generate_paired_area: rejection bound exhausted");
}

Tetrahedron generate_equiareal(std::uint64_t rng_seed, double scale) {
    if (!(scale > 0.0)) throw Error("generate_equiareal: scale must be positive");
    SampleRng rng(rng_seed);
    for (int round = 0; round < kMaxRejectionRounds; ++round) {
        Vec3 u0 = rng.unit_vector();
        Vec3 u1 = rng.unit_vector();
        Vec3 s = u0 + u1;
        double sl = norm(s);
        if (sl <= 1e-6 || sl >= 2.0 - 1e-6) continue;
        // Unit u2 with s.u2 = -|s|^2/2 makes u3 = -(s + u2) unit as well.
        Vec3 sh = s / sl;
        Vec3 ref = std::abs(sh.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
        Vec3 e1 = normalized(cross(sh, ref));
        Vec3 e2 = cross(sh, e1);
        double r = std::sqrt(std::max(0.0, 1.0 - sl * sl / 4.0));
        double phi = rng.uniform(0.0, 2.0 * M_PI);
        Vec3 u2 = (-sl / 2.0) * sh + (r * std::cos(phi)) * e1 + (r * std::sin(phi)) * e2;
        Vec3 u3 = -1.0 * s - u2;

        double alpha = scale * scale;
        std::array<FacetRecord, 4> rec{{{u0, alpha}, {u1, alpha}, {u2, alpha}, {u3, alpha}}};
        try {
            FacetData d(rec);
            Tetrahedron t4 = reconstruct(d).tetrahedron;
            if (is_degenerate(t4)) continue;
            const auto& v = t4.vertices();
            return Tetrahedron(v[0], v[1], v[2], v[3]);
        } catch (const Error&) {
            continue;
        }
    }
    throw GenerationFailed("generate_equiareal: rejection bound exhausted");
}

bool uniqueness_check(const FacetData& d, const Tetrahedron& t1, const Tetrahedron& t2,
                      double tol) {
    (void)d; // both inputs are assumed to realize d; the check itself is geometric
    Tetrahedron a = t1.translated(-1.0 * t1.v(0));
    Tetrahedron b = t2.translated(-1.0 * t2.v(0));
    double scale = std::max(longest_edge(a), longest_edge(b));
    for (int i = 0; i < 4; ++i)
        if (norm(a.v(i) - b.v(i)) > tol * scale) return false;
    return true;
}

} // namespace tetsym
