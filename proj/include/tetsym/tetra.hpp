#pragma once

#include <array>
#include <vector>

#include "tetsym/linalg3.hpp"

// Tetrahedron data model: facets, facet normal/area data, volume routes,
// edge lengths and facet-congruence classification. Facet f_i is the face
// opposite vertex v_i throughout.

namespace tetsym {

// Non-degeneracy floor: 6V > kDegeneracyFloor * (longest edge)^3. The
// comparison is homogeneous of degree 3, so it is dilation-invariant.
inline constexpr double kDegeneracyFloor = 1e-10;

// Default relative tolerance for length/area comparisons in classification.
inline constexpr double kClassifyTol = 1e-9;

class Tetrahedron {
public:
    // Repairs orientation by swapping v2 and v3 when the vertex determinant
    // is negative; throws DegenerateTetrahedron below the scale-relative
    // floor.
    Tetrahedron(Vec3 v0, Vec3 v1, Vec3 v2, Vec3 v3);

    // Same orientation repair, admits flat tetrahedra.
    static Tetrahedron allow_degenerate(Vec3 v0, Vec3 v1, Vec3 v2, Vec3 v3);

    const Vec3& v(int i) const { return v_[static_cast<std::size_t>(i)]; }
    const std::array<Vec3, 4>& vertices() const { return v_; }

    Tetrahedron translated(Vec3 t) const;

private:
    struct unchecked_tag {};
    Tetrahedron(unchecked_tag, std::array<Vec3, 4> v) : v_(v) {}

    std::array<Vec3, 4> v_;
};

struct TriangleFacet {
    std::array<Vec3, 3> p; // positions, in increasing parent-vertex order
    int index = 0;         // facet f_i is opposite vertex v_i
};

struct FacetRecord {
    Vec3 normal;      // outward unit normal
    double area = 0;  // > 0
};

// Minkowski data of a tetrahedron: four outward unit normals with areas.
// Construction validates unit length, positivity, spanning and closure;
// `unchecked` bypasses validation (tests, repair paths).
struct FacetData {
    std::array<FacetRecord, 4> f;

    FacetData(std::array<FacetRecord, 4> records);
    static FacetData unchecked(std::array<FacetRecord, 4> records);

    const FacetRecord& operator[](int i) const { return f[static_cast<std::size_t>(i)]; }

    static constexpr double kUnitNormTol = 1e-9;
    static constexpr double kClosureTol = 1e-5;  // relative; beyond this the data is rejected
    static constexpr double kSpanFloor = 1e-10;  // on determinants of unit-normal triples

private:
    struct unchecked_tag {};
    FacetData(unchecked_tag, std::array<FacetRecord, 4> records) : f(records) {}
};

// Six labeled edge lengths, e_ij = |v_i - v_j|. Opposite pairs are
// (e01,e23), (e02,e13), (e03,e12).
struct EdgeLengths {
    double e01 = 0, e02 = 0, e03 = 0, e12 = 0, e13 = 0, e23 = 0;

    // Validates positivity and the weak (equality-admitting) triangle
    // inequality on each facet triple.
    EdgeLengths(double e01, double e02, double e03, double e12, double e13, double e23);

    double operator[](int k) const;  // k in 0..5, order e01,e02,e03,e12,e13,e23
    double max_length() const;

    // Side lengths of facet f_i.
    std::array<double, 3> facet_sides(int i) const;
};

enum class Verdict { Regular, Isosceles, Reversible, Generic };

const char* verdict_name(Verdict v);

// True when `v` is as specific as `bound` or more (Regular is the most
// specific verdict).
inline bool at_least(Verdict v, Verdict bound) {
    return static_cast<int>(v) <= static_cast<int>(bound);
}

// One of the three ways to split the four facets into two pairs.
struct PairingCheck {
    int id = 0;                                    // 0,1,2: lexicographic by facet index
    std::array<std::array<int, 2>, 2> pairs{};     // e.g. {{0,1},{2,3}}
    std::array<double, 2> congruence_residual{};   // per pair, sorted-triple relative mismatch
    std::array<double, 2> area_residual{};         // per pair, relative area mismatch
    bool congruent = false;                        // both pairs within tolerance
};

struct Classification {
    Verdict verdict = Verdict::Generic;
    double tolerance = kClassifyTol;
    double regular_residual = 0;                   // relative spread of the six edges
    std::array<double, 3> opposite_pair_residuals{};
    std::array<PairingCheck, 3> pairings{};
    std::vector<int> passing;                      // ids of congruent pairings, ascending
};

std::array<TriangleFacet, 4> facets(const Tetrahedron& t);

// Outward unit normals and areas of the four facets; satisfies the closure
// identity sum(alpha_i * u_i) = 0 up to rounding.
FacetData facet_data(const Tetrahedron& t);

// Signed vertex-determinant volume / 6; non-negative by the orientation
// invariant.
double volume_from_vertices(const Tetrahedron& t);

EdgeLengths edge_lengths(const Tetrahedron& t);

double longest_edge(const Tetrahedron& t);

bool is_degenerate(const Tetrahedron& t);

// Squared volume from squared edge lengths only, via the 5x5 bordered
// determinant with 288 V^2 = det. Negative values signal non-embeddable
// length sets.
double cayley_menger_volume_sq(const EdgeLengths& l);

// Sorted side triples match componentwise within relative tolerance.
bool triangles_congruent(std::array<double, 3> t1, std::array<double, 3> t2, double tol);

// Relative mismatch of two sorted side triples (max over components).
double triangle_congruence_residual(std::array<double, 3> t1, std::array<double, 3> t2);

Classification classify(const Tetrahedron& t, double tol = kClassifyTol);

// Length-only classification path (areas evaluated by Heron's formula).
Classification classify_edges(const EdgeLengths& l, double tol = kClassifyTol);

std::array<double, 4> facet_perimeters(const Tetrahedron& t);
std::array<double, 4> facet_perimeters(const EdgeLengths& l);

// Relative residual |x - y| / max(|x|, |y|, floor) for squared-volume
// quantities; `scale` is the longest participating length. The floor
// scale^6/72 (the squared volume of the regular tetrahedron with that edge)
// keeps the ratio meaningful near the zero-volume manifolds, where a plain
// relative measure degenerates to noise/0.
double rel_residual_vol_sq(double x, double y, double scale);

// Plain relative residual with an absolute guard for values near zero.
inline double rel_residual(double x, double y) {
    double d = std::abs(x - y);
    double m = std::max(std::abs(x), std::abs(y));
    return m > 0 ? d / m : d;
}

} // namespace tetsym
