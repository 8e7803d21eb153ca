#pragma once

#include <array>

#include "tetsym/tetra.hpp"

// Closed-form volume factorizations for facet-symmetric tetrahedra, the
// plane-geometry degeneration laws gating them, the explicit coordinate
// construction of reversible instances, and the Regge edge transform.

namespace tetsym {

// Edge-length quadruple of a reversible tetrahedron. Opposite edge pairs
// are (a,a), (b,b), (c,d); the two facets sharing edge c have sides
// (a,b,c), the two sharing edge d have sides (a,b,d).
struct ReversibleParams {
    double a = 1, b = 1, c = 1, d = 1;

    // Validates positivity and the weak triangle inequalities for (a,b,c)
    // and (a,b,d).
    ReversibleParams(double a, double b, double c, double d);

    double max_length() const;
};

enum class DegeneracyKind { None, Parallelogram, Trapezoid, Both };

// On-manifold floor for the two degeneration factors, scaled by the
// factor's own degree in length (factor1: L^4, factor2: L^2).
inline constexpr double kManifoldFloor = 1e-10;

const char* degeneracy_name(DegeneracyKind k);

struct RealizabilityVerdict {
    double factor1 = 0;  // c^2 d^2 - (a^2 - b^2)^2
    double factor2 = 0;  // a^2 + b^2 - (c^2 + d^2)/2
    bool realizable = false;
    DegeneracyKind kind = DegeneracyKind::None;
};

// Weak triangle inequality with the standard relative slack; the predicate
// behind every triangle-validity check in this module.
bool satisfies_triangle_inequality(double a, double b, double c);

// Triangle area by the factored squared-area formula, evaluated in the
// cancellation-safe order (sides sorted descending, differences grouped).
// Returns 0 for exactly degenerate triples; throws InvalidTriangle when the
// triangle inequality fails beyond tolerance.
double heron_triangle_area(double a, double b, double c);

// V^2 = (1/72)(a^2+b^2-c^2)(a^2-b^2+c^2)(-a^2+b^2+c^2) for the isosceles
// tetrahedron with opposite-pair lengths (a,a),(b,b),(c,c). May be negative
// for non-realizable data.
double isosceles_volume_sq(double a, double b, double c);

// V^2 = (1/72)(c^2 d^2 - (a^2-b^2)^2)(a^2 + b^2 - (c^2+d^2)/2); product
// form. Negative return signals non-realizability.
double reversible_volume_sq(const ReversibleParams& p);

// Same quantity with the first factor split as a difference of squares:
// (1/72)(cd + a^2 - b^2)(cd - a^2 + b^2)(a^2 + b^2 - (c^2+d^2)/2).
double reversible_volume_sq_factored(const ReversibleParams& p);

// The three factors of the split form, in the order above. The Regge
// actions permute this triple.
std::array<double, 3> reversible_volume_factors(const ReversibleParams& p);

RealizabilityVerdict realizability(const ReversibleParams& p);

// Coordinate construction: v0=(c/2,0,0), v1=(-c/2,0,0), v2=(x,y,h),
// v3=(-x,-y,h); invariant as a vertex set under the half-turn about the
// z-axis. Throws NotRealizable when a square-root argument is negative
// beyond tolerance.
Tetrahedron build_reversible(const ReversibleParams& p);
Tetrahedron build_reversible_allow_degenerate(const ReversibleParams& p);

// Labeled edge set of the construction: e01=c, e23=d, e02=e13=a, e03=e12=b.
EdgeLengths edge_set(const ReversibleParams& p);

// Each action fixes one opposite edge pair and replaces the other four
// lengths l by s - l, where s is half their sum. All three are involutions.
enum class ReggeAction { FixCD, FixAA, FixBB };

inline constexpr std::array<ReggeAction, 3> kReggeActions{
    ReggeAction::FixCD, ReggeAction::FixAA, ReggeAction::FixBB};

const char* regge_action_name(ReggeAction a);

ReversibleParams regge_transform(const ReversibleParams& p, ReggeAction action = ReggeAction::FixCD);

// What a facet pairing's two perimeter equations force on the edges.
struct PerimeterImplication {
    int pairing = 0;
    // The two opposite edge pairs forced equal; entries are indices into the
    // EdgeLengths order (e01,e02,e03,e12,e13,e23).
    std::array<std::array<int, 2>, 2> implied{};
    std::array<int, 2> free_pair{};          // the unconstrained opposite pair
    bool perimeters_equal = false;           // does L satisfy the two equations
    double perimeter_residual = 0;           // max relative mismatch of the pairs
    bool implied_hold = false;               // evaluated only when perimeters_equal
    std::array<double, 2> implied_residuals{};
};

PerimeterImplication perimeter_pairing_implication(const EdgeLengths& l, int pairing,
                                                   double tol = 1e-12);

} // namespace tetsym
