#pragma once

#include <cstdint>

#include "tetsym/tetra.hpp"

// Reconstruction of the unique (up to translation) tetrahedron from facet
// normals and areas, plus instance generators whose facet areas are paired
// equal by construction.

namespace tetsym {

struct ReconstructionReport {
    Tetrahedron tetrahedron;
    double input_closure_residual = 0;  // relative, |sum alpha_i u_i| / sum alpha_i
    double roundtrip_normal_error = 0;  // max angular deviation, radians
    double roundtrip_area_error = 0;    // max relative
    bool areas_repaired = false;        // least-squares closure repair applied
    bool columns_swapped = false;       // input had mirror chirality; facets 2,3 exchanged
};

// |sum alpha_i u_i| / sum alpha_i.
double closure_residual(const FacetData& d);

// Closure residual at or below this is accepted as-is.
inline constexpr double kClosureAccept = 1e-8;
// Residuals in (kClosureAccept, FacetData::kClosureTol] are repaired by
// projecting the areas onto the closure subspace (least squares).

// Builds the matrix with columns -2 alpha_i u_i for i = 1,2,3 (ordered for a
// positive determinant), takes A = det(C)^{1/2} C^{-t}, and reads the
// vertices off the columns of A. The reconstructed facet i carries input
// record i (2 and 3 exchanged when columns_swapped).
ReconstructionReport reconstruct(const FacetData& d);

// Tetrahedron whose facet areas satisfy alpha_0 = alpha_1 and
// alpha_2 = alpha_3: normals u0, u1, u2 are sampled on the sphere, the unit
// constraint |-(alpha/beta)(u0+u1) - u2| = 1 is solved for the area ratio,
// and the instance is realized through reconstruct(). Deterministic in
// (rng_seed, scale).
Tetrahedron generate_paired_area(std::uint64_t rng_seed, double scale);

// Same approach specialized to all four areas equal: u2 is drawn on the
// circle of unit vectors with (u0+u1+u2) itself of unit length.
Tetrahedron generate_equiareal(std::uint64_t rng_seed, double scale);

// True iff t2 is a translate of t1: after moving both v0 to the origin,
// corresponding vertices match within tol * (longest edge).
bool uniqueness_check(const FacetData& d, const Tetrahedron& t1, const Tetrahedron& t2,
                      double tol = 1e-8);

} // namespace tetsym
