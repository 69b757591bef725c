#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tgrec/fem.hpp"
#include "tgrec/mesh.hpp"

namespace tgrec {

/// Spherical conductivity inclusion omega = { |x - center| < eps } with
/// reduced conductivity k1 inside; the reaction term is switched off there.
struct InclusionSpec {
    Vec3 center{0, 0, 0};
    double eps = 0.0;  // radius
    double k1 = 0.0;   // inside conductivity (scalar case), 0 < k1 < k0

    void validate(double k0_ref) const;
};

struct ElementClassification {
    std::vector<std::size_t> inside;      // elements whose centroid lies in the ball
    std::vector<std::size_t> complement;  // the rest
    double discrete_volume = 0.0;         // sum of inside element volumes
    std::string warning;                  // set when the ball captures no element
};

/// Centroid-in-ball classification. The discrete volume converges to the
/// ball volume as the mesh resolves eps.
ElementClassification classify_elements(const Mesh& m, const InclusionSpec& inc);

/// Background conductivity with the inclusion applied: scalar fields get
/// k1 * I inside, anisotropic fields are rescaled by k1 / k0_ref so the
/// contrast is uniform across directions.
ConductivityField perturbed_conductivity(const ConductivityField& background,
                                         const ElementClassification& cls, double k1);

/// Polarization factor of a sphere with background k0 and inclusion k1:
/// the polarization tensor is m * I with m = 3 k0 / (2 k0 + k1).
double polarization_sphere(double k0, double k1);

/// Shortest distance from a point to the boundary vertex cloud; used for the
/// well-separation check dist(omega, boundary) >= d0.
double distance_to_boundary(const Mesh& m, const Vec3& p);

}  // namespace tgrec
