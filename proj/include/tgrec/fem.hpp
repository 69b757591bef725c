#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "tgrec/ionic.hpp"
#include "tgrec/mesh.hpp"
#include "tgrec/sparse.hpp"

namespace tgrec {

using NodalField = std::vector<double>;

/// Symmetric 3x3 tensor stored as (xx, yy, zz, xy, xz, yz).
using SymTensor = std::array<double, 6>;

Vec3 apply_sym(const SymTensor& k, const Vec3& v);

/// Eigenvalues of the intra- and extracellular conductivity tensors in the
/// fiber / transverse / radial directions. The effective tensor shares the
/// frame eigenvectors and has eigenvalues ke*ki/(ke+ki) per direction.
struct ConductivityEigs {
    double fiber_i = 3.0, transverse_i = 1.0, radial_i = 0.315;
    double fiber_e = 2.0, transverse_e = 1.65, radial_e = 1.351;

    double effective_fiber() const { return fiber_e * fiber_i / (fiber_e + fiber_i); }
    double effective_transverse() const {
        return transverse_e * transverse_i / (transverse_e + transverse_i);
    }
    double effective_radial() const { return radial_e * radial_i / (radial_e + radial_i); }
};

/// Per-element symmetric positive definite conductivity tensor.
struct ConductivityField {
    std::vector<SymTensor> tensors;  // one per element

    /// Scalar reference value used when an inclusion rescales the tensor and
    /// by the adjoint boundary source; the fiber-direction eigenvalue for
    /// anisotropic fields, k0 itself for scalar ones.
    double k0_ref = 1.0;

    static ConductivityField scalar(const Mesh& m, double k0);

    /// Anisotropic field from per-vertex fiber frames (averaged per element
    /// and re-orthonormalized). Requires frames on the mesh.
    static ConductivityField anisotropic(const Mesh& m, const ConductivityEigs& eigs);
};

/// Consistent or row-sum lumped P1 mass matrix; an element mask restricts
/// assembly to the listed elements (empty mask = all elements).
SparseMatrix assemble_mass(const Mesh& m, bool lumped,
                           const std::vector<std::size_t>& element_mask = {});

/// Stiffness matrix for the bilinear form grad(v)' K grad(u).
SparseMatrix assemble_stiffness(const Mesh& m, const ConductivityField& k);

/// Boundary mass matrix over the faces of a boundary subset, indexed by the
/// full vertex numbering (rows/cols outside the subset are empty).
SparseMatrix assemble_boundary_mass(const Mesh& m, const BoundarySubset& gamma);

/// Row sums of the boundary mass (the lumped surface weight per node),
/// restricted to the subset nodes; aligned with gamma.nodes.
std::vector<double> lumped_boundary_weights(const Mesh& m, const BoundarySubset& gamma);

/// Nodal-interpolation reaction vector (mass * f(u) componentwise); pass a
/// mass matrix assembled over the element mask of interest.
NodalField reaction_vector(const SparseMatrix& mass, const NodalField& u, const IonicParams& p);

/// Volume-weighted average of adjacent element P1 gradients at each vertex.
std::vector<Vec3> recover_gradient(const Mesh& m, const NodalField& u);

/// P1 gradients of the four barycentric basis functions of element e,
/// plus its volume. Building block shared by the assembly routines.
struct ElementGeometry {
    std::array<Vec3, 4> grad;
    double volume;
};
ElementGeometry element_geometry(const Mesh& m, std::size_t e);

}  // namespace tgrec
