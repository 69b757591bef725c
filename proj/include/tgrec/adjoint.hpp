#pragma once

#include <cstddef>
#include <vector>

#include "tgrec/fem.hpp"
#include "tgrec/forward.hpp"
#include "tgrec/ionic.hpp"
#include "tgrec/mesh.hpp"
#include "tgrec/sparse.hpp"

namespace tgrec {

/// Boundary data mismatch r = (computed trace) - (measured trace), stored as
/// full nodal frames (zero away from measurement nodes), together with the
/// quadrature operator pairing residuals: the consistent boundary mass for
/// full-surface data, a diagonal of lumped surface weights for point data.
/// The same operator defines the cost functional and the adjoint load, which
/// keeps the two exactly dual.
struct MismatchSource {
    std::vector<NodalField> residual;  // one frame per time level
    SparseMatrix quad;

    void validate(std::size_t n_vertices, std::size_t n_frames) const;
};

/// Residual of a full-boundary measurement; traces must share nodes and grid.
MismatchSource make_boundary_mismatch(const Mesh& m, const BoundarySubset& gamma,
                                      const TraceSeries& computed,
                                      const std::vector<std::vector<double>>& measured);

/// Residual of point measurements owned by a subset of gamma nodes, each
/// weighted by the owning node's lumped surface mass.
MismatchSource make_point_mismatch(const Mesh& m, const BoundarySubset& gamma,
                                   const TraceSeries& computed,
                                   const std::vector<std::size_t>& point_nodes,
                                   const std::vector<std::vector<double>>& measured);

struct AdjointOptions {
    bool lumped_mass = true;
    // Scale the boundary load by the reference conductivity. Off by default:
    // the bare load keeps the discrete adjoint exactly dual to the cost, so
    // the indicator identity holds for any k0, not only k0 = 1.
    bool rhs_k0 = false;
    double cg_tolerance = 1e-12;
    std::size_t cg_max_iterations = 0;
};

/// One Crank-Nicolson step for  M z' + (K + D(t)) z = g(t):
///   (M + tau/2 (K + D1)) z1 = (M - tau/2 (K + D0)) z0 + tau/2 (g0 + g1).
/// The pattern of K must contain the pattern of M and every diagonal entry.
NodalField cn_step(const SparseMatrix& mass, const SparseMatrix& stiffness,
                   const std::vector<double>& d0, const std::vector<double>& d1,
                   const NodalField& g0, const NodalField& g1, const NodalField& z0, double tau,
                   const SolveOptions& cg);

/// Adjoint of the linearized monodomain operator around the background
/// trajectory u: backward problem with terminal value zero, reaction weight
/// f'(u), and the mismatch as Neumann load. Integrated as a forward
/// Crank-Nicolson march in reversed time s = T - t; the returned frames are
/// in original time order, so frame steps holds the (zero) terminal value.
/// Requires tau < 2 / max|f'(u)| over the trajectory.
TimeSeriesField solve_adjoint(const Mesh& m, const ConductivityField& k0, const IonicParams& ionic,
                              const TimeSeriesField& u, const MismatchSource& source,
                              const AdjointOptions& opts = {});

}  // namespace tgrec
