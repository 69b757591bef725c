#pragma once

#include <cstddef>
#include <vector>

#include "tgrec/fem.hpp"
#include "tgrec/inclusion.hpp"
#include "tgrec/ionic.hpp"
#include "tgrec/mesh.hpp"

namespace tgrec {

struct TimeGrid {
    double t_final = 30.0;
    std::size_t steps = 150;

    double dt() const { return t_final / static_cast<double>(steps); }
    double time(std::size_t n) const { return t_final * static_cast<double>(n) / static_cast<double>(steps); }

    void validate() const;
};

/// Nodal trajectory, frames[n] at time n * dt, n = 0..steps.
struct TimeSeriesField {
    TimeGrid grid;
    std::vector<NodalField> frames;

    TimeSeriesField reversed() const;  // frame order flipped, grid unchanged
};

/// Trajectory restricted to a fixed node list.
struct TraceSeries {
    TimeGrid grid;
    std::vector<std::size_t> nodes;
    std::vector<std::vector<double>> frames;  // frames[n][k] = value at nodes[k]
};

struct ForwardOptions {
    bool lumped_mass = true;
    double cg_tolerance = 1e-12;
    std::size_t cg_max_iterations = 0;  // 0: solver default
};

/// Semi-implicit march of  M du/dt + K u + M_mask f(u) = 0  with natural
/// (zero-flux) boundary conditions: diffusion implicit, reaction explicit,
/// one constant-matrix solve per step.
TimeSeriesField solve_background(const Mesh& m, const ConductivityField& k0,
                                 const IonicParams& ionic, const NodalField& u0,
                                 const TimeGrid& grid, const ForwardOptions& opts = {});

/// Same march with the inclusion applied: conductivity reduced and the
/// reaction masked out on the inside elements. An empty classification with
/// k1 = k0_ref reproduces the background run bit for bit.
TimeSeriesField solve_perturbed(const Mesh& m, const ConductivityField& k0,
                                const ElementClassification& cls, double k1,
                                const IonicParams& ionic, const NodalField& u0,
                                const TimeGrid& grid, const ForwardOptions& opts = {});

TraceSeries boundary_trace(const TimeSeriesField& field, const std::vector<std::size_t>& nodes);

/// Volume of elements whose mean nodal value exceeds the threshold.
double activated_volume(const Mesh& m, const NodalField& u, double threshold);

}  // namespace tgrec
