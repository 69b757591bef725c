#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tgrec/adjoint.hpp"
#include "tgrec/fem.hpp"
#include "tgrec/forward.hpp"
#include "tgrec/inclusion.hpp"
#include "tgrec/ionic.hpp"
#include "tgrec/mesh.hpp"
#include "tgrec/scenario.hpp"

namespace tgrec {

// Boundary misfit 1/2 int_0^T <r, Q r> dt with the trapezoidal rule in time.
double cost_j(const MismatchSource& source, const TimeGrid& grid);

// Pointwise indicator whose minimizer estimates the inclusion center.  Per
// vertex it accumulates, over time,
//     (C grad u) . grad W + f(u) W
// where C = m_sphere(k0_ref, k1) (1 - k1/k0_ref) K0 built from the background
// tensor of each element; element contributions are volume averaged to
// vertices.  For a scalar background this reduces to (k0 - k1) m_sphere I.
NodalField topological_gradient(const Mesh& mesh, const ConductivityField& background,
                                double k1_trial, const IonicParams& ionic,
                                const TimeSeriesField& state, const TimeSeriesField& adjoint);

struct ArgminInfo {
    std::size_t vertex = 0;
    Vec3 position{0, 0, 0};
    double value = 0.0;
    double boundary_distance = 0.0;
};

struct ReconstructionReport {
    double cost = 0.0;             // misfit of the background prediction
    double min_gradient = 0.0;     // most negative indicator value
    ArgminInfo global;             // argmin over all vertices
    bool has_interior = false;     // interior candidate set was nonempty
    ArgminInfo interior;           // argmin over vertices at least d0 from the boundary
    double separation_d0 = 0.0;
    bool no_inclusion_evidence = false;  // exactly zero misfit and indicator
    bool large_inclusion_suspected = false;
    std::vector<std::string> warnings;

    std::string gamma;
    std::size_t n_nodes_used = 0;
    std::size_t n_points_requested = 0;
    double noise_p = 0.0;
    std::uint64_t seed = 0;
    bool inverse_crime = false;
    std::uint64_t scenario_hash = 0;
    std::uint64_t mesh_hash = 0;
    TimeGrid grid;

    NodalField gradient;           // full indicator field for export
    TimeSeriesField state;         // background trajectory (for export)
    TimeSeriesField adjoint;       // adjoint trajectory (for export)
};

// One-shot reconstruction: background solve, adjoint from the data mismatch,
// then the indicator field and its minimizers.  Fails if the measurements
// were taken on a different mesh, grid or boundary part, or if they were
// synthesized on the reconstruction mesh without an explicit opt-in.
ReconstructionReport reconstruct(const Scenario& scenario, const Mesh& mesh,
                                 const MeasurementSet& measurements);

struct AsymptoticsRow {
    double eps = 0.0;
    double discrete_volume = 0.0;  // measured volume of elements inside the ball
    double linf_l2 = 0.0;          // max_t L2 norm of u_eps - u0
    double l2_h1 = 0.0;            // space-time H1 norm of u_eps - u0
    double l2_l2 = 0.0;            // space-time L2 norm of u_eps - u0
    double cost = 0.0;             // misfit of the probe trajectory vs the data
    double lhs = 0.0;              // cost - background misfit
    double prediction = 0.0;       // discrete_volume * indicator at the probe center
    double ratio = 0.0;            // lhs / prediction
    std::string warning;
};

struct AsymptoticsStudy {
    std::vector<AsymptoticsRow> rows;  // ordered as eps_list
    double background_cost = 0.0;      // misfit of the background vs the data
    double min_gradient = 0.0;
    std::size_t probe_vertex = 0;      // vertex nearest the inclusion center
    double indicator_at_probe = 0.0;
    double slope_l2h1 = 0.0;           // log-log slope vs discrete volume
    double slope_l2l2 = 0.0;
    double slope_linf_l2 = 0.0;
};

// Shrinking-inclusion study on a fixed mesh.  Boundary data is synthesized
// once from the scenario inclusion on this same mesh (deliberately, so the
// probe comparison is free of interpolation error), and the adjoint and
// indicator of that fixed data are computed once.  Each radius in eps_list
// then probes an inclusion at the same center: its misfit drop against the
// background is compared with the first-order prediction vol * G(center),
// whose quality must improve as the probe shrinks.  The volume norms of
// u_eps - u0 per radius feed the convergence-rate slopes.
AsymptoticsStudy asymptotics_study(const Scenario& scenario, const Mesh& mesh,
                                   const std::vector<double>& eps_list);

// Least-squares slope of log(y) against log(x); x and y must be positive.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace tgrec
