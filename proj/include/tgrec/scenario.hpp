#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "tgrec/fem.hpp"
#include "tgrec/forward.hpp"
#include "tgrec/inclusion.hpp"
#include "tgrec/ionic.hpp"
#include "tgrec/mesh.hpp"

namespace tgrec {

struct MeshSpec {
    enum class Kind { box, ventricle, file };
    Kind kind = Kind::ventricle;

    std::size_t nx = 10, ny = 10, nz = 10;  // box
    Vec3 lengths{2.0, 2.0, 2.0};
    BoxTagPlanes box_tags;

    VentricleGeometry geometry;  // ventricle
    double resolution = 0.5;

    std::string path;  // file
    std::string format = "tgmesh";
};

struct FiberSpec {
    std::string mode = "auto";  // auto | canonical | rule | none
    double angle_endo_deg = -60.0;
    double angle_epi_deg = 60.0;
};

struct ConductivitySpec {
    enum class Kind { scalar, tensor };
    Kind kind = Kind::scalar;
    double k0 = 1.0;
    ConductivityEigs eigs;
};

struct InitialSpec {
    enum class Kind { rest, uniform, band };
    Kind kind = Kind::rest;
    double value = 0.0;  // uniform

    int axis = 2;  // band: coordinate axis, full plateau on [lo, hi]
    double lo = 0.0, hi = 0.0;
    double plateau = 1.0;
    double shoulder = 0.5;           // decay length outside the band
    double transmural_depth = 1.0;   // fraction of the wall reached, 1 = all
};

struct MeasurementSpec {
    std::string gamma = "endocardium";
    std::size_t n_points = 0;  // 0 = full surface data
    double noise_p = 0.0;
    std::uint64_t seed = 0;
    bool refine_synthesis = true;
    bool allow_inverse_crime = false;
};

struct ReconstructionSpec {
    double separation_d0 = 0.3;
    double large_eps_fraction = 0.1;
    double k1_trial = 0.0;  // 0: fall back to the inclusion contrast
};

struct SolverSpec {
    bool lumped_mass = true;
    bool rhs_k0 = false;
    double cg_tolerance = 1e-12;
};

struct OutputSpec {
    std::string dir = "out";
    std::size_t vtk_stride = 10;
};

struct Scenario {
    MeshSpec mesh;
    FiberSpec fibers;
    IonicParams ionic;
    ConductivitySpec conductivity;
    TimeGrid grid;
    InitialSpec initial;
    bool has_inclusion = false;
    InclusionSpec inclusion;
    MeasurementSpec measurement;
    ReconstructionSpec reconstruction;
    SolverSpec solver;
    OutputSpec output;

    void validate() const;

    /// Contrast used for the trial inclusions of the gradient formula.
    double trial_k1() const;

    /// Hash of the canonical serialization; written into every output file.
    std::uint64_t hash() const;
};

/// Strict INI-style parser: unknown sections, unknown or inapplicable keys,
/// and malformed values are errors naming the key and line.
Scenario load_scenario(std::istream& in);
Scenario load_scenario_file(const std::string& path);

/// Canonical form: fixed section and key order, exact decimal values.
/// load(write(s)) reproduces s; the scenario hash is taken over this text.
void write_scenario(std::ostream& out, const Scenario& s);

Mesh build_mesh(const Scenario& s);
ConductivityField build_conductivity(const Scenario& s, const Mesh& m);
NodalField build_initial(const Scenario& s, const Mesh& m);

/// Boundary measurement: values on a fixed node set of the reconstruction
/// mesh for every time level, plus the provenance needed to refuse
/// mismatched reconstructions.
struct MeasurementSet {
    TimeGrid grid;
    std::string gamma = "endocardium";
    std::size_t n_points_requested = 0;
    std::vector<std::size_t> nodes;  // selection order for point data
    std::vector<Vec3> positions;
    std::vector<std::vector<double>> frames;  // frames[n][k] at nodes[k]
    double noise_p = 0.0;
    std::uint64_t seed = 0;
    bool inverse_crime = false;
    std::uint64_t scenario_hash = 0;
    std::uint64_t mesh_hash = 0;
    std::string warning;  // not serialized
};

/// Greedy farthest-point subsample of the candidates (seeded start), ties to
/// the lowest vertex id. With one seed, a smaller sample is a prefix of a
/// larger one.
std::vector<std::size_t> farthest_point_sample(const Mesh& m,
                                               const std::vector<std::size_t>& candidates,
                                               std::size_t count, std::uint64_t seed);

/// Forward-solves the scenario on the uniformly refined mesh (unless the
/// scenario explicitly allows synthesizing on the reconstruction mesh),
/// restricts the trace to the measurement surface of the given mesh,
/// optionally subsamples points, then adds white noise of standard deviation
/// noise_p * (u3 - u1) addressed by (seed, frame, node).
MeasurementSet synthesize_measurements(const Scenario& s, const Mesh& mesh);

void write_measurements(std::ostream& out, const MeasurementSet& ms);
MeasurementSet read_measurements(std::istream& in);

}  // namespace tgrec
