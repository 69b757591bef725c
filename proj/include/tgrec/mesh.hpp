#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace tgrec {

enum class FaceTag { endocardium, epicardium, base, other };

const char* face_tag_name(FaceTag t);
FaceTag face_tag_from_name(const std::string& name);

using Vec3 = std::array<double, 3>;

/// Orthonormal right-handed local material frame: fiber, transverse (in-sheet,
/// orthogonal to the fiber), radial (transmural). fiber x transverse = radial.
struct FiberFrame {
    Vec3 fiber{1.0, 0.0, 0.0};
    Vec3 transverse{0.0, 1.0, 0.0};
    Vec3 radial{0.0, 0.0, 1.0};
};

/// Conforming tetrahedral mesh with tagged boundary triangles.
/// Vertex data (transmural coordinate, fiber frames) is optional; when
/// present it has one entry per vertex.
struct Mesh {
    std::vector<Vec3> vertices;
    std::vector<std::array<std::size_t, 4>> tets;
    std::vector<std::array<std::size_t, 3>> boundary_faces;
    std::vector<FaceTag> face_tags;

    std::vector<double> transmural;       // in [0,1], 0 on endocardium
    std::vector<FiberFrame> frames;
    std::vector<Vec3> radial_hint;        // analytic radial direction, generators only

    std::size_t n_vertices() const { return vertices.size(); }
    std::size_t n_tets() const { return tets.size(); }

    double tet_volume(std::size_t e) const;   // signed volume of element e
    double face_area(std::size_t f) const;
    double total_volume() const;
    Vec3 tet_centroid(std::size_t e) const;

    std::array<Vec3, 2> bounding_box() const;
    double diameter() const;  // bounding box diagonal

    /// Ids of vertices lying on at least one boundary face.
    std::vector<std::size_t> boundary_vertices() const;

    std::size_t nearest_vertex(const Vec3& p) const;  // ties -> lowest id

    /// Full consistency check: positive volumes, watertight boundary that
    /// matches the stored face list, single connected component, orthonormal
    /// frames when present. Throws std::runtime_error with a description.
    void validate() const;

    std::uint64_t content_hash() const;
};

struct BoxTagPlanes {
    FaceTag x0 = FaceTag::other, x1 = FaceTag::other;
    FaceTag y0 = FaceTag::other, y1 = FaceTag::other;
    FaceTag z0 = FaceTag::other, z1 = FaceTag::other;
};

/// Structured box [0,lx]x[0,ly]x[0,lz], each cell split into six tetrahedra
/// around the main diagonal; the split is conforming across cells.
Mesh generate_box(std::size_t nx, std::size_t ny, std::size_t nz, const Vec3& lengths,
                  const BoxTagPlanes& tags = {});

/// Idealized left-ventricle wall between two confocal-like truncated prolate
/// ellipsoids (semi-axes a horizontal, c along z), apex down, cut at z_base.
struct VentricleGeometry {
    double a_inner = 2.4, c_inner = 5.7;  // cm
    double a_outer = 3.2, c_outer = 6.5;
    double z_base = 1.5;

    void validate() const;

    /// (x^2+y^2)/a^2 + z^2/c^2 - 1 for the inner / outer surface.
    double level_inner(const Vec3& p) const;
    double level_outer(const Vec3& p) const;

    /// Analytic transmural coordinate: 0 on the inner surface, 1 on the
    /// outer, smooth inside the wall.
    double transmural_coordinate(const Vec3& p) const;
    Vec3 radial_direction(const Vec3& p) const;  // normalized gradient of the above

    /// Exact volume of the wall (difference of truncated ellipsoids).
    double wall_volume() const;
};

/// Structured shell mesh of the ventricle wall with target edge length
/// `resolution` (cm). Boundary faces are tagged endocardium / epicardium /
/// base; vertices carry the analytic transmural coordinate and radial hint.
Mesh generate_ventricle(const VentricleGeometry& g, double resolution);

/// Canonical axis-aligned frames, used for box domains.
void assign_canonical_frames(Mesh& m);

/// Rule-based fibers: the fiber direction rotates linearly in the transmural
/// coordinate from angle_endo_deg on the endocardium to angle_epi_deg on the
/// epicardium, measured in the plane orthogonal to the radial direction from
/// the circumferential direction toward the long axis. Requires a transmural
/// coordinate (generators provide it; for loaded meshes it is derived from
/// the distance to the tagged endocardial and epicardial surfaces).
void assign_rule_based_fibers(Mesh& m, double angle_endo_deg, double angle_epi_deg);

/// Uniform red refinement, every tetrahedron into eight via edge midpoints.
/// Original vertices keep their ids and come first in the refined mesh.
Mesh refine_uniform(const Mesh& m);

struct BoundarySubset {
    std::vector<std::size_t> faces;  // indices into mesh.boundary_faces
    std::vector<std::size_t> nodes;  // sorted unique vertex ids
};

/// Faces with the given tag, or every boundary face for selector "all".
BoundarySubset boundary_subset(const Mesh& m, const std::string& selector);

void write_mesh(std::ostream& out, const Mesh& m);
Mesh read_mesh(std::istream& in);

/// Gmsh v2 ASCII reader (element types 4 and 2). Physical surface names
/// containing "endo", "epi" or "base" map to the corresponding tags, as do
/// the physical ids 1, 2, 3 when no names are given.
Mesh read_gmsh_v2(std::istream& in);

}  // namespace tgrec
