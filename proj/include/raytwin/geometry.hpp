#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace raytwin::geom {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;

// Single tolerance for all intersection predicates, in meters.
inline constexpr double kGeomEps = 1e-9;

// Thrown on malformed or invalid scene input.
class SceneError : public std::runtime_error {
 public:
  explicit SceneError(const std::string& what) : std::runtime_error(what) {}
};

struct Material {
  double eps_r = 1.0;   // relative permittivity, >= 1
  double sigma = 0.0;   // conductivity [S/m], >= 0

  friend bool operator==(const Material&, const Material&) = default;
};

// Extruded-polygon building: footprint in the z=0 plane, flat roof at z=height.
struct Building {
  std::vector<Vec2> footprint;  // counter-clockwise after load
  double height = 0.0;          // > 0
  std::string material;

  friend bool operator==(const Building& a, const Building& b) {
    return a.footprint == b.footprint && a.height == b.height && a.material == b.material;
  }
};

struct Entity {
  std::uint32_t id = 0;
  Vec3 position = Vec3::Zero();

  friend bool operator==(const Entity& a, const Entity& b) {
    return a.id == b.id && a.position == b.position;
  }
};

// Planar polygonal reflector derived from a building wall, roof, or the ground.
// Polygon extent is kept both as 3D vertices and as 2D coordinates in the
// orthonormal in-plane basis (basis_u, basis_v) anchored at `origin`.
struct Facet {
  Vec3 origin = Vec3::Zero();
  Vec3 normal = Vec3::UnitZ();       // unit norm
  Vec3 basis_u = Vec3::UnitX();
  Vec3 basis_v = Vec3::UnitY();
  std::vector<Vec3> vertices;        // empty when unbounded
  std::vector<Vec2> polygon;         // vertices in (u,v) coordinates
  std::string material;
  bool unbounded = false;            // ground plane

  double plane_distance(const Vec3& p) const { return (p - origin).dot(normal); }
};

// Immutable world snapshot. Facets are derived deterministically at
// construction: one per wall, one per roof, plus the ground when enabled.
class Scene {
 public:
  Scene() = default;
  Scene(std::vector<Building> buildings, std::map<std::string, Material> materials,
        std::map<std::uint32_t, Entity> entities, bool ground_plane);

  const std::vector<Building>& buildings() const { return buildings_; }
  const std::map<std::string, Material>& materials() const { return materials_; }
  const std::map<std::uint32_t, Entity>& entities() const { return entities_; }
  bool has_ground_plane() const { return ground_plane_; }
  const std::vector<Facet>& facets() const { return facets_; }

  const Entity& entity(std::uint32_t id) const;
  bool has_entity(std::uint32_t id) const { return entities_.count(id) != 0; }
  const Material& material(const std::string& name) const;

  // Returns a new snapshot with one entity relocated.
  Scene moved(std::uint32_t id, const Vec3& position) const;

  friend bool operator==(const Scene& a, const Scene& b) {
    return a.buildings_ == b.buildings_ && a.materials_ == b.materials_ &&
           a.entities_ == b.entities_ && a.ground_plane_ == b.ground_plane_;
  }

 private:
  std::vector<Building> buildings_;
  std::map<std::string, Material> materials_;
  std::map<std::uint32_t, Entity> entities_;
  bool ground_plane_ = false;
  std::vector<Facet> facets_;
};

// --- polygon helpers ---

// Twice the signed area of a 2D polygon; positive for counter-clockwise.
double polygon_signed_area2(const std::vector<Vec2>& poly);

// True iff the polygon has no self-intersections (shared endpoints of
// adjacent edges excluded).
bool polygon_is_simple(const std::vector<Vec2>& poly);

// Even-odd test; points within kGeomEps of the boundary count as inside.
bool point_in_polygon(const std::vector<Vec2>& poly, const Vec2& p);

// --- facet primitives ---

// True iff p lies on the facet plane (within tol) and inside its extent.
bool facet_contains(const Facet& f, const Vec3& p, double tol = kGeomEps);

// p reflected across the facet plane. Involution within 1e-12.
Vec3 mirror_point(const Facet& f, const Vec3& p);

// Intersection of the open segment (a,b) with the facet plane, requiring the
// crossing to fall strictly between the endpoints and inside the extent.
std::optional<Vec3> segment_facet_plane_hit(const Facet& f, const Vec3& a, const Vec3& b);

// True iff the open segment (a,b) crosses any facet interior. Endpoints lying
// exactly on a facet never count as occlusion.
bool segment_occluded(const Scene& scene, const Vec3& a, const Vec3& b);

// First facet hit by the ray origin + t*dir with t > t_min; returns (facet
// index, t) of the nearest hit inside a facet extent.
std::optional<std::pair<int, double>> ray_first_hit(const Scene& scene, const Vec3& origin,
                                                    const Vec3& dir, double t_min = 1e-7);

}  // namespace raytwin::geom
