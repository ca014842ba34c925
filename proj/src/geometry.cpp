#include "raytwin/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace raytwin::geom {
namespace {

// Proper intersection test for 2D segments (p1,p2) and (q1,q2), endpoints
// excluded. Used only by the simplicity check.
bool segments_cross(const Vec2& p1, const Vec2& p2, const Vec2& q1, const Vec2& q2) {
  const auto orient = [](const Vec2& a, const Vec2& b, const Vec2& c) {
    const double v = (b.x() - a.x()) * (c.y() - a.y()) - (b.y() - a.y()) * (c.x() - a.x());
    if (v > kGeomEps) return 1;
    if (v < -kGeomEps) return -1;
    return 0;
  };
  const int o1 = orient(p1, p2, q1);
  const int o2 = orient(p1, p2, q2);
  const int o3 = orient(q1, q2, p1);
  const int o4 = orient(q1, q2, p2);
  return o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0;
}

double point_segment_distance2(const Vec2& p, const Vec2& a, const Vec2& b) {
  const Vec2 ab = b - a;
  const double len2 = ab.squaredNorm();
  if (len2 == 0.0) return (p - a).squaredNorm();
  const double t = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
  return (p - (a + t * ab)).squaredNorm();
}

Facet make_wall(const Vec2& a, const Vec2& b, double height, const std::string& material) {
  Facet f;
  f.origin = Vec3(a.x(), a.y(), 0.0);
  const Vec2 edge = b - a;
  // CCW footprint: interior is left of the edge, outward normal points right.
  const Vec2 n2 = Vec2(edge.y(), -edge.x()).normalized();
  f.normal = Vec3(n2.x(), n2.y(), 0.0);
  f.basis_u = Vec3(edge.x(), edge.y(), 0.0).normalized();
  f.basis_v = Vec3::UnitZ();
  f.vertices = {Vec3(a.x(), a.y(), 0.0), Vec3(b.x(), b.y(), 0.0),
                Vec3(b.x(), b.y(), height), Vec3(a.x(), a.y(), height)};
  const double len = edge.norm();
  f.polygon = {Vec2(0, 0), Vec2(len, 0), Vec2(len, height), Vec2(0, height)};
  f.material = material;
  return f;
}

Facet make_roof(const Building& b) {
  Facet f;
  f.origin = Vec3(b.footprint[0].x(), b.footprint[0].y(), b.height);
  f.normal = Vec3::UnitZ();
  f.basis_u = Vec3::UnitX();
  f.basis_v = Vec3::UnitY();
  for (const Vec2& v : b.footprint) {
    f.vertices.emplace_back(v.x(), v.y(), b.height);
    f.polygon.emplace_back(v.x() - b.footprint[0].x(), v.y() - b.footprint[0].y());
  }
  f.material = b.material;
  return f;
}

Facet make_ground(const std::string& material) {
  Facet f;
  f.origin = Vec3::Zero();
  f.normal = Vec3::UnitZ();
  f.basis_u = Vec3::UnitX();
  f.basis_v = Vec3::UnitY();
  f.unbounded = true;
  f.material = material;
  return f;
}

}  // namespace

double polygon_signed_area2(const std::vector<Vec2>& poly) {
  double acc = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Vec2& a = poly[i];
    const Vec2& b = poly[(i + 1) % poly.size()];
    acc += a.x() * b.y() - b.x() * a.y();
  }
  return acc;
}

bool polygon_is_simple(const std::vector<Vec2>& poly) {
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (j == i || (j + 1) % n == i || (i + 1) % n == j) continue;  // adjacent
      if (segments_cross(poly[i], poly[(i + 1) % n], poly[j], poly[(j + 1) % n])) {
        return false;
      }
    }
  }
  return true;
}

bool point_in_polygon(const std::vector<Vec2>& poly, const Vec2& p) {
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (point_segment_distance2(p, poly[i], poly[(i + 1) % n]) <= kGeomEps * kGeomEps) {
      return true;  // on the boundary
    }
  }
  bool inside = false;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Vec2& a = poly[i];
    const Vec2& b = poly[j];
    if ((a.y() > p.y()) != (b.y() > p.y())) {
      const double x = a.x() + (p.y() - a.y()) / (b.y() - a.y()) * (b.x() - a.x());
      if (p.x() < x) inside = !inside;
    }
  }
  return inside;
}

Scene::Scene(std::vector<Building> buildings, std::map<std::string, Material> materials,
             std::map<std::uint32_t, Entity> entities, bool ground_plane)
    : buildings_(std::move(buildings)),
      materials_(std::move(materials)),
      entities_(std::move(entities)),
      ground_plane_(ground_plane) {
  for (auto& b : buildings_) {
    if (b.footprint.size() < 3) throw SceneError("building footprint needs >= 3 vertices");
    if (!(b.height > 0.0)) throw SceneError("building height must be > 0");
    const double area2 = polygon_signed_area2(b.footprint);
    if (std::abs(area2) < kGeomEps) throw SceneError("degenerate building footprint");
    if (area2 < 0.0) std::reverse(b.footprint.begin(), b.footprint.end());  // enforce CCW
    if (!polygon_is_simple(b.footprint)) throw SceneError("self-intersecting building footprint");
    if (materials_.count(b.material) == 0) {
      throw SceneError("unknown material name: " + b.material);
    }
  }
  for (const auto& [name, m] : materials_) {
    if (!(m.eps_r >= 1.0)) throw SceneError("material " + name + ": eps_r must be >= 1");
    if (!(m.sigma >= 0.0)) throw SceneError("material " + name + ": sigma must be >= 0");
  }
  for (const auto& [id, e] : entities_) {
    if (ground_plane_ && e.position.z() < 0.0) {
      throw SceneError("entity " + std::to_string(id) + " below ground plane");
    }
  }

  for (const auto& b : buildings_) {
    const std::size_t n = b.footprint.size();
    for (std::size_t i = 0; i < n; ++i) {
      facets_.push_back(make_wall(b.footprint[i], b.footprint[(i + 1) % n], b.height, b.material));
    }
    facets_.push_back(make_roof(b));
  }
  if (ground_plane_) {
    // The ground reflects with the first declared material, or a default
    // medium-dry-ground if the scene declares none.
    std::string mat = materials_.empty() ? std::string() : materials_.begin()->first;
    if (mat.empty()) {
      materials_["ground"] = Material{15.0, 0.035};
      mat = "ground";
    }
    facets_.push_back(make_ground(mat));
  }
}

const Entity& Scene::entity(std::uint32_t id) const {
  const auto it = entities_.find(id);
  if (it == entities_.end()) {
    throw std::out_of_range("unknown entity id " + std::to_string(id));
  }
  return it->second;
}

const Material& Scene::material(const std::string& name) const {
  const auto it = materials_.find(name);
  if (it == materials_.end()) throw std::out_of_range("unknown material " + name);
  return it->second;
}

Scene Scene::moved(std::uint32_t id, const Vec3& position) const {
  entity(id);  // throws on unknown id
  Scene out = *this;
  out.entities_[id].position = position;
  return out;
}

bool facet_contains(const Facet& f, const Vec3& p, double tol) {
  if (std::abs(f.plane_distance(p)) > tol) return false;
  if (f.unbounded) return true;
  const Vec3 rel = p - f.origin;
  return point_in_polygon(f.polygon, Vec2(rel.dot(f.basis_u), rel.dot(f.basis_v)));
}

Vec3 mirror_point(const Facet& f, const Vec3& p) {
  return p - 2.0 * f.plane_distance(p) * f.normal;
}

std::optional<Vec3> segment_facet_plane_hit(const Facet& f, const Vec3& a, const Vec3& b) {
  const Vec3 d = b - a;
  const double denom = d.dot(f.normal);
  const double seg_len = d.norm();
  if (seg_len < kGeomEps || std::abs(denom) < kGeomEps) return std::nullopt;
  const double t = (f.origin - a).dot(f.normal) / denom;
  const double t_eps = kGeomEps / seg_len;
  if (t <= t_eps || t >= 1.0 - t_eps) return std::nullopt;
  const Vec3 p = a + t * d;
  if (!f.unbounded) {
    const Vec3 rel = p - f.origin;
    if (!point_in_polygon(f.polygon, Vec2(rel.dot(f.basis_u), rel.dot(f.basis_v)))) {
      return std::nullopt;
    }
  }
  return p;
}

bool segment_occluded(const Scene& scene, const Vec3& a, const Vec3& b) {
  for (const Facet& f : scene.facets()) {
    if (segment_facet_plane_hit(f, a, b)) return true;
  }
  return false;
}

std::optional<std::pair<int, double>> ray_first_hit(const Scene& scene, const Vec3& origin,
                                                    const Vec3& dir, double t_min) {
  std::optional<std::pair<int, double>> best;
  const auto& facets = scene.facets();
  for (int i = 0; i < static_cast<int>(facets.size()); ++i) {
    const Facet& f = facets[i];
    const double denom = dir.dot(f.normal);
    if (std::abs(denom) < kGeomEps) continue;
    const double t = (f.origin - origin).dot(f.normal) / denom;
    if (t <= t_min) continue;
    if (best && t >= best->second) continue;
    const Vec3 p = origin + t * dir;
    if (f.unbounded) {
      best = {i, t};
      continue;
    }
    const Vec3 rel = p - f.origin;
    if (point_in_polygon(f.polygon, Vec2(rel.dot(f.basis_u), rel.dot(f.basis_v)))) {
      best = {i, t};
    }
  }
  return best;
}

}  // namespace raytwin::geom
