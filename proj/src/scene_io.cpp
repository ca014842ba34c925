#include "raytwin/scene_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace raytwin::geom {

using nlohmann::json;

Scene load_scene(const std::string& document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::exception& e) {
    throw SceneError(std::string("scene parse error: ") + e.what());
  }

  try {
    std::map<std::string, Material> materials;
    for (const auto& [name, m] : doc.value("materials", json::object()).items()) {
      materials[name] = Material{m.at("eps_r").get<double>(), m.at("sigma").get<double>()};
    }

    std::vector<Building> buildings;
    for (const auto& b : doc.value("buildings", json::array())) {
      Building out;
      for (const auto& v : b.at("footprint")) {
        if (!v.is_array() || v.size() != 2) throw SceneError("footprint vertex must be [x,y]");
        out.footprint.emplace_back(v[0].get<double>(), v[1].get<double>());
      }
      out.height = b.at("height").get<double>();
      out.material = b.at("material").get<std::string>();
      buildings.push_back(std::move(out));
    }

    std::map<std::uint32_t, Entity> entities;
    for (const auto& e : doc.value("entities", json::array())) {
      Entity out;
      out.id = e.at("id").get<std::uint32_t>();
      const auto& p = e.at("position");
      if (!p.is_array() || p.size() != 3) throw SceneError("entity position must be [x,y,z]");
      out.position = Vec3(p[0].get<double>(), p[1].get<double>(), p[2].get<double>());
      if (entities.count(out.id) != 0) {
        throw SceneError("duplicate entity id " + std::to_string(out.id));
      }
      entities[out.id] = out;
    }

    return Scene(std::move(buildings), std::move(materials), std::move(entities),
                 doc.value("ground_plane", false));
  } catch (const json::exception& e) {
    throw SceneError(std::string("scene field error: ") + e.what());
  }
}

Scene load_scene_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SceneError("cannot open scene file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_scene(buf.str());
}

std::string serialize_scene(const Scene& scene) {
  json doc;
  doc["ground_plane"] = scene.has_ground_plane();
  doc["materials"] = json::object();
  for (const auto& [name, m] : scene.materials()) {
    doc["materials"][name] = {{"eps_r", m.eps_r}, {"sigma", m.sigma}};
  }
  doc["buildings"] = json::array();
  for (const auto& b : scene.buildings()) {
    json fp = json::array();
    for (const auto& v : b.footprint) fp.push_back({v.x(), v.y()});
    doc["buildings"].push_back({{"footprint", fp}, {"height", b.height}, {"material", b.material}});
  }
  doc["entities"] = json::array();
  for (const auto& [id, e] : scene.entities()) {
    doc["entities"].push_back(
        {{"id", id}, {"position", {e.position.x(), e.position.y(), e.position.z()}}});
  }
  return doc.dump(2);
}

}  // namespace raytwin::geom
