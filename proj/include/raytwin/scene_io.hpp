#pragma once

#include "raytwin/geometry.hpp"

#include <string>

namespace raytwin::geom {

// Scene document format (JSON):
//   {
//     "ground_plane": bool,
//     "materials": { "name": {"eps_r": x, "sigma": y}, ... },
//     "buildings": [ {"footprint": [[x,y],...], "height": h, "material": "name"}, ... ],
//     "entities":  [ {"id": n, "position": [x,y,z]}, ... ]
//   }
// Throws SceneError on malformed documents or validation failures.
Scene load_scene(const std::string& document);
Scene load_scene_file(const std::string& path);

std::string serialize_scene(const Scene& scene);

}  // namespace raytwin::geom
