#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "hmon/ar_theory.hpp"

namespace moncli {

using json = nlohmann::ordered_json;

hmon::BaseRing parse_ring(const json& j);
json emit_ring(const hmon::BaseRing& r);
/// "int-local:2", "poly-local:Q", "poly-local:3"
hmon::BaseRing parse_ring_spec(const std::string& spec);

hmon::Mat parse_matrix(const json& j, const hmon::BaseRing& ring, std::size_t rows, std::size_t cols);
json emit_matrix(const hmon::Mat& m);

hmon::MonObject parse_object(const json& j);
json emit_object(const hmon::MonObject& f);

/// A morphism together with how its endpoints were written, so that
/// re-emitting a parsed file reproduces it.
struct MorphismDoc {
  json source;  // path string or inline object
  json target;
  hmon::MonMorphism psi;
};
/// Relative endpoint paths are resolved against `base_dir`.
MorphismDoc parse_morphism(const json& j, const std::filesystem::path& base_dir);
json emit_morphism(const MorphismDoc& doc);
json emit_morphism(const hmon::MonMorphism& psi);

json emit_triangle(const hmon::Triangle& tr);
hmon::Triangle parse_triangle(const json& j, const std::filesystem::path& base_dir);

/// Canonical text: ", " and ": " between members, matrices without spaces.
std::string dump(const json& j);

json read_json_file(const std::filesystem::path& path);
bool is_morphism_doc(const json& j);
bool is_triangle_doc(const json& j);

}  // namespace moncli
