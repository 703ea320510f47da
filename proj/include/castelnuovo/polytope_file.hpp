#pragma once

#include <castelnuovo/point.hpp>

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace castelnuovo {

/// A named vertex list, read either as a JSON document
///   {"name": "...", "vertices": [[0,0],[1,0],[0,1]]}
/// or as plain text with one whitespace-separated integer vector per line
/// ('#' starts a comment).
struct PolytopeFile {
  std::string name;
  std::vector<LatticePoint> vertices;

  friend bool operator==(const PolytopeFile&, const PolytopeFile&) = default;
};

/// Throws ParseError with line/field context. `source` labels diagnostics.
PolytopeFile parse_polytope_file(std::string_view text, std::string_view source = "<input>");
PolytopeFile read_polytope_file(const std::filesystem::path& path);

std::string to_json_text(const PolytopeFile& file);
void write_polytope_file(const std::filesystem::path& path, const PolytopeFile& file);

}  // namespace castelnuovo
