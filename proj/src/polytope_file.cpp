#include <castelnuovo/errors.hpp>
#include <castelnuovo/json_util.hpp>
#include <castelnuovo/polytope_file.hpp>

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace castelnuovo {

namespace {

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

[[noreturn]] void fail(std::string_view source, const std::string& what) {
  std::ostringstream os;
  os << source << ": " << what;
  throw ParseError(os.str());
}

bool parse_integer_token(const std::string& token, Integer& out) {
  std::size_t start = (token[0] == '-' || token[0] == '+') ? 1 : 0;
  if (start == token.size()) return false;
  for (std::size_t i = start; i < token.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(token[i]))) return false;
  return out.set_str(token[0] == '+' ? token.substr(1) : token, 10) == 0;
}

PolytopeFile parse_json(std::string_view text, std::string_view source) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::ostringstream os;
    os << "line " << line_of_offset(text, e.byte == 0 ? 0 : e.byte - 1) << ": malformed JSON ("
       << e.what() << ")";
    fail(source, os.str());
  }
  if (!doc.is_object()) fail(source, "top-level JSON value must be an object");

  PolytopeFile file;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) fail(source, "field \"name\" must be a string");
    file.name = doc["name"].get<std::string>();
  }
  if (!doc.contains("vertices")) fail(source, "missing field \"vertices\"");
  const auto& verts = doc["vertices"];
  if (!verts.is_array()) fail(source, "field \"vertices\" must be an array");
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const auto& v = verts[i];
    if (!v.is_array()) fail(source, "vertices[" + std::to_string(i) + "] must be an array");
    LatticePoint pt(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) {
      try {
        pt[j] = integer_from_json(v[j]);
      } catch (const ParseError& e) {
        fail(source, "vertices[" + std::to_string(i) + "][" + std::to_string(j) + "]: " + e.what());
      }
    }
    if (!file.vertices.empty() && pt.size() != file.vertices.front().size())
      fail(source, "vertices[" + std::to_string(i) + "] has " + std::to_string(pt.size()) +
                       " coordinates, expected " + std::to_string(file.vertices.front().size()));
    if (pt.size() == 0) fail(source, "vertices[" + std::to_string(i) + "] is empty");
    file.vertices.push_back(std::move(pt));
  }
  return file;
}

PolytopeFile parse_plain(std::string_view text, std::string_view source) {
  PolytopeFile file;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string token;
    std::vector<Integer> coords;
    while (fields >> token) {
      Integer v;
      if (!parse_integer_token(token, v))
        fail(source, "line " + std::to_string(lineno) + ", field " + std::to_string(coords.size() + 1) +
                         ": '" + token + "' is not an integer");
      coords.push_back(std::move(v));
    }
    if (coords.empty()) continue;
    if (!file.vertices.empty() && coords.size() != file.vertices.front().size())
      fail(source, "line " + std::to_string(lineno) + ": " + std::to_string(coords.size()) +
                       " coordinates, expected " + std::to_string(file.vertices.front().size()));
    file.vertices.emplace_back(std::move(coords));
  }
  return file;
}

}  // namespace

PolytopeFile parse_polytope_file(std::string_view text, std::string_view source) {
  const auto first = std::find_if(text.begin(), text.end(),
                                  [](char c) { return !std::isspace(static_cast<unsigned char>(c)); });
  PolytopeFile file = (first != text.end() && *first == '{') ? parse_json(text, source)
                                                             : parse_plain(text, source);
  if (file.vertices.empty()) fail(source, "no vertices");
  return file;
}

PolytopeFile read_polytope_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  PolytopeFile file = parse_polytope_file(buf.str(), path.string());
  if (file.name.empty()) file.name = path.stem().string();
  return file;
}

std::string to_json_text(const PolytopeFile& file) {
  nlohmann::json doc;
  doc["name"] = file.name;
  doc["vertices"] = nlohmann::json::array();
  for (const auto& v : file.vertices) doc["vertices"].push_back(point_to_json(v));
  return doc.dump();
}

void write_polytope_file(const std::filesystem::path& path, const PolytopeFile& file) {
  std::ofstream out(path);
  if (!out) throw Error(path.string() + ": cannot write file");
  out << to_json_text(file) << '\n';
}

}  // namespace castelnuovo
