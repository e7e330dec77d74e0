#include "cacap/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "cacap/error.hpp"

namespace cacap {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    parse_fail(e.what());
  }
}

const json& field(const json& j, const std::string& key) {
  if (!j.is_object()) parse_fail("top level must be an object");
  auto it = j.find(key);
  if (it == j.end()) parse_fail("missing field \"" + key + "\"");
  return *it;
}

std::int64_t as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) parse_fail(where + " must be an integer");
  return j.get<std::int64_t>();
}

std::vector<std::vector<Vertex>> int_rows(const json& j, const std::string& where) {
  if (!j.is_array()) parse_fail(where + " must be an array");
  std::vector<std::vector<Vertex>> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    if (!j[i].is_array()) parse_fail(at + " must be an array");
    std::vector<Vertex> row;
    for (std::size_t k = 0; k < j[i].size(); ++k) {
      row.push_back(static_cast<Vertex>(as_int(j[i][k], at + "[" + std::to_string(k) + "]")));
    }
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<std::pair<Vertex, Vertex>> pairs(const json& j, const std::string& where) {
  std::vector<std::pair<Vertex, Vertex>> out;
  auto rows = int_rows(j, where);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != 2) parse_fail(where + "[" + std::to_string(i) + "] must have two entries");
    out.emplace_back(rows[i][0], rows[i][1]);
  }
  return out;
}

std::string row_text(const std::vector<std::vector<Vertex>>& rows) {
  json j = json::array();
  for (const auto& r : rows) j.push_back(r);
  return j.dump();
}

}  // namespace

InstanceFile parse_instance(const std::string& text) {
  const json j = parse_text(text);
  std::string kind = "cacap";
  if (j.is_object() && j.contains("kind")) {
    if (!j["kind"].is_string()) parse_fail("kind must be a string");
    kind = j["kind"].get<std::string>();
  }
  const auto n = as_int(field(j, "n"), "n");
  if (n < 0 || n > (1 << 24)) parse_fail("n out of range");
  Vertex root = 0;
  if (j.contains("root")) root = static_cast<Vertex>(as_int(j["root"], "root"));
  std::vector<Link> links;
  if (j.contains("links")) {
    for (const auto& [u, v] : pairs(j["links"], "links")) links.push_back({u, v});
  }
  if (kind == "tap") {
    TapInstance tap;
    tap.vertex_count = static_cast<int>(n);
    tap.edges = pairs(field(j, "edges"), "edges");
    tap.links = links;
    tap.root = root;
    Instance inst = tap_to_cacap(tap);
    return {std::move(inst), std::move(tap)};
  }
  if (kind != "cacap") parse_fail("unknown kind \"" + kind + "\"");
  auto cycles = int_rows(field(j, "cycles"), "cycles");
  return {Instance(Cactus::validate(static_cast<int>(n), std::move(cycles)), std::move(links), root), std::nullopt};
}

std::string serialize_instance(const InstanceFile& file) {
  std::ostringstream out;
  std::vector<std::vector<Vertex>> link_rows;
  if (file.tap) {
    const TapInstance& t = *file.tap;
    std::vector<std::vector<Vertex>> edges;
    for (const auto& [a, b] : t.edges) edges.push_back({a, b});
    for (const Link& l : t.links) link_rows.push_back({l.u, l.v});
    out << "{\n  \"kind\": \"tap\",\n  \"n\": " << t.vertex_count << ",\n  \"root\": " << t.root
        << ",\n  \"edges\": " << row_text(edges) << ",\n  \"links\": " << row_text(link_rows) << "\n}\n";
    return out.str();
  }
  const Instance& inst = file.instance;
  for (const Link& l : inst.links()) link_rows.push_back({l.u, l.v});
  out << "{\n  \"kind\": \"cacap\",\n  \"n\": " << inst.vertex_count() << ",\n  \"root\": " << inst.root()
      << ",\n  \"cycles\": " << row_text(inst.cactus().cycles()) << ",\n  \"links\": " << row_text(link_rows)
      << "\n}\n";
  return out.str();
}

std::string serialize_instance(const Instance& instance) { return serialize_instance(InstanceFile{instance, {}}); }

std::optional<std::int64_t> SolutionFile::stat(const std::string& key) const {
  for (const auto& [k, v] : stats) {
    if (k == key) return v;
  }
  return std::nullopt;
}

SolutionFile parse_solution(const std::string& text) {
  const json j = parse_text(text);
  SolutionFile s;
  const json& algo = field(j, "algorithm");
  if (!algo.is_string()) parse_fail("algorithm must be a string");
  s.algorithm = algo.get<std::string>();
  const json& links = field(j, "links");
  if (!links.is_array()) parse_fail("links must be an array");
  for (std::size_t i = 0; i < links.size(); ++i) {
    s.links.push_back(static_cast<LinkId>(as_int(links[i], "links[" + std::to_string(i) + "]")));
  }
  s.size = static_cast<int>(as_int(field(j, "size"), "size"));
  const json& feasible = field(j, "feasible");
  if (!feasible.is_boolean()) parse_fail("feasible must be a boolean");
  s.feasible = feasible.get<bool>();
  if (j.contains("stats")) {
    if (!j["stats"].is_object()) parse_fail("stats must be an object");
    for (const auto& [k, v] : j["stats"].items()) s.stats.emplace_back(k, as_int(v, "stats." + k));
  }
  return s;
}

std::string serialize_solution(const SolutionFile& file) {
  json stats = json::object();
  for (const auto& [k, v] : file.stats) stats[k] = v;
  std::ostringstream out;
  out << "{\n  \"algorithm\": " << json(file.algorithm).dump() << ",\n  \"links\": " << json(file.links).dump()
      << ",\n  \"size\": " << file.size << ",\n  \"feasible\": " << (file.feasible ? "true" : "false")
      << ",\n  \"stats\": " << stats.dump() << "\n}\n";
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) parse_fail("cannot write " + path);
  out << text;
}

}  // namespace cacap
