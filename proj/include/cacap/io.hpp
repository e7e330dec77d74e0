#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cacap/instance.hpp"
#include "cacap/transforms.hpp"

namespace cacap {

/// One instance per file. `tap` is set when the file gave tree edges; the
/// instance is then its doubled-edge cactus.
struct InstanceFile {
  Instance instance;
  std::optional<TapInstance> tap;
};

/// Throws ParseError for malformed text or fields, and the validation error
/// of the cactus or links otherwise.
InstanceFile parse_instance(const std::string& text);
std::string serialize_instance(const InstanceFile& file);
std::string serialize_instance(const Instance& instance);

struct SolutionFile {
  std::string algorithm;
  std::vector<LinkId> links;
  int size = 0;
  bool feasible = false;
  /// Named integer statistics, in insertion order.
  std::vector<std::pair<std::string, std::int64_t>> stats;

  std::optional<std::int64_t> stat(const std::string& key) const;
  bool operator==(const SolutionFile&) const = default;
};

SolutionFile parse_solution(const std::string& text);
std::string serialize_solution(const SolutionFile& file);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace cacap
