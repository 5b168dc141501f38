#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ukd/errors.hpp"

namespace ukd::cli {

using Json = nlohmann::ordered_json;

struct Options {
  std::string permutation;
  int k = 3;
  std::optional<int> n;
  std::optional<int> max_n;
  std::string method = "auto";
  std::string format = "json";
  std::string variant;
  bool dot = false;
  bool pruned = false;
  bool seedless = false;
  int budget_n = kDefaultExhaustiveMaxN;
  std::uint64_t budget_nodes = 0;
  int degree_bound = 12;
};

/// What a command produced, in every output shape it supports.
struct Report {
  std::string command;
  Json parameters = Json::object();
  Json method;  // engine name, or null
  Json result = Json::object();
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
  std::vector<std::string> plain;
  std::optional<std::string> dot;
};

Report cmd_check(const Options& o);
Report cmd_path(const Options& o);
Report cmd_count(const Options& o);
Report cmd_series(const Options& o);
Report cmd_gf(const Options& o);
Report cmd_prohibitions(const Options& o);
Report cmd_graph(const Options& o);
Report cmd_poset(const Options& o);
Report cmd_classify(const Options& o);
Report cmd_crucial(const Options& o);
Report cmd_ir_dist(const Options& o);
Report cmd_m_dist(const Options& o);
Report cmd_realize(const Options& o);

std::string render(const Report& report, const std::string& format);

}  // namespace ukd::cli
