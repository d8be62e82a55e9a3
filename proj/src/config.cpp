#include "codeg/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "codeg/error.hpp"
#include "json.hpp"

namespace codeg {

namespace {

void read_i64_list(const nlohmann::json& j, const char* key, std::vector<i64>& out) {
  if (!j.contains(key)) return;
  out.clear();
  for (const auto& v : j.at(key)) out.push_back(v.get<i64>());
}

void read_str_list(const nlohmann::json& j, const char* key, std::vector<std::string>& out) {
  if (!j.contains(key)) return;
  out.clear();
  for (const auto& v : j.at(key)) out.push_back(v.get<std::string>());
}

}  // namespace

Config config_from_json_text(const std::string& text, const std::string& origin) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw Error("config " + origin + ": " + e.what());
  }
  if (!j.is_object()) throw Error("config " + origin + ": top level must be an object");

  Config c;
  if (j.contains("caps")) {
    const auto& k = j.at("caps");
    if (k.contains("group_order")) c.caps.group_order = k.at("group_order").get<i64>();
    if (k.contains("field_size")) c.caps.field_size = k.at("field_size").get<i64>();
    if (k.contains("class_count")) c.caps.class_count = k.at("class_count").get<int>();
  }
  if (j.contains("seed")) c.seed = j.at("seed").get<unsigned long long>();
  if (j.contains("workers")) c.workers = j.at("workers").get<int>();
  read_i64_list(j, "q_values", c.q_values);
  read_i64_list(j, "q_values_long", c.q_values_long);
  read_str_list(j, "corpus_files", c.corpus_files);
  read_str_list(j, "corpus_families", c.corpus_families);

  if (c.caps.group_order < 1 || c.caps.field_size < 2 || c.caps.class_count < 1)
    throw Error("config " + origin + ": caps must be positive");
  if (c.workers < 1) throw Error("config " + origin + ": workers must be >= 1");
  for (i64 q : c.q_values)
    if (q < 2) throw Error("config " + origin + ": q values must be >= 2");
  return c;
}

Config load_config(const std::string& path) {
  std::string file = path;
  if (file.empty()) {
    const char* env = std::getenv("CODEG_CONFIG");
    if (env != nullptr && *env != '\0') file = env;
  }
  if (file.empty()) return Config{};

  std::ifstream in(file);
  if (!in) throw Error("config: cannot read " + file);
  std::ostringstream buf;
  buf << in.rdbuf();
  return config_from_json_text(buf.str(), file);
}

}  // namespace codeg
