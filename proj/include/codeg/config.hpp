#pragma once

#include <string>
#include <vector>

#include "codeg/numth.hpp"

namespace codeg {

struct Caps {
  i64 group_order = 20000;
  i64 field_size = 65536;
  int class_count = 60;
};

struct Config {
  Caps caps;
  unsigned long long seed = 1;
  std::vector<i64> q_values = {4, 5, 7, 8, 9, 11, 13};
  std::vector<i64> q_values_long = {16, 17, 19, 23, 25, 27};
  int workers = 1;
  std::vector<std::string> corpus_files;
  std::vector<std::string> corpus_families;  // empty means all families
};

Config config_from_json_text(const std::string& text, const std::string& origin);

/*
 * Explicit path wins, then the CODEG_CONFIG environment variable,
 * then built-in defaults. A named file that cannot be read is an error.
 */
Config load_config(const std::string& path = "");

}  // namespace codeg
