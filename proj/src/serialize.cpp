#include "codeg/serialize.hpp"

#include <fstream>
#include <sstream>

#include "codeg/error.hpp"

namespace codeg {

nlohmann::json table_to_json(const GroupData& g, const CharacterTable& t) {
  nlohmann::json out;
  out["label"] = g.spec.label;
  out["order"] = t.order;
  out["prime"] = t.ctx.p;
  out["exponent"] = t.ctx.e;
  out["num_classes"] = (int)t.class_sizes.size();

  auto& classes = out["classes"] = nlohmann::json::array();
  for (size_t j = 0; j < g.classes.size(); ++j) {
    nlohmann::json c;
    c["index"] = (int)j;
    c["size"] = (i64)g.classes[j].members.size();
    c["rep"] = cycle_string(g.elements[g.classes[j].rep]);
    c["rep_order"] = g.classes[j].rep_order;
    classes.push_back(std::move(c));
  }

  auto& chars = out["characters"] = nlohmann::json::array();
  for (const Character& chi : t.chars) {
    nlohmann::json c;
    c["degree"] = chi.degree;
    c["values_mod_p"] = chi.values_modp;
    c["kernel_classes"] = chi.kernel_classes;
    c["kernel_order"] = chi.kernel_order;
    c["codegree"] = codegree(chi, g);
    chars.push_back(std::move(c));
  }
  return out;
}

nlohmann::json codegree_set_to_json(const CodegreeSet& s) {
  nlohmann::json out;
  out["label"] = s.source_label;
  out["values"] = s.values;
  return out;
}

nlohmann::json recognition_to_json(const std::vector<i64>& input, const RecognitionResult& r) {
  nlohmann::json out;
  out["input"] = input;
  out["matches"] = r.matches;
  out["recognized"] = !r.matches.empty();
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

nlohmann::json lemma_certificate_to_json(const LemmaCertificate& c) {
  nlohmann::json out;
  out["pass"] = c.pass;
  out["alpha_max"] = c.alpha_max;
  out["q_max"] = c.q_max;
  out["cells_checked"] = c.cells_checked;
  if (!c.counterexample.empty()) out["counterexample"] = c.counterexample;
  return out;
}

nlohmann::json count_check_to_json(const std::string& label, i64 r, const CountCheck& c) {
  nlohmann::json out;
  out["module"] = label;
  out["r"] = r;
  out["lhs"] = c.lhs;
  out["rhs"] = c.rhs;
  out["equal"] = c.equal;
  out["fixed_space_size"] = c.fixed_space_size;
  return out;
}

namespace {

nlohmann::json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(path + ": cannot read file");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return nlohmann::json::parse(buf.str());
  } catch (const std::exception& e) {
    throw Error(path + ": " + e.what());
  }
}

}  // namespace

GroupSpec load_group_file(const std::string& path) {
  nlohmann::json j = parse_file(path);
  try {
    GroupSpec s;
    s.label = j.value("label", path);
    s.degree = j.at("degree").get<int>();
    if (s.degree < 1) throw Error("degree must be >= 1");
    for (const auto& gen : j.at("generators")) {
      std::vector<std::vector<int>> cycles;
      for (const auto& cyc : gen) cycles.push_back(cyc.get<std::vector<int>>());
      s.generators.push_back(perm_from_cycles(s.degree, cycles));
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw Error(path + ": " + e.what());
  } catch (const Error& e) {
    throw Error(path + ": " + e.what());
  }
}

LinearGModule load_module_file(const std::string& path) {
  nlohmann::json j = parse_file(path);
  try {
    LinearGModule m;
    m.label = j.value("label", path);
    m.p = j.at("p").get<i64>();
    m.n = j.at("n").get<int>();
    for (const auto& gen : j.at("generators")) {
      std::vector<int> flat;
      for (const auto& row : gen) {
        auto r = row.get<std::vector<int>>();
        if ((int)r.size() != m.n) throw Error("generator row has wrong length");
        flat.insert(flat.end(), r.begin(), r.end());
      }
      m.generators.push_back(std::move(flat));
    }
    validate_module(m);
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw Error(path + ": " + e.what());
  } catch (const Error& e) {
    throw Error(path + ": " + e.what());
  }
}

}  // namespace codeg
