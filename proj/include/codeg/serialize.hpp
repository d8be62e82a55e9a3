#pragma once

#include <string>

#include "codeg/chartab.hpp"
#include "codeg/codegree.hpp"
#include "codeg/nq.hpp"
#include "codeg/recognizer.hpp"
#include "json.hpp"

namespace codeg {

nlohmann::json table_to_json(const GroupData& g, const CharacterTable& t);
nlohmann::json codegree_set_to_json(const CodegreeSet& s);
nlohmann::json recognition_to_json(const std::vector<i64>& input, const RecognitionResult& r);
nlohmann::json lemma_certificate_to_json(const LemmaCertificate& c);
nlohmann::json count_check_to_json(const std::string& label, i64 r, const CountCheck& c);

/*
 * Group file: {"label": ..., "degree": n, "generators": [[[1,2],[3,4]], ...]}
 * with each generator a list of disjoint 1-indexed cycles.
 */
GroupSpec load_group_file(const std::string& path);

/*
 * Module file: {"label": ..., "p": 3, "n": 2, "generators": [[[1,1],[0,1]], ...]}
 * with each generator an n x n row-major matrix over F_p.
 */
LinearGModule load_module_file(const std::string& path);

}  // namespace codeg
