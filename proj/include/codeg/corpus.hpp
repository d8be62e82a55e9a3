#pragma once

#include <string>
#include <vector>

#include "codeg/config.hpp"
#include "codeg/group.hpp"

namespace codeg {

struct CorpusEntry {
  std::string label;
  GroupSpec spec;
};

/*
 * "psl2:7", "sl2:5", "alt:5", "sym:4", "cyclic:12", "dihedral:6",
 * "frobenius:7", "quaternion8", "product:<spec>*<spec>", "file:<path>"
 */
GroupSpec parse_group_spec(const std::string& text, const Caps& caps = Caps{});

/*
 * The built-in survey: PSL(2,q) and SL(2,q) for small q, alternating and
 * symmetric groups through degree 7, cyclic and dihedral series, Frobenius
 * groups AGL(1,q), the quaternion group, and A5 x A5. cfg.corpus_families
 * filters by family prefix; cfg.corpus_files appends external groups.
 */
std::vector<CorpusEntry> build_corpus(const Config& cfg);

}  // namespace codeg
