#include "codeg/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <iostream>

#include "codeg/error.hpp"
#include "codeg/psl2.hpp"
#include "codeg/serialize.hpp"

namespace codeg {

namespace {

i64 parse_int_arg(const std::string& text, const std::string& whole) {
  i64 out = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw Error("group spec '" + whole + "': bad integer parameter '" + text + "'");
  return out;
}

}  // namespace

GroupSpec parse_group_spec(const std::string& text, const Caps& caps) {
  if (text == "quaternion8") return quaternion8();

  auto colon = text.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == text.size())
    throw Error("unrecognized group spec '" + text + "'");
  std::string family = text.substr(0, colon);
  std::string arg = text.substr(colon + 1);

  if (family == "file") return load_group_file(arg);
  if (family == "product") {
    auto star = arg.find('*');
    if (star == std::string::npos)
      throw Error("group spec '" + text + "': product needs <spec>*<spec>");
    GroupSpec a = parse_group_spec(arg.substr(0, star), caps);
    GroupSpec b = parse_group_spec(arg.substr(star + 1), caps);
    return direct_product(a, b);
  }

  i64 n = parse_int_arg(arg, text);
  if (family == "psl2") return build_psl2(n, caps.group_order).group;
  if (family == "sl2") return sl2_group(n);
  if (family == "alt") return alternating_group((int)n);
  if (family == "sym") return symmetric_group((int)n);
  if (family == "cyclic") return cyclic_group((int)n);
  if (family == "dihedral") return dihedral_group((int)n);
  if (family == "frobenius") return frobenius_agl1(n);
  throw Error("unrecognized group spec '" + text + "'");
}

std::vector<CorpusEntry> build_corpus(const Config& cfg) {
  std::vector<std::string> wanted;
  for (i64 q : {4, 5, 7, 8, 9, 11, 13}) wanted.push_back("psl2:" + std::to_string(q));
  for (i64 q : {3, 5, 7, 9}) wanted.push_back("sl2:" + std::to_string(q));
  for (int n = 3; n <= 7; ++n) wanted.push_back("alt:" + std::to_string(n));
  for (int n = 3; n <= 7; ++n) wanted.push_back("sym:" + std::to_string(n));
  for (int n = 2; n <= 60; ++n) wanted.push_back("cyclic:" + std::to_string(n));
  for (int n = 3; n <= 50; ++n) wanted.push_back("dihedral:" + std::to_string(n));
  for (i64 q : {5, 7, 8, 9, 11, 13}) wanted.push_back("frobenius:" + std::to_string(q));
  wanted.push_back("quaternion8");
  wanted.push_back("product:alt:5*alt:5");

  const auto& fams = cfg.corpus_families;
  auto family_of = [](const std::string& s) { return s.substr(0, s.find(':')); };
  auto keep = [&](const std::string& s) {
    return fams.empty() || std::find(fams.begin(), fams.end(), family_of(s)) != fams.end();
  };

  std::vector<CorpusEntry> out;
  for (const std::string& s : wanted) {
    if (!keep(s)) continue;
    try {
      out.push_back({s, parse_group_spec(s, cfg.caps)});
    } catch (const Error& e) {
      std::cerr << "corpus: skipping " << s << ": " << e.what() << "\n";
    }
  }
  for (const std::string& path : cfg.corpus_files) {
    std::string s = "file:" + path;
    if (!keep(s)) continue;
    out.push_back({s, load_group_file(path)});
  }
  return out;
}

}  // namespace codeg
