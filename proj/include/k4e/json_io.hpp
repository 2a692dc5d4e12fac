#pragma once

// JSON interchange. The design record {"order": v, "blocks": [[a,b,c,d],...]}
// (degree-3 pair first, blocks sorted canonically) is the unit every command
// and data file is built from; reading a record revalidates it, so a record
// round-trips to an equal Design.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "k4e/analyze.hpp"
#include "k4e/canonical.hpp"
#include "k4e/classify.hpp"
#include "k4e/common.hpp"
#include "k4e/design.hpp"
#include "k4e/permutation.hpp"
#include "k4e/spectrum.hpp"

namespace k4e {

inline nlohmann::json design_to_json(const Design& d) {
  nlohmann::json blocks = nlohmann::json::array();
  for (const Block& blk : d.blocks)
    blocks.push_back({int(blk.a), int(blk.b), int(blk.c), int(blk.d)});
  return nlohmann::json{{"order", d.order}, {"blocks", blocks}};
}

inline Design design_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("blocks"))
    throw Error(ErrorKind::BadInput, "design record needs order and blocks");
  int v = j.at("order").get<int>();
  std::vector<Block> blocks;
  for (const auto& arr : j.at("blocks")) {
    if (!arr.is_array() || arr.size() != 4)
      throw Error(ErrorKind::BadInput, "block must be a 4-element array");
    blocks.push_back(make_block(arr[0].get<int>(), arr[1].get<int>(), arr[2].get<int>(),
                                arr[3].get<int>()));
  }
  return validate_design(v, std::move(blocks));
}

inline nlohmann::json permutation_to_json(const Permutation& p) {
  nlohmann::json images = nlohmann::json::array();
  for (Vertex x : p.image) images.push_back(int(x));
  return nlohmann::json{{"perm", images}};
}

inline Permutation permutation_from_json(const nlohmann::json& j) {
  std::vector<int> images;
  const nlohmann::json& arr = j.is_object() ? j.at("perm") : j;
  for (const auto& x : arr) images.push_back(x.get<int>());
  return make_permutation(images);
}

inline nlohmann::json canonical_to_json(const CanonicalForm& cf) {
  nlohmann::json j = design_to_json(cf.design);
  j["aut_order"] = cf.aut_order;
  return j;
}

inline nlohmann::json classification_to_json(const Classification& c) {
  nlohmann::json classes = nlohmann::json::array();
  for (const DesignClass& cls : c.classes) {
    nlohmann::json entry = design_to_json(cls.representative);
    entry["aut_order"] = cls.aut_order;
    entry["class_size"] = cls.size;
    classes.push_back(entry);
  }
  return nlohmann::json{{"order", c.order},
                        {"class_count", c.classes.size()},
                        {"labeled_total", c.labeled_total},
                        {"classes", classes}};
}

inline nlohmann::json analyze_to_json(const AnalyzeResult& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const LemmaCheck& c : r.checks) {
    nlohmann::json entry{{"name", c.name}, {"checked", c.checked}, {"violations", nlohmann::json::array()}};
    entry["violation_count"] = c.violations;
    for (const Design& d : c.examples) entry["violations"].push_back(design_to_json(d));
    checks.push_back(entry);
  }
  return nlohmann::json{{"order", r.order},
                        {"designs_checked", r.designs},
                        {"checks", checks},
                        {"all_pass", r.all_pass}};
}

inline nlohmann::json adm_to_json(const AdmEnvelope& env, const JSets& ref) {
  nlohmann::json pairs = nlohmann::json::array();
  for (auto [s, t] : env.pairs) pairs.push_back({s, t});
  return nlohmann::json{{"order", env.order},
                        {"b", block_count(env.order)},
                        {"J", ref.j},
                        {"J_T", ref.j_t},
                        {"pairs", pairs}};
}

inline nlohmann::json spectrum_to_json(const SpectrumResult& r) {
  nlohmann::json achieved = nlohmann::json::array();
  for (const SpectrumWitness& w : r.achieved) {
    nlohmann::json images = nlohmann::json::array();
    for (Vertex x : w.perm.image) images.push_back(int(x));
    achieved.push_back(nlohmann::json{{"s", w.s},
                                      {"t", w.t},
                                      {"i", w.source_class},
                                      {"j", w.target_class},
                                      {"perm", images}});
  }
  nlohmann::json excluded = nlohmann::json::array();
  for (auto [s, t] : r.excluded_within_adm) excluded.push_back({s, t});
  return nlohmann::json{{"order", r.order},
                        {"achieved", achieved},
                        {"excluded_within_adm", excluded}};
}

inline std::string design_ndjson_line(const Design& d) {
  return design_to_json(d).dump();
}

inline nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::BadInput, "cannot open file: " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

}  // namespace k4e
