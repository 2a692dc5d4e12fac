#pragma once

// Data-driven replay of permutation certificates. A certificate file names
// base designs, an excluded set E (the admissible pairs proved unreachable),
// an M bookkeeping set (labels whose certificate uses the alternative source
// design), and one certificate per achievable (s,t): a permutation in cycle
// notation plus source and target design labels. Verification recomputes
// fine_pair(pi(source), target) for every certificate and checks that the
// labels tile Adm(v) \ E exactly.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "k4e/common.hpp"
#include "k4e/design.hpp"
#include "k4e/json_io.hpp"
#include "k4e/permutation.hpp"
#include "k4e/spectrum.hpp"

namespace k4e {

struct Certificate {
  int s = 0, t = 0;
  std::string perm;    // cycle notation, fixed points omitted
  std::string source;  // design label the permutation is applied to
  std::string target;  // design label compared against
};

struct CertificateSet {
  int order = 0;
  std::map<std::string, Design> designs;
  std::vector<std::pair<int, int>> excluded;  // E
  std::vector<std::pair<int, int>> m_set;     // M
  std::vector<Certificate> certificates;
};

inline CertificateSet certificates_from_json(const nlohmann::json& j) {
  CertificateSet set;
  set.order = j.at("order").get<int>();
  for (const auto& [label, blocks] : j.at("designs").items()) {
    nlohmann::json record{{"order", set.order}, {"blocks", blocks}};
    set.designs.emplace(label, design_from_json(record));
  }
  auto pair_list = [](const nlohmann::json& arr) {
    std::vector<std::pair<int, int>> out;
    for (const auto& p : arr) out.emplace_back(p[0].get<int>(), p[1].get<int>());
    std::sort(out.begin(), out.end());
    return out;
  };
  set.excluded = pair_list(j.at("excluded"));
  set.m_set = pair_list(j.at("m_set"));
  for (const auto& c : j.at("certificates")) {
    Certificate cert;
    cert.s = c.at("s").get<int>();
    cert.t = c.at("t").get<int>();
    cert.perm = c.at("perm").get<std::string>();
    cert.source = c.at("source").get<std::string>();
    cert.target = c.at("target").get<std::string>();
    set.certificates.push_back(std::move(cert));
  }
  return set;
}

inline CertificateSet load_certificates(const std::string& path) {
  return certificates_from_json(load_json_file(path));
}

struct CertificateOutcome {
  Certificate cert;
  FinePair got;
  bool pass = false;
};

struct CertificateReport {
  int order = 0;
  std::vector<CertificateOutcome> results;
  bool labels_cover_envelope = false;  // labels are exactly Adm(v) \ E, no duplicates
  bool m_set_consistent = false;       // M is a subset of the labels
  bool all_pass = false;
};

/// Replays every certificate and checks the bookkeeping. Throws UnknownClass
/// when a certificate references a design label the file does not define.
inline CertificateReport verify_certificates(const CertificateSet& set) {
  CertificateReport report;
  report.order = set.order;
  bool every_cert_ok = true;
  for (const Certificate& cert : set.certificates) {
    auto src = set.designs.find(cert.source);
    auto tgt = set.designs.find(cert.target);
    if (src == set.designs.end() || tgt == set.designs.end())
      throw Error(ErrorKind::UnknownClass,
                  "certificate references unknown design label: " + cert.source + "/" +
                      cert.target);
    Permutation pi = parse_cycles(cert.perm, set.order);
    FinePair got = fine_pair(apply_permutation(pi, src->second), tgt->second);
    bool pass = (got.s == cert.s && got.t == cert.t);
    every_cert_ok = every_cert_ok && pass;
    report.results.push_back(CertificateOutcome{cert, got, pass});
  }

  JSets ref = reference_j_sets(set.order);
  AdmEnvelope envelope = adm(set.order, ref.j, ref.j_t);
  std::vector<std::pair<int, int>> labels;
  for (const Certificate& cert : set.certificates) labels.emplace_back(cert.s, cert.t);
  std::sort(labels.begin(), labels.end());
  bool no_dup = std::adjacent_find(labels.begin(), labels.end()) == labels.end();
  std::vector<std::pair<int, int>> expected;
  std::set_difference(envelope.pairs.begin(), envelope.pairs.end(), set.excluded.begin(),
                      set.excluded.end(), std::back_inserter(expected));
  bool excluded_inside = std::includes(envelope.pairs.begin(), envelope.pairs.end(),
                                       set.excluded.begin(), set.excluded.end());
  report.labels_cover_envelope = no_dup && excluded_inside && labels == expected;
  report.m_set_consistent = std::includes(labels.begin(), labels.end(), set.m_set.begin(),
                                          set.m_set.end());
  report.all_pass = every_cert_ok && report.labels_cover_envelope && report.m_set_consistent;
  return report;
}

inline nlohmann::json certificate_report_to_json(const CertificateReport& r) {
  nlohmann::json results = nlohmann::json::array();
  for (const CertificateOutcome& o : r.results) {
    results.push_back(nlohmann::json{{"s", o.cert.s},
                                     {"t", o.cert.t},
                                     {"perm", o.cert.perm},
                                     {"source", o.cert.source},
                                     {"target", o.cert.target},
                                     {"got", {o.got.s, o.got.t}},
                                     {"pass", o.pass}});
  }
  return nlohmann::json{{"order", r.order},
                        {"certificates", results},
                        {"labels_cover_envelope", r.labels_cover_envelope},
                        {"m_set_consistent", r.m_set_consistent},
                        {"all_pass", r.all_pass}};
}

}  // namespace k4e
