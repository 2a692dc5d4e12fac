// k4e: enumerate, classify and analyze (K4-e)-designs of orders 6, 10, 11,
// and compute their fine triangle intersection spectra.
//
// Subcommands:
//   enumerate  stream every labeled design as NDJSON (supports --resume)
//   classify   isomorphism classes with canonical representatives
//   analyze    sweeping verification of the structural claims
//   spectrum   exhaustive (s,t) sweep over class representatives
//   adm        the admissible envelope Adm(v) from the reference J / J_T sets
//   verify     replay the permutation certificates from a data file
//   export     flatten a spectrum JSON to CSV
//
// Outputs are deterministic: byte-identical across reruns and --jobs values.
// Exit codes: 0 = success / all assertions pass, 1 = a verification failed,
// 2 = usage error.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "k4e/analyze.hpp"
#include "k4e/certificates.hpp"
#include "k4e/classify.hpp"
#include "k4e/design.hpp"
#include "k4e/enumerate.hpp"
#include "k4e/json_io.hpp"
#include "k4e/parallel.hpp"
#include "k4e/spectrum.hpp"

namespace {

int default_jobs() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Writes to the path, or stdout for "-".
void write_output(const std::string& path, const std::string& content) {
  if (path == "-" || path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw k4e::Error(k4e::ErrorKind::BadInput, "cannot open output file: " + path);
  out << content;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

struct ResumeState {
  std::set<int> completed;
};

ResumeState read_resume(const std::string& path) {
  ResumeState state;
  std::ifstream in(path);
  if (!in) return state;  // first run: nothing completed yet
  nlohmann::json j;
  in >> j;
  for (const auto& idx : j.at("completed")) state.completed.insert(idx.get<int>());
  return state;
}

void write_resume(const std::string& path, int order, const std::set<int>& completed) {
  nlohmann::json j{{"order", order},
                   {"completed", std::vector<int>(completed.begin(), completed.end())}};
  std::ofstream out(path, std::ios::binary);
  if (!out) throw k4e::Error(k4e::ErrorKind::BadInput, "cannot open resume file: " + path);
  out << dump(j);
}

int cmd_enumerate(int order, int jobs, const std::string& output, const std::string& resume) {
  ResumeState state;
  if (!resume.empty()) state = read_resume(resume);
  const int units = static_cast<int>(k4e::depth1_blocks(order).size());
  std::vector<int> todo;
  for (int u = 0; u < units; ++u)
    if (!state.completed.count(u)) todo.push_back(u);

  // Per-unit buffers, emitted in unit order so the stream is deterministic.
  std::vector<std::string> chunks(todo.size());
  std::vector<std::uint64_t> counts(todo.size(), 0);
  k4e::for_each_unit(static_cast<int>(todo.size()), jobs, [&](int idx, int) {
    std::string chunk;
    counts[idx] = k4e::enumerate_subtree(order, todo[idx], [&](const k4e::Design& d) {
      chunk += k4e::design_ndjson_line(d);
      chunk += '\n';
    });
    chunks[idx] = std::move(chunk);
  });

  std::string stream;
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < chunks.size(); ++i) {
    stream += chunks[i];
    total += counts[i];
  }
  write_output(output, stream);
  if (!resume.empty()) {
    for (int u : todo) state.completed.insert(u);
    write_resume(resume, order, state.completed);
  }
  std::cerr << "enumerated " << total << " designs across " << todo.size() << " of " << units
            << " subtrees\n";
  return 0;
}

int cmd_classify(int order, int jobs, const std::string& output) {
  k4e::Classification c = k4e::enumerate_classes(order, jobs);
  write_output(output, dump(k4e::classification_to_json(c)));
  return 0;
}

int cmd_analyze(int order, int jobs, const std::string& output) {
  k4e::AnalyzeResult r = k4e::analyze_order(order, jobs);
  write_output(output, dump(k4e::analyze_to_json(r)));
  return r.all_pass ? 0 : 1;
}

std::string spectrum_csv(const nlohmann::json& spectrum);

int cmd_spectrum(int order, int jobs, bool full_sweep, const std::string& format,
                 const std::string& output) {
  k4e::Classification c = k4e::enumerate_classes(order, jobs);
  std::vector<k4e::Design> reps;
  for (const auto& cls : c.classes) reps.push_back(cls.representative);
  k4e::SpectrumOptions opt;
  opt.jobs = jobs;
  opt.full_sweep = full_sweep;
  k4e::SpectrumResult r = k4e::compute_spectrum(order, reps, opt);
  nlohmann::json j = k4e::spectrum_to_json(r);
  write_output(output, format == "csv" ? spectrum_csv(j) : dump(j));
  return 0;
}

int cmd_adm(int order, const std::string& format, const std::string& output) {
  k4e::JSets ref = k4e::reference_j_sets(order);
  k4e::AdmEnvelope env = k4e::adm(order, ref.j, ref.j_t);
  if (format == "csv") {
    std::ostringstream out;
    out << "s,t\n";
    for (auto [s, t] : env.pairs) out << s << ',' << t << '\n';
    write_output(output, out.str());
  } else {
    write_output(output, dump(k4e::adm_to_json(env, ref)));
  }
  return 0;
}

std::string default_certificate_path(int order) {
  std::string name = "order" + std::to_string(order) + ".json";
  if (const char* dir = std::getenv("K4E_CERTIFICATES"))
    return std::string(dir) + "/" + name;
  return "data/certificates/" + name;
}

int cmd_verify(int order, const std::string& certificates, const std::string& output) {
  std::string path = certificates.empty() ? default_certificate_path(order) : certificates;
  k4e::CertificateSet set = k4e::load_certificates(path);
  if (set.order != order)
    throw k4e::Error(k4e::ErrorKind::BadInput, "certificate file is for a different order",
                     set.order, order);
  k4e::CertificateReport report = k4e::verify_certificates(set);
  write_output(output, dump(k4e::certificate_report_to_json(report)));
  return report.all_pass ? 0 : 1;
}

std::string spectrum_csv(const nlohmann::json& spectrum) {
  std::ostringstream out;
  out << "s,t,i,j,perm\n";
  for (const auto& w : spectrum.at("achieved")) {
    std::vector<int> images;
    for (const auto& x : w.at("perm")) images.push_back(x.get<int>());
    k4e::Permutation p = k4e::make_permutation(images);
    out << w.at("s").get<int>() << ',' << w.at("t").get<int>() << ','
        << w.at("i").get<int>() << ',' << w.at("j").get<int>() << ",\""
        << k4e::cycle_string(p) << "\"\n";
  }
  return out.str();
}

int cmd_export(const std::string& input, const std::string& format,
               const std::string& output) {
  nlohmann::json spectrum = k4e::load_json_file(input);
  if (format == "csv") {
    write_output(output, spectrum_csv(spectrum));
  } else {
    write_output(output, dump(spectrum));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"(K4-e)-design enumeration, classification and intersection spectra"};
  app.require_subcommand(1);

  int order = 0;
  int jobs = default_jobs();
  std::string output = "-";
  std::string resume;
  std::string certificates;
  std::string input;
  std::string format = "json";
  bool full_sweep = false;

  auto add_common = [&](CLI::App* cmd, bool needs_order, bool has_jobs) {
    if (needs_order)
      cmd->add_option("--order", order, "design order (6, 10 or 11)")
          ->required()
          ->envname("K4E_ORDER");
    if (has_jobs)
      cmd->add_option("--jobs", jobs, "worker count; 1 = strictly sequential")
          ->check(CLI::PositiveNumber)
          ->envname("K4E_JOBS");
    cmd->add_option("--output", output, "output path, '-' for stdout")->envname("K4E_OUTPUT");
  };

  CLI::App* enumerate = app.add_subcommand("enumerate", "stream all labeled designs as NDJSON");
  add_common(enumerate, true, true);
  enumerate->add_option("--resume", resume, "resume file of completed depth-1 subtree indices")
      ->envname("K4E_RESUME");

  CLI::App* classify = app.add_subcommand("classify", "isomorphism classes with invariants");
  add_common(classify, true, true);

  CLI::App* analyze = app.add_subcommand("analyze", "verify structural claims over all designs");
  add_common(analyze, true, true);

  CLI::App* spectrum = app.add_subcommand("spectrum", "fine triangle intersection sweep");
  add_common(spectrum, true, true);
  spectrum->add_flag("--full-sweep", full_sweep, "sweep all v! permutations without coset reduction")
      ->envname("K4E_FULL_SWEEP");
  spectrum->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->envname("K4E_FORMAT");

  CLI::App* adm = app.add_subcommand("adm", "admissible envelope from reference J and J_T");
  add_common(adm, true, false);
  adm->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->envname("K4E_FORMAT");

  CLI::App* verify = app.add_subcommand("verify", "replay permutation certificates");
  add_common(verify, true, false);
  verify->add_option("--certificates", certificates, "certificate JSON file")
      ->envname("K4E_CERTIFICATES_FILE");

  CLI::App* exp = app.add_subcommand("export", "convert a spectrum JSON");
  exp->add_option("--input", input, "spectrum JSON produced by the spectrum command")
      ->required();
  exp->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->envname("K4E_FORMAT");
  exp->add_option("--output", output, "output path, '-' for stdout")->envname("K4E_OUTPUT");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(enumerate)) return cmd_enumerate(order, jobs, output, resume);
    if (app.got_subcommand(classify)) return cmd_classify(order, jobs, output);
    if (app.got_subcommand(analyze)) return cmd_analyze(order, jobs, output);
    if (app.got_subcommand(spectrum))
      return cmd_spectrum(order, jobs, full_sweep, format, output);
    if (app.got_subcommand(adm)) return cmd_adm(order, format, output);
    if (app.got_subcommand(verify)) return cmd_verify(order, certificates, output);
    if (app.got_subcommand(exp)) return cmd_export(input, format, output);
  } catch (const k4e::Error& e) {
    nlohmann::json err{{"error",
                        {{"kind", k4e::error_kind_name(e.kind)},
                         {"message", e.what()},
                         {"a", e.a},
                         {"b", e.b}}}};
    std::cerr << err.dump(2) << "\n";
    switch (e.kind) {
      case k4e::ErrorKind::InadmissibleOrder:
      case k4e::ErrorKind::OrderTooLarge:
      case k4e::ErrorKind::UnsupportedOrder:
      case k4e::ErrorKind::BadInput:
        return 2;
      default:
        return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "{\"error\": {\"kind\": \"Unhandled\", \"message\": \"" << e.what()
              << "\"}}\n";
    return 1;
  }
  return 2;
}
