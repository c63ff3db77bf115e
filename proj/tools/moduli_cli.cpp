// moduli: command-line access to metric graphs with marked vertices, the
// space of marked unit cycles, and the scanning homotopy.
//
// Exit codes: 0 success, 1 input or validation error, 2 property or
// certificate failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "moduli/errors.hpp"
#include "moduli/harness.hpp"
#include "moduli/marked_cycle.hpp"
#include "moduli/metric_graph.hpp"
#include "moduli/neighborhood.hpp"
#include "moduli/render.hpp"
#include "moduli/retraction.hpp"
#include "moduli/sampler.hpp"
#include "moduli/scanning.hpp"

namespace {

using nlohmann::json;
using namespace moduli;

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kPropertyFailure = 2;

// Carries a ready-made exit code out of a command.
struct Exit {
  int code;
};

json read_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_json(const json& j, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << j.dump(2) << "\n";
  if (!out) throw ParseError("cannot write " + path);
}

MetricGraph read_graph(const std::string& path) { return graph_from_json(read_json(path)); }
ModuliPoint read_point(const std::string& path) { return ModuliPoint(cycle_from_json(read_json(path))); }

std::uint64_t seed_or_env(std::uint64_t seed) {
  if (const char* env = std::getenv("MODULI_SEED"); env != nullptr && *env != '\0') {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ParseError(std::string("MODULI_SEED is not an unsigned integer: ") + env);
    }
  }
  return seed;
}

json violations_json(const std::vector<Violation>& vs) {
  json out = json::array();
  for (const auto& v : vs) {
    json entry{{"code", to_string(v.code)}};
    if (!v.subject.empty()) entry["subject"] = v.subject;
    if (v.mark != 0) entry["mark"] = v.mark;
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Metric graphs of genus 1 with marks on vertices: retractions, marked cycles, scanning homotopy"};
  app.require_subcommand(1);

  std::string input, output = "-";
  std::function<int()> action;

  // validate
  auto* validate_cmd = app.add_subcommand("validate", "Check metric graph invariants");
  validate_cmd->add_option("--input", input, "graph JSON")->required();
  validate_cmd->callback([&] {
    action = [&] {
      const auto vs = validate(read_graph(input));
      std::cout << json{{"valid", vs.empty()}, {"violations", violations_json(vs)}}.dump(2) << "\n";
      return vs.empty() ? kOk : kInputError;
    };
  });

  // genus
  auto* genus_cmd = app.add_subcommand("genus", "Genus, connectivity and bridges of a graph");
  genus_cmd->add_option("--input", input, "graph JSON")->required();
  genus_cmd->callback([&] {
    action = [&] {
      const MetricGraph g = read_graph(input);
      const auto bridges = find_bridges(g);
      json out{{"genus", genus(g)},
               {"connected", is_connected(g)},
               {"components", components(g)},
               {"bridges", std::vector<std::string>(bridges.begin(), bridges.end())},
               {"tropically_stable", is_tropically_stable(g)}};
      if (!g.edges.empty()) out["total_length"] = format_rational(total_length(g));
      write_json(out, output);
      return kOk;
    };
  });
  genus_cmd->add_option("--output", output, "output file (default stdout)");

  // shrink-bridges
  std::string tau_text = "1";
  auto* shrink_cmd = app.add_subcommand("shrink-bridges", "Shrink every bridge by the factor (1 - tau)");
  shrink_cmd->add_option("--input", input, "graph JSON")->required();
  shrink_cmd->add_option("--tau", tau_text, "time in [0,1] as p/q")->capture_default_str();
  shrink_cmd->add_option("--output", output, "output file (default stdout)");
  shrink_cmd->callback([&] {
    action = [&] {
      write_json(graph_to_json(shrink_bridges(read_graph(input), parse_rational(tau_text))), output);
      return kOk;
    };
  });

  // retract
  bool shrink_first = false;
  auto* retract_cmd = app.add_subcommand("retract", "Apply the leaf-contraction / valency-2 retraction");
  retract_cmd->add_option("--input", input, "graph JSON")->required();
  retract_cmd->add_flag("--shrink-first", shrink_first, "contract all bridges before retracting");
  retract_cmd->add_option("--output", output, "output file (default stdout)");
  retract_cmd->callback([&] {
    action = [&] {
      MetricGraph g = read_graph(input);
      if (shrink_first) g = shrink_bridges(g, 1);
      write_json(graph_to_json(conjectured_retract(g)), output);
      return kOk;
    };
  });

  // canonicalize
  auto* canon_cmd = app.add_subcommand("canonicalize", "Canonical form of a marked cycle, or normalize a cycle graph");
  canon_cmd->add_option("--input", input, "marked-cycle or graph JSON")->required();
  canon_cmd->add_option("--output", output, "output file (default stdout)");
  canon_cmd->callback([&] {
    action = [&] {
      const json in = read_json(input);
      if (in.is_object() && in.contains("vertices")) {
        const NormalizedCycle n = normalize(graph_from_json(in));
        write_json({{"point", cycle_to_json(n.point.cycle())}, {"total", format_rational(n.total)}}, output);
      } else {
        write_json(cycle_to_json(canonical_form(cycle_from_json(in)).cycle()), output);
      }
      return kOk;
    };
  });

  // iso-equal
  std::string a_path, b_path;
  auto* iso_cmd = app.add_subcommand("iso-equal", "Whether two marked cycles are isometric");
  iso_cmd->add_option("--a", a_path, "marked-cycle JSON")->required();
  iso_cmd->add_option("--b", b_path, "marked-cycle JSON")->required();
  iso_cmd->callback([&] {
    action = [&] {
      const bool eq = iso_equal(cycle_from_json(read_json(a_path)), cycle_from_json(read_json(b_path)));
      std::cout << json{{"equal", eq}}.dump() << "\n";
      return kOk;
    };
  });

  // check-neighborhood
  double eps = 0.1, tolerance = 1e-12;
  std::string mode_text = "symmetric";
  auto* nbhd_cmd = app.add_subcommand("check-neighborhood", "Is y in the eps-neighborhood of x?");
  nbhd_cmd->add_option("--x", a_path, "marked-cycle JSON")->required();
  nbhd_cmd->add_option("--y", b_path, "marked-cycle JSON")->required();
  nbhd_cmd->add_option("--eps", eps, "neighborhood radius")->required();
  nbhd_cmd->add_option("--mode", mode_text, "paper | symmetric")->capture_default_str();
  nbhd_cmd->add_option("--tolerance", tolerance, "boundary tolerance")->capture_default_str();
  nbhd_cmd->callback([&] {
    action = [&] {
      const Closeness rule{parse_closeness_mode(mode_text), tolerance};
      const auto v = in_neighborhood(read_point(a_path), read_point(b_path), eps, rule);
      std::cout << json{{"status", to_string(v.status)}, {"witness", to_string(v.witness)}, {"eps", eps},
                        {"mode", mode_text}}
                       .dump()
                << "\n";
      return kOk;
    };
  });

  // sample-neighbor
  double alpha = 0.05;
  std::uint64_t seed = 1;
  auto* sample_cmd = app.add_subcommand("sample-neighbor", "Draw a random point of N_alpha(x)");
  sample_cmd->add_option("--input", input, "marked-cycle JSON")->required();
  sample_cmd->add_option("--alpha", alpha, "neighborhood radius")->required();
  sample_cmd->add_option("--seed", seed, "random seed (MODULI_SEED overrides)")->capture_default_str();
  sample_cmd->add_option("--output", output, "output file (default stdout)");
  sample_cmd->callback([&] {
    action = [&] {
      write_json(cycle_to_json(sample_neighbor(read_point(input), alpha, seed_or_env(seed)).cycle()), output);
      return kOk;
    };
  });

  // scan
  std::optional<std::string> w_text, scan_tau_text;
  bool raw = false;
  auto* scan_cmd = app.add_subcommand("scan", "Apply the scanning homotopy");
  scan_cmd->add_option("--input", input, "marked-cycle JSON")->required();
  auto* w_opt = scan_cmd->add_option("--w", w_text, "scan turn in [0,1/2] as p/q");
  scan_cmd->add_option("--tau", scan_tau_text, "homotopy time in [0,1] as p/q")->excludes(w_opt);
  scan_cmd->add_flag("--raw", raw, "keep the input representative instead of canonicalizing");
  scan_cmd->add_option("--output", output, "output file (default stdout)");
  scan_cmd->callback([&] {
    action = [&] {
      if (!w_text && !scan_tau_text) throw ParseError("scan: one of --w or --tau is required");
      const ScanParameter w = w_text ? ScanParameter(parse_rational(*w_text)) : scan_at_time(parse_rational(*scan_tau_text));
      const MarkedCycle c = cycle_from_json(read_json(input));
      const MarkedCycle result = raw ? scan_cycle(c, w) : scan(ModuliPoint(c), w).cycle();
      write_json(cycle_to_json(result), output);
      return kOk;
    };
  });

  // certify
  int samples = 1000;
  std::string cert_w = "1/6";
  auto* cert_cmd = app.add_subcommand("certify", "Empirical continuity certificate for the scanning homotopy");
  cert_cmd->add_option("--input", input, "marked-cycle JSON")->required();
  cert_cmd->add_option("--w", cert_w, "scan turn as p/q")->capture_default_str();
  cert_cmd->add_option("--alpha", alpha, "perturbation radius (< eps/2)")->required();
  cert_cmd->add_option("--eps", eps, "target neighborhood radius")->required();
  cert_cmd->add_option("--samples", samples, "number of samples")->capture_default_str();
  cert_cmd->add_option("--seed", seed, "random seed (MODULI_SEED overrides)")->capture_default_str();
  cert_cmd->add_option("--mode", mode_text, "paper | symmetric")->capture_default_str();
  cert_cmd->add_option("--output", output, "output file (default stdout)");
  cert_cmd->callback([&] {
    action = [&] {
      const Closeness rule{parse_closeness_mode(mode_text)};
      const auto report = continuity_certificate(read_point(input), ScanParameter(parse_rational(cert_w)), alpha, eps,
                                                 samples, seed_or_env(seed), rule);
      write_json(certificate_to_json(report), output);
      return report.passed == report.samples ? kOk : kPropertyFailure;
    };
  });

  // render
  RenderSpec render_spec;
  std::string out_dir = ".";
  bool no_labels = false;
  auto* render_cmd = app.add_subcommand("render", "Write SVG frames of the scanning homotopy");
  render_cmd->add_option("--input", input, "marked-cycle JSON")->required();
  render_cmd->add_option("--frames", render_spec.frames, "number of frames")->capture_default_str();
  render_cmd->add_option("--out-dir", out_dir, "output directory")->capture_default_str();
  render_cmd->add_option("--size", render_spec.size, "image size in pixels")->capture_default_str();
  render_cmd->add_flag("--no-labels", no_labels, "omit mark labels");
  render_cmd->callback([&] {
    action = [&] {
      render_spec.output_dir = out_dir;
      render_spec.labels = !no_labels;
      if (!std::filesystem::is_directory(out_dir)) throw ParseError("render: no such directory " + out_dir);
      for (const auto& p : render_frames(read_point(input), render_spec)) std::cout << p.string() << "\n";
      return kOk;
    };
  });

  // proptest
  HarnessConfig cfg;
  std::string fault_text = "none";
  auto* prop_cmd = app.add_subcommand("proptest", "Run the seeded property suite");
  prop_cmd->add_option("--seed", cfg.seed, "random seed (MODULI_SEED overrides)")->capture_default_str();
  prop_cmd->add_option("--cases", cfg.cases, "cases per property")->capture_default_str();
  prop_cmd->add_option("--tolerance", cfg.tolerance, "closeness tolerance")->capture_default_str();
  prop_cmd->add_option("--boundary-band", cfg.boundary_band, "generator boundary band")->capture_default_str();
  prop_cmd->add_option("--max-vertices", cfg.max_vertices, "vertices per generated cycle")->capture_default_str();
  prop_cmd->add_option("--max-marks", cfg.max_marks, "marks per generated cycle")->capture_default_str();
  prop_cmd->add_option("--inject-fault", fault_text, "mutation self-test: none | flip-upper-bound")
      ->capture_default_str();
  prop_cmd->add_option("--output", output, "report file (default stdout)");
  prop_cmd->callback([&] {
    action = [&] {
      cfg.seed = seed_or_env(cfg.seed);
      if (fault_text == "flip-upper-bound") {
        cfg.fault = Fault::flip_upper_bound;
      } else if (fault_text != "none") {
        throw ParseError("unknown fault \"" + fault_text + "\"");
      }
      if (const auto problems = cfg.problems(); !problems.empty()) {
        for (const auto& p : problems) std::cerr << "proptest: " << p << "\n";
        return kInputError;
      }
      const HarnessReport report = run_properties(cfg);
      write_json(report.to_json(), output);
      for (const auto& p : report.properties) {
        std::cerr << (p.ok() ? "PASS " : "FAIL ") << p.name << " (" << p.passed << " passed, " << p.vacuous
                  << " vacuous of " << p.cases << ")\n";
      }
      return report.ok() ? kOk : kPropertyFailure;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    return action();
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kInputError;
}
