// abelatt: lattices from finite abelian groups, with exact certificates.
//
// Exit codes: 0 success; 1 usage or parse error; 2 mathematically impossible
// request (e.g. anything minimal-basis or eutaxy related for C4, or the
// trivial group); 3 certificate verification failure; 4 internal error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "abelatt/errors.hpp"
#include "abelatt/eutaxy.hpp"
#include "abelatt/group.hpp"
#include "abelatt/lattice.hpp"
#include "abelatt/min_basis.hpp"
#include "abelatt/report.hpp"
#include "abelatt/serialize.hpp"

namespace {

using namespace abelatt;

class Stopwatch {
 public:
  explicit Stopwatch(std::string label) : label_(std::move(label)) {}
  ~Stopwatch() {
    const auto elapsed = std::chrono::steady_clock::now() - start_;
    const double ms = std::chrono::duration<double, std::milli>(elapsed).count();
    // Timing goes to stderr so stdout stays byte-identical across runs.
    std::cerr << "timing: " << label_ << " took " << ms << " ms\n";
  }

 private:
  std::string label_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void print_human_report(const AnalysisReport& r) {
  std::cout << "group:             " << r.group_spec << "\n"
            << "order:             " << r.order << "\n"
            << "kissing:           " << r.kissing << "\n"
            << "min norm^2:        " << r.min_norm_sq.get_str() << "\n"
            << "strongly eutactic: " << yes_no(r.strongly_eutactic) << "\n"
            << "eutactic:          " << yes_no(r.eutactic) << "\n"
            << "perfection rank:   " << r.perfection_rank << "/" << r.perfection_target
            << (r.perfect ? " (perfect)" : " (not perfect)") << "\n"
            << "extreme:           " << yes_no(r.extreme) << "\n"
            << "minimal basis:     " << yes_no(r.has_min_basis) << "\n";
}

int cmd_analyze(const std::string& spec, bool json, bool strict) {
  const AbelianGroup A = parse_group_spec(spec);
  AnalysisReport report;
  {
    Stopwatch timer("analyze " + A.spec_string());
    report = analyze(A);
  }
  if (json) {
    std::cout << to_json(report) << "\n";
  } else {
    print_human_report(report);
  }
  if (strict && (!report.eutactic || !report.has_min_basis)) return 2;
  return 0;
}

int cmd_sweep(std::size_t max_order, bool all_presentations) {
  SweepOptions options;
  options.max_order = max_order;
  options.all_presentations = all_presentations;
  Stopwatch timer("sweep up to order " + std::to_string(max_order));
  std::cout << sweep_csv(options);
  return 0;
}

GroupElement default_orbit_partner(const AbelianGroup& A) {
  const std::size_t n = A.order();
  const GroupElement a = A.factor_generator(0);
  for (std::size_t k = 2; k < n - 1; ++k) {
    const std::size_t b = A.pow_index(a.index(), static_cast<long>(k));
    if (A.element_order(b) == n) return A.element(b);
  }
  return a;  // forced for n in {2, 3, 4, 6}; flagged not_minimal when long
}

int cmd_basis(const std::string& spec, const std::string& construction,
              bool gram_as_text) {
  const AbelianGroup A = parse_group_spec(spec);
  MinimalBasis basis = [&] {
    Stopwatch timer("basis " + A.spec_string() + " (" + construction + ")");
    if (construction == "general") return general_min_basis(A);
    if (construction == "sha") return sha_basis(A);
    if (construction == "orbit") {
      return single_orbit_basis(A, A.factor_generator(0), default_orbit_partner(A));
    }
    throw CLI::ValidationError("--construction must be general, sha or orbit");
  }();
  if (gram_as_text) {
    IntMatrix gram(basis.vectors.size(), basis.vectors.size());
    for (std::size_t i = 0; i < basis.vectors.size(); ++i) {
      for (std::size_t j = 0; j < basis.vectors.size(); ++j) {
        gram(i, j) = inner(basis.vectors[i], basis.vectors[j]).get_num();
      }
    }
    std::cout << gram_text(gram);
  } else {
    std::cout << to_json(basis) << "\n";
  }
  return 0;
}

int cmd_minvecs(const std::string& spec) {
  const AbelianGroup A = parse_group_spec(spec);
  Stopwatch timer("minvecs " + A.spec_string());
  const auto vectors = min_vectors_any(A, 2);
  nlohmann::ordered_json j;
  j["group"] = A.spec_string();
  j["min_norm_sq"] = min_distance(A, 2).get_str();
  j["count"] = vectors.size();
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& v : vectors) {
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (const Rat& c : v.coeffs()) coeffs.push_back(c.get_num().get_str());
    arr.push_back(std::move(coeffs));
  }
  j["vectors"] = std::move(arr);
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_certificate(const std::string& spec, const std::string& out_path) {
  const AbelianGroup A = parse_group_spec(spec);
  EutaxyCertificate cert;
  {
    Stopwatch timer("certificate " + A.spec_string());
    cert = build_certificate(A);
  }
  const std::string text = to_json(cert);
  if (out_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return 1;
    }
    out << text << "\n";
    std::cerr << "certificate written to " << out_path << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot read " << path << "\n";
    return 1;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  const EutaxyCertificate cert = certificate_from_json(buffer.str());
  CertificateCheck check;
  {
    Stopwatch timer("verify " + cert.group.spec_string());
    check = verify_certificate_detail(cert);
  }
  if (check.ok) {
    std::cout << "certificate OK: " << cert.group.spec_string() << " ("
              << to_string(cert.branch) << ")\n";
    return 0;
  }
  std::cout << "certificate REJECTED: " << check.failed_check << ": "
            << check.detail << "\n";
  return 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "abelatt - exact lattices from finite abelian groups: minimal vectors,\n"
      "bases of minimal vectors, eutaxy / perfection / extremality certificates.\n"
      "All arithmetic is exact rational; output on stdout is deterministic."};
  app.require_subcommand(1);

  bool json = false, strict = false;
  app.add_flag("--json", json, "machine-readable JSON output");
  app.add_flag("--strict", strict,
               "exit 2 when the group admits no certificate / minimal basis");

  std::string spec;
  auto* analyze_cmd = app.add_subcommand("analyze", "full verdict sheet for one group");
  analyze_cmd->add_option("spec", spec, "group spec, e.g. C4xC2")->required();

  std::size_t max_order = 16;
  bool all_presentations = false;
  auto* sweep_cmd =
      app.add_subcommand("sweep", "CSV table over all abelian types up to an order");
  sweep_cmd->add_option("--max-order", max_order, "largest order to include (2..32)")
      ->capture_default_str();
  sweep_cmd->add_flag("--all-presentations", all_presentations,
                      "also run every invariant-factor ordering");

  std::string construction = "general";
  bool gram_as_text = false;
  auto* basis_cmd = app.add_subcommand("basis", "construct a basis of minimal vectors");
  basis_cmd->add_option("spec", spec, "group spec")->required();
  basis_cmd->add_option("--construction", construction, "general | sha | orbit")
      ->capture_default_str();
  basis_cmd->add_flag("--gram-text", gram_as_text,
                      "print the Gram matrix as whitespace-separated text");

  auto* minvecs_cmd = app.add_subcommand("minvecs", "list the minimal vectors of L(A)");
  minvecs_cmd->add_option("spec", spec, "group spec")->required();

  std::string out_path;
  auto* cert_cmd =
      app.add_subcommand("certificate", "build and write an eutaxy certificate");
  cert_cmd->add_option("spec", spec, "group spec")->required();
  cert_cmd->add_option("-o,--out", out_path, "output file (default: stdout)");

  std::string verify_path;
  auto* verify_cmd =
      app.add_subcommand("verify", "re-check a certificate file (no reconstruction)");
  verify_cmd->add_option("path", verify_path, "certificate JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    // Normalize CLI11's internal codes: anything but a clean --help/--version
    // exit is a usage error.
    return code == 0 ? 0 : 1;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(spec, json, strict);
    if (*sweep_cmd) return cmd_sweep(max_order, all_presentations);
    if (*basis_cmd) return cmd_basis(spec, construction, gram_as_text);
    if (*minvecs_cmd) return cmd_minvecs(spec);
    if (*cert_cmd) return cmd_certificate(spec, out_path);
    if (*verify_cmd) return cmd_verify(verify_path);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const NoMinimalBasisError& e) {
    std::cerr << "impossible: " << e.what() << "\n";
    return 2;
  } catch (const NotEutacticError& e) {
    std::cerr << "impossible: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "impossible: " << e.what() << "\n";
    return 2;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
