// hall2max command line front end: theorem checks for concrete
// permutation groups, corpus scans and lattice dumps.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "h2m/constructors.hpp"
#include "h2m/report.hpp"

namespace {

using namespace h2m;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

unsigned to_u(const std::string& s) {
  std::size_t pos = 0;
  unsigned long v = std::stoul(s, &pos);
  if (pos != s.size()) throw InvalidInput("bad number: " + s);
  return static_cast<unsigned>(v);
}

PermGroup build_builtin(const std::string& spec, std::size_t degree_cap) {
  std::string name = spec, params;
  if (auto colon = spec.find(':'); colon != std::string::npos) {
    name = spec.substr(0, colon);
    params = spec.substr(colon + 1);
  }
  auto args = params.empty() ? std::vector<std::string>{} : split(params, ',');
  auto one = [&] {
    if (args.size() != 1) throw InvalidInput("expected one parameter");
    return to_u(args[0]);
  };
  // short aliases: c12, d6, s4, a5
  if (params.empty() && name.size() >= 2 &&
      std::isdigit(static_cast<unsigned char>(name[1]))) {
    std::string num = name.substr(1);
    switch (name[0]) {
      case 'c': return cyclic(to_u(num));
      case 'd': return dihedral(to_u(num));
      case 's': return symmetric(to_u(num));
      case 'a': return alternating(to_u(num));
      default: break;
    }
  }
  if (name == "cyclic") return cyclic(one());
  if (name == "dihedral") return dihedral(one());
  if (name == "symmetric") return symmetric(one());
  if (name == "alternating") return alternating(one());
  if (name == "psl2") return psl2(one());
  if (name == "elementary_abelian" || name == "ea") {
    if (args.size() != 2) throw InvalidInput("ea needs p,k");
    return elementary_abelian(to_u(args[0]), to_u(args[1]), degree_cap);
  }
  if (name == "affine") {
    if (args.size() != 5) throw InvalidInput("affine needs p,a,b,c,d");
    unsigned p = to_u(args[0]);
    return semidirect_affine(
        p, Matrix2p{p, to_u(args[1]), to_u(args[2]), to_u(args[3]),
                    to_u(args[4])},
        degree_cap);
  }
  if (name == "affine_irr") {
    if (args.size() != 2) throw InvalidInput("affine_irr needs p,m");
    unsigned p = to_u(args[0]);
    return semidirect_affine(p, find_irreducible_element(p, to_u(args[1])),
                             degree_cap);
  }
  if (name == "paper_example" || name == "example") return paper_example();
  throw InvalidInput("unknown builtin: " + name);
}

PermGroup load_group(const std::string& builtin, const std::string& file,
                     std::size_t degree_cap) {
  if (!builtin.empty()) return build_builtin(builtin, degree_cap);
  std::ifstream in(file);
  if (!in) throw InvalidInput("cannot open " + file);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_group_file(buf.str(), degree_cap);
}

void emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + out_path);
  out << payload;
}

std::string json_bytes(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hall2max: 2-maximal Hall subgroup theorem checker"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  bool json = false;
  unsigned jobs = 1;
  Caps caps;
  if (const char* env = std::getenv("H2M_MAX_ORDER"))
    caps.element_cap = std::strtoull(env, nullptr, 10);
  app.add_flag("--json", json, "machine-readable JSON output");
  app.add_option("--max-order", caps.element_cap,
                 "element cap for lattice enumeration");
  app.add_option("--max-degree", caps.degree_cap, "degree cap");
  app.add_option("--jobs", jobs, "worker count for scan");
  std::string out_path;
  app.add_option("--out", out_path, "write the report to a file");

  std::string builtin, file;
  auto* check = app.add_subcommand("check", "verify the theorem on one group");
  check->add_option("--builtin", builtin, "builtin name, e.g. a4, cyclic:30");
  check->add_option("--file", file, "group file path");

  bool include_large = false;
  std::string report_path;
  auto* scan = app.add_subcommand("scan", "verify the built-in corpus");
  scan->add_flag("--include-large", include_large,
                 "include the 12615-element example");
  scan->add_option("--report", report_path, "write the report to a file");

  std::string lat_format = "text";
  std::string lat_builtin, lat_file;
  auto* lattice_cmd = app.add_subcommand("lattice", "dump a subgroup lattice");
  lattice_cmd->add_option("--builtin", lat_builtin, "builtin name");
  lattice_cmd->add_option("--file", lat_file, "group file path");
  lattice_cmd->add_option("--format", lat_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* example = app.add_subcommand("example", "run the order-12615 showcase");
  auto* psl = app.add_subcommand("psl-witnesses",
                                 "check the PSL witness chains");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) {
      if (builtin.empty() == file.empty()) {
        std::cerr << "check: exactly one of --builtin/--file required\n";
        return kExitInput;
      }
      std::string name = builtin.empty() ? file : builtin;
      TheoremReport rep =
          verify_theorem(load_group(builtin, file, caps.degree_cap), name,
                         caps);
      emit(json ? json_bytes(report_json(rep)) : report_text(rep), out_path);
      if (rep.skipped_reason) return kExitCap;
      return rep.violation() ? kExitViolation : kExitOk;
    }
    if (scan->parsed()) {
      auto reports = scan_corpus(default_corpus(include_large), caps, jobs);
      emit(json ? json_bytes(scan_json(reports)) : scan_text(reports),
           report_path.empty() ? out_path : report_path);
      return summarize(reports).violations == 0 ? kExitOk : kExitViolation;
    }
    if (lattice_cmd->parsed()) {
      if (lat_builtin.empty() == lat_file.empty()) {
        std::cerr << "lattice: exactly one of --builtin/--file required\n";
        return kExitInput;
      }
      std::string name = lat_builtin.empty() ? lat_file : lat_builtin;
      Lattice l = enumerate_subgroups(
          load_group(lat_builtin, lat_file, caps.degree_cap),
          caps.element_cap);
      bool as_json = json || lat_format == "json";
      emit(as_json ? json_bytes(lattice_json(l, name)) : lattice_text(l, name),
           out_path);
      return kExitOk;
    }
    if (example->parsed()) {
      TheoremReport rep = verify_theorem(paper_example(), "paper_example",
                                         caps);
      emit(json ? json_bytes(report_json(rep)) : report_text(rep), out_path);
      if (rep.skipped_reason) return kExitCap;
      return rep.violation() ? kExitViolation : kExitOk;
    }
    if (psl->parsed()) {
      PslWitnessReport rep = verify_psl_witnesses(caps);
      emit(json ? json_bytes(psl_witnesses_json(rep)) : psl_witnesses_text(rep),
           out_path);
      return rep.all_pass() ? kExitOk : kExitViolation;
    }
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const InvalidInput& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
