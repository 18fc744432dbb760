// Command line front end: fixture inspection, lifting searches, and the
// full reproduction pipeline.
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "latvar/condensate.hpp"
#include "latvar/io.hpp"
#include "latvar/selfcheck.hpp"

using namespace latvar;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitTruncated = 3;
constexpr int kExitClaimMismatch = 4;

std::string lattice_summary(const FiniteLattice& l) {
  std::ostringstream out;
  auto con = con_lattice(l);
  out << con.size() << " congruences";
  if (con.size() == 2) out << " (simple)";
  for (int k = 1; k <= 6; ++k) {
    if (con.size() == (1 << k) &&
        find_isomorphism(con.lattice, FiniteLattice::boolean_lattice(k))) {
      out << " = 2^" << k;
      break;
    }
  }
  out << "\n";
  for (int c = 0; c < con.size(); ++c) {
    out << "  " << con.lattice.id(c) << " = "
        << congruence_to_string(l, con.congruences[c]) << "\n";
  }
  out << "covers of the congruence lattice:\n";
  for (int a = 0; a < con.lattice.size(); ++a) {
    for (int b = 0; b < con.lattice.size(); ++b) {
      if (con.lattice.poset().covers(a, b)) {
        out << "  " << con.lattice.id(a) << " < " << con.lattice.id(b) << "\n";
      }
    }
  }
  return out.str();
}

void dump_lattice(std::ostream& out, const FiniteLattice& l) {
  out << l.size() << " elements:";
  for (int e = 0; e < l.size(); ++e) out << " " << l.id(e);
  out << "\n  covers:";
  for (int a = 0; a < l.size(); ++a) {
    for (int b = 0; b < l.size(); ++b) {
      if (l.poset().covers(a, b)) out << " " << l.id(a) << "<" << l.id(b);
    }
  }
  out << "\n";
}

void emit_manifest(const std::string& command,
                   const std::vector<std::string>& inputs,
                   const std::string& bounds, double wall,
                   const std::string& result_text, const std::string& path) {
  RunManifest m;
  m.command = command;
  for (const auto& p : inputs) m.inputs.push_back({p, file_digest(p)});
  m.bounds = bounds;
  m.wall_seconds = wall;
  m.result_digest = text_digest(result_text);
  write_manifest(m, path);
}

int cmd_lift(const std::string& diagram_path, const std::string& variety_path,
             const std::string& mode, const LiftBounds& bounds,
             const std::string& out_path) {
  auto start = std::chrono::steady_clock::now();
  std::ostringstream out;
  int exit_code = 0;

  auto spec = load_variety(variety_path);
  if (mode == "section7") {
    try {
      auto cert = section7_certificate(spec);
      out << "no lifting exists: exclusion certificate\n";
      out << "bounds: " << cert.bounds << "\n";
      for (const auto& line : cert.trace) out << line << "\n";
    } catch (const CertificateFailure& e) {
      out << "certificate failed: " << e.what() << "\n";
      exit_code = kExitClaimMismatch;
    }
  } else {
    auto d = load_sem_diagram(diagram_path);
    std::vector<std::vector<FiniteLattice>> pools;
    for (int i = 0; i < d.index().size(); ++i) {
      pools.push_back(pool_from_hs(spec, d.node(i), bounds));
    }
    auto result = bounded_lift_search(d, spec, bounds, &pools);
    if (result.lifting) {
      out << "lifting found\n";
      for (int i = 0; i < d.index().size(); ++i) {
        out << "node " << d.index().id(i) << ": ";
        dump_lattice(out, result.lifting->node(i));
        out << "  natural iso:";
        for (int v : result.witness->maps[i]) out << " " << v;
        out << "\n";
      }
    } else {
      out << "no lifting within bounds (" << result.certificate.bounds
          << ", pools from quotients of generator sublattices)\n";
      for (const auto& line : result.certificate.trace) out << line << "\n";
      if (!result.certificate.search_complete) exit_code = kExitTruncated;
    }
  }

  double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              start)
                    .count();
  std::cout << out.str();
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    f << out.str();
    std::vector<std::string> inputs = {variety_path};
    if (mode != "section7") inputs.insert(inputs.begin(), diagram_path);
    emit_manifest("lift --mode " + mode, inputs,
                  "max_size=" + std::to_string(bounds.max_size) +
                      " max_length=" + std::to_string(bounds.max_length),
                  wall, out.str(), out_path + ".manifest.json");
  }
  return exit_code;
}

int cmd_reproduce(const std::string& fixture_dir, int cases,
                  const std::string& manifest_path) {
  auto start = std::chrono::steady_clock::now();
  ReproduceOptions opt;
  opt.property_cases = cases;
  std::vector<std::string> inputs;
  if (!fixture_dir.empty()) {
    opt.generators1 = {load_lattice(fixture_dir + "/T1.json")};
    opt.generators2 = {load_lattice(fixture_dir + "/T2.json"),
                       load_lattice(fixture_dir + "/T3.json"),
                       load_lattice(fixture_dir + "/T4.json")};
    for (const char* f : {"/T1.json", "/T2.json", "/T3.json", "/T4.json"}) {
      inputs.push_back(fixture_dir + f);
    }
  }
  std::ostringstream out;
  bool all_ok = true;
  int k = 0;
  for (const auto& r : reproduce_all(opt)) {
    ++k;
    out << k << ". " << r.name << ": " << (r.ok ? "pass" : "FAIL") << " ("
        << r.detail << ")\n";
    all_ok = all_ok && r.ok;
  }
  if (all_ok) {
    out << "crit(V1,V2) = \xE2\x84\xB5" << "1: lower bound by "
        << "finitely-semisimple hypothesis checks, upper bound by "
        << "non-lifting certificate\n";
  }
  std::cout << out.str();
  double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              start)
                    .count();
  emit_manifest("reproduce-paper", inputs,
                "property_cases=" + std::to_string(cases), wall, out.str(),
                manifest_path);
  return all_ok ? 0 : kExitClaimMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite lattice and semilattice diagram workbench"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "worker thread count (0 = default)");

  std::string lattice_path, variety_path, diagram_path;
  std::string out_path, fixture_dir, manifest_path = "reproduce.manifest.json";
  std::string mode = "search";
  bool maximal_only = false;
  LiftBounds bounds;
  int capacity = 2, chain_len = 2, cases = 200;

  auto* con = app.add_subcommand("con", "congruence lattice of a fixture");
  con->add_option("lattice", lattice_path)->required();

  auto* sub = app.add_subcommand("sublattices", "sublattices of a fixture");
  sub->add_option("lattice", lattice_path)->required();
  sub->add_flag("--maximal", maximal_only, "only maximal proper sublattices");

  auto* si = app.add_subcommand("si", "subdirectly irreducible members");
  si->add_option("variety", variety_path)->required();

  auto* member = app.add_subcommand("member", "variety membership test");
  member->add_option("variety", variety_path)->required();
  member->add_option("lattice", lattice_path)->required();

  auto* lift = app.add_subcommand("lift", "search for a lifting");
  lift->add_option("diagram", diagram_path)->required();
  lift->add_option("variety", variety_path)->required();
  lift->add_option("--mode", mode)->check(CLI::IsMember({"search", "section7"}));
  lift->add_option("--max-size", bounds.max_size);
  lift->add_option("--max-length", bounds.max_length);
  lift->add_option("--visited-cap", bounds.visited_cap);
  lift->add_option("--out", out_path, "result file (also emits a manifest)");

  auto* cond = app.add_subcommand("condensate",
                                  "condensate checks over a tree covering");
  cond->add_option("diagram", diagram_path)->required();
  cond->add_option("--capacity", capacity);

  auto* sigma = app.add_subcommand("sigma-select", "selection on a chain tree");
  sigma->add_option("--chain", chain_len);
  sigma->add_option("--capacity", capacity);

  auto* repro = app.add_subcommand("reproduce-paper",
                                   "run the full verification pipeline");
  repro->add_option("--fixtures", fixture_dir,
                    "directory with T1..T4 fixture files");
  repro->add_option("--cases", cases, "cases per randomized property suite");
  repro->add_option("--manifest", manifest_path);

  CLI11_PARSE(app, argc, argv);
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#endif

  try {
    if (con->parsed()) {
      std::cout << lattice_summary(load_lattice(lattice_path));
    } else if (sub->parsed()) {
      auto l = load_lattice(lattice_path);
      auto subsets = maximal_only ? maximal_sublattices(l)
                                  : all_sublattices(l, 1, l.size());
      std::cout << subsets.size() << (maximal_only ? " maximal" : "")
                << " sublattices\n";
      for (const auto& s : subsets) {
        std::cout << " ";
        for (int e : s) std::cout << " " << l.id(e);
        std::cout << "\n";
      }
    } else if (si->parsed()) {
      auto spec = load_variety(variety_path);
      std::cout << spec.si.size() << " subdirectly irreducible members\n";
      for (const auto& m : spec.si) {
        std::cout << "  " << m.size() << " elements"
                  << (is_simple(m) ? ", simple" : "") << "\n";
      }
      auto semi = is_finitely_semisimple(spec);
      std::cout << (semi.ok ? "finitely semisimple\n"
                            : "not finitely semisimple\n");
    } else if (member->parsed()) {
      auto spec = load_variety(variety_path);
      auto l = load_lattice(lattice_path);
      std::cout << (contains(spec, l) ? "member\n" : "not a member\n");
    } else if (lift->parsed()) {
      return cmd_lift(diagram_path, variety_path, mode, bounds, out_path);
    } else if (cond->parsed()) {
      auto d = load_lat_diagram(diagram_path);
      if (!d.index().is_tree()) {
        std::cerr << "condensate: the diagram index must be a tree\n";
        return kExitValidation;
      }
      auto tc = build_tree_covering(d.index(), [&](int) { return capacity; });
      std::cout << "covering with " << tc.nc.U().size() << " elements, "
                << extreme_ideals(tc.nc).size() << " extreme ideals\n";
      auto tau = tau_map(d, tc.nc);
      for (const auto& line : tau.report.checked) {
        std::cout << "  " << line << "\n";
      }
      std::cout << "quasi-lifting verified\n";
    } else if (sigma->parsed()) {
      auto tc = build_tree_covering(FinitePoset::chain(chain_len),
                                    [&](int) { return capacity; });
      auto result = sigma_select(tc, [](int) { return std::vector<int>{}; });
      if (std::holds_alternative<CapacityExhausted>(result)) {
        std::cout << "capacity exhausted at tree node "
                  << std::get<CapacityExhausted>(result).tree_node << "\n";
      } else {
        const auto& sel = std::get<SigmaSelection>(result);
        for (int t = 0; t < tc.tree.size(); ++t) {
          std::cout << "tree node " << tc.tree.id(t) << " -> "
                    << tc.nc.U().id(sel.ideal_gen[t]) << "\n";
        }
      }
    } else if (repro->parsed()) {
      return cmd_reproduce(fixture_dir, cases, manifest_path);
    }
  } catch (const QuasiLiftingFailure& e) {
    std::cerr << "claim mismatch: " << e.what() << "\n";
    return kExitClaimMismatch;
  } catch (const ResourceExhausted& e) {
    std::cerr << "search truncated: " << e.what() << "\n";
    return kExitTruncated;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return 0;
}
