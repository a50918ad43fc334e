#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "x3/caps.hpp"
#include "x3/coloring.hpp"
#include "x3/errors.hpp"
#include "x3/extractor.hpp"
#include "x3/graph.hpp"
#include "x3/harness.hpp"
#include "x3/minors.hpp"
#include "x3/three_arc.hpp"

namespace {

x3::Digraph load_digraph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw x3::ParseError("cannot open " + path);
  return x3::read_digraph(in);
}

x3::Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw x3::ParseError("cannot open " + path);
  return x3::read_graph(in);
}

x3::MinorCertificate load_certificate(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw x3::ParseError("cannot open " + path);
  return x3::read_certificate(in);
}

void print_coloring(const std::string& tag, const x3::Coloring& col) {
  std::cout << tag << " " << col.k << "\n";
  for (std::size_t v = 0; v < col.colors.size(); ++v)
    std::cout << v << " " << col.colors[v] << "\n";
}

void emit_dot(const x3::Digraph& d, const x3::Graph& x) {
  std::cout << "graph X {\n";
  for (int v = 0; v < x.n; ++v)
    std::cout << "  a" << v << " [label=\"" << d.arc(v).tail << ">"
              << d.arc(v).head << "\"];\n";
  for (auto [a, b] : x.edges)
    std::cout << "  a" << a << " -- a" << b << ";\n";
  std::cout << "}\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"three-arc graph operator, coloring, and clique minors"};
  app.require_subcommand(1);

  std::string in_path, cert_path, out_path;
  bool dot = false, trace = false;

  auto* cmd_build = app.add_subcommand(
      "build", "build the three-arc graph of a digraph");
  cmd_build->add_option("input", in_path, "digraph file")->required();
  cmd_build->add_flag("--dot", dot, "emit DOT instead of the text format");

  auto* cmd_chi = app.add_subcommand("chi", "color a graph exactly");
  cmd_chi->add_option("input", in_path, "graph file")->required();

  auto* cmd_chi3 = app.add_subcommand(
      "chi3", "color the three-arc graph of a digraph exactly");
  cmd_chi3->add_option("input", in_path, "digraph file")->required();

  auto* cmd_critical = app.add_subcommand(
      "critical", "extract a color-minimal core of a graph");
  cmd_critical->add_option("input", in_path, "graph file")->required();

  auto* cmd_hadwiger = app.add_subcommand(
      "hadwiger", "largest complete minor of a graph");
  cmd_hadwiger->add_option("input", in_path, "graph file")->required();

  auto* cmd_extract = app.add_subcommand(
      "extract", "build a clique-minor certificate in the three-arc graph");
  cmd_extract->add_option("input", in_path, "digraph file")->required();
  cmd_extract->add_option("-o,--out", out_path, "certificate file")
      ->required();
  cmd_extract->add_flag("--trace", trace, "print pipeline notes to stderr");

  auto* cmd_verify = app.add_subcommand(
      "verify", "check a branch-set certificate against a graph");
  cmd_verify->add_option("graph", in_path, "graph file")->required();
  cmd_verify->add_option("certificate", cert_path, "certificate file")
      ->required();

  x3::SweepConfig cfg;
  bool exhaustive_flag = false;
  auto* cmd_sweep = app.add_subcommand(
      "sweep", "verify the minor bound across an instance family");
  cmd_sweep->add_option("--n", cfg.n, "vertex count")->required();
  auto* opt_ex = cmd_sweep->add_flag("--exhaustive", exhaustive_flag,
                                     "run every labeled instance");
  auto* opt_samples =
      cmd_sweep->add_option("--samples", cfg.samples, "sampled instances");
  cmd_sweep->add_option("--seed", cfg.seed, "sampling seed");
  cmd_sweep->add_flag("--tournaments", cfg.tournaments,
                      "sweep tournaments instead of digraphs");
  cmd_sweep->add_option("--jobs", cfg.jobs, "worker threads");
  cmd_sweep->add_option("-o,--out", out_path, "report file (JSON lines)");
  opt_ex->excludes(opt_samples);

  std::uint64_t seed = 0, iters = 1000;
  auto* cmd_lemmas = app.add_subcommand(
      "lemmas", "run the randomized invariant suites");
  cmd_lemmas->add_option("--seed", seed, "suite seed");
  cmd_lemmas->add_option("--iters", iters, "iterations per suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*cmd_build) {
      x3::Digraph d = load_digraph(in_path);
      x3::ThreeArcGraph x = x3::three_arc_graph(d);
      if (dot)
        emit_dot(d, x.graph);
      else
        x3::write_graph(std::cout, x.graph);
      return 0;
    }
    if (*cmd_chi) {
      print_coloring("chi", x3::chromatic_number(load_graph(in_path)));
      return 0;
    }
    if (*cmd_chi3) {
      x3::ThreeArcGraph x = x3::three_arc_graph(load_digraph(in_path));
      print_coloring("chi3", x3::chromatic_number(x.graph));
      return 0;
    }
    if (*cmd_critical) {
      x3::Graph g = load_graph(in_path);
      int k = x3::chromatic_number(g).k;
      x3::CriticalSubgraph crit = x3::critical_subgraph(g, k);
      std::cout << "k " << k << "\n";
      for (std::size_t at = 0; at < crit.vertices.size(); ++at)
        std::cout << crit.vertices[at]
                  << (at + 1 < crit.vertices.size() ? ' ' : '\n');
      x3::write_graph(std::cout, crit.graph);
      return 0;
    }
    if (*cmd_hadwiger) {
      x3::Graph g = load_graph(in_path);
      x3::HadwigerResult hr = x3::hadwiger_number(g);
      std::cout << "h " << hr.h << (hr.exact ? " exact" : " lower-bound")
                << "\n";
      x3::write_certificate(std::cout, hr.cert);
      return 0;
    }
    if (*cmd_extract) {
      x3::Digraph d = load_digraph(in_path);
      x3::ExtractionResult ext = x3::extract_minor(d);
      if (trace)
        for (const auto& line : ext.trace) std::cerr << line << "\n";
      std::ofstream out(out_path, std::ios::trunc);
      if (!out) throw x3::ParseError("cannot open " + out_path);
      x3::write_certificate(out, ext.cert);
      std::cout << "k " << ext.k << "\n";
      return 0;
    }
    if (*cmd_verify) {
      x3::Graph g = load_graph(in_path);
      x3::MinorCertificate cert = load_certificate(cert_path);
      x3::VerifyResult vr = x3::verify_certificate(g, cert);
      if (vr.ok) {
        std::cout << "ok order " << cert.order() << "\n";
        return 0;
      }
      std::cout << "violation " << x3::describe(*vr.violation) << "\n";
      return 1;
    }
    if (*cmd_sweep) {
      cfg.exhaustive = exhaustive_flag || opt_samples->count() == 0;
      cfg.out_path = out_path;
      x3::SweepReport rep = x3::sweep_verify(cfg);
      std::cerr << "elapsed_ms " << rep.elapsed_ms << "\n";
      if (cfg.out_path.empty())
        for (const auto& line : rep.lines) std::cout << line << "\n";
      std::cout << "instances " << rep.instance_count << " violations "
                << rep.violations.size() << "\n";
      return rep.pass ? 0 : 1;
    }
    if (*cmd_lemmas) {
      x3::PropertyReport rep = x3::run_property_suites(seed, iters);
      for (const auto& line : rep.lines) std::cout << line << "\n";
      std::cerr << "elapsed_ms " << rep.elapsed_ms << "\n";
      return rep.pass ? 0 : 1;
    }
  } catch (const x3::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
