#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "canonical.hpp"
#include "coloring.hpp"
#include "constructions.hpp"
#include "errors.hpp"
#include "factors.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "rational.hpp"
#include "regularity.hpp"
#include "search.hpp"

namespace mrt::cli {

enum ExitCode : int { ok = 0, violation = 1, malformed = 2, over_budget = 3 };

/// Applies MRT_MAX_COLORING_N, MRT_MAX_RT_N and MRT_MAX_NODES from the environment.
inline SearchConfig config_from_env(SearchConfig cfg = {}) {
  auto read = [](const char* name, auto& slot) {
    if (const char* v = std::getenv(name); v && *v) {
      auto parsed = mrt::detail::parse_int(v);
      if (parsed < 0) throw invalid_argument(std::string(name) + " must be non-negative");
      slot = static_cast<std::remove_reference_t<decltype(slot)>>(parsed);
    }
  };
  read("MRT_MAX_COLORING_N", cfg.max_coloring_vertices);
  read("MRT_MAX_RT_N", cfg.max_rt_vertices);
  read("MRT_MAX_NODES", cfg.max_nodes);
  return cfg;
}

/// "kN" (complete), "cN" (cycle), "pN" (path on N vertices), or a graph file.
inline Graph parse_pattern(const std::string& text) {
  if (text.size() >= 2 && (text[0] == 'k' || text[0] == 'c' || text[0] == 'p') &&
      text.find_first_not_of("0123456789", 1) == std::string::npos) {
    int n = static_cast<int>(mrt::detail::parse_int(std::string_view(text).substr(1)));
    if (n < 2 || n > max_vertices) throw invalid_argument("pattern size out of range: " + text);
    if (text[0] == 'k') return Graph::complete(n);
    if (text[0] == 'c') {
      if (n < 3) throw invalid_argument("cycles need at least 3 vertices");
      return Graph::cycle(n);
    }
    return Graph::path(n);
  }
  std::ifstream in(text);
  if (!in) throw invalid_argument("unknown pattern '" + text + "' (not a name and not a readable file)");
  return io::read_graph(in);
}

/// Two-color Ramsey numbers R(K_s, 2) known exactly, used for the reference column t(n, R - 1).
inline std::optional<int> known_two_color_clique_ramsey(const Graph& h) {
  if (!is_complete(h)) return std::nullopt;
  switch (h.order()) {
    case 2: return 2;
    case 3: return 6;
    case 4: return 18;
    default: return std::nullopt;
  }
}

namespace detail {

inline EdgeColoring load_colored(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_argument("cannot read '" + path + "'");
  return io::read_colored(in);
}

inline Partition load_partition(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_argument("cannot read '" + path + "'");
  return io::read_partition(in);
}

// Sends `text` to `path`, or to `out` when no path was given.
inline void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw invalid_argument("cannot write '" + path + "'");
  file << text;
}

inline std::vector<int> parse_sizes(const std::string& text) {
  std::vector<int> sizes;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) sizes.push_back(static_cast<int>(mrt::detail::parse_int(item)));
  return sizes;
}

inline std::string join(const std::vector<int>& xs, char sep = ' ') {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? std::string(1, sep) : "") + std::to_string(xs[i]);
  return s;
}

}  // namespace detail

/// Runs one command line. Output goes to `out`, diagnostics to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact mean, local and classical Ramsey-Turan computations"};
  app.require_subcommand(1);

  SearchConfig cfg;
  std::string in_path, out_path, pattern_text = "k3", constraint_text = "mean:2";
  int n = 0, nmax = 8, m = 0, threads = 1;

  auto* construct = app.add_subcommand("construct", "build a colored graph");
  construct->require_subcommand(1);
  auto* turan5 = construct->add_subcommand("turan5", "T(n,5) colored without a monochromatic triangle");
  turan5->add_option("--n", n, "vertex count (5..64)")->required();
  turan5->add_option("--out", out_path, "output file (default stdout)");
  auto* blowup = construct->add_subcommand("blowup", "replace every vertex by an independent set");
  std::string sizes_text;
  blowup->add_option("--in", in_path, "colored graph file")->required();
  blowup->add_option("--sizes", sizes_text, "comma separated class sizes")->required();
  blowup->add_option("--out", out_path, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "check a colored graph against a constraint and pattern");
  verify->add_option("--in", in_path, "colored graph file")->required();
  verify->add_option("--pattern", pattern_text, "pattern graph");
  verify->add_option("--constraint", constraint_text, "colors:K | local:K | mean:P[/Q]");

  auto* rt = app.add_subcommand("rt-exact", "exact Ramsey-Turan number");
  rt->add_option("--n", n, "vertex count")->required();
  rt->add_option("--pattern", pattern_text, "pattern graph");
  rt->add_option("--constraint", constraint_text, "colors:K | local:K | mean:P[/Q]");
  rt->add_option("--out", out_path, "certificate file (default stdout)");
  rt->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

  auto* ramsey = app.add_subcommand("ramsey-exact", "exact Ramsey number for a coloring class");
  ramsey->add_option("--pattern", pattern_text, "pattern graph");
  ramsey->add_option("--constraint", constraint_text, "colors:K | local:K | mean:P[/Q]");
  ramsey->add_option("--nmax", nmax, "largest n to try");
  ramsey->add_option("--out", out_path, "certificate file (default stdout)");
  ramsey->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

  auto* oracle = app.add_subcommand("oracle", "counting oracles");
  oracle->require_subcommand(1);
  auto* color_sum = oracle->add_subcommand("color-sum", "minimum color incidence without a monochromatic triangle");
  color_sum->add_option("--m", m, "clique size (3..5)")->required();

  auto* factor = app.add_subcommand("factor", "clique factor into triangles plus at most two larger cliques");
  factor->add_option("--in", in_path, "graph file")->required();

  auto* cluster = app.add_subcommand("cluster", "cluster graph of a partition");
  std::string partition_path, gamma_text, eta_text;
  bool colored = false;
  cluster->add_option("--in", in_path, "graph file")->required();
  cluster->add_option("--partition", partition_path, "partition file")->required();
  cluster->add_option("--gamma", gamma_text, "regularity parameter a/b")->required();
  cluster->add_option("--eta", eta_text, "density threshold c/d")->required();
  cluster->add_flag("--colored", colored, "color cluster edges by majority color");

  auto* scan = app.add_subcommand("conjecture-scan", "RT(n,H,2) vs 2-local vs 2-mean for small n");
  scan->add_option("--pattern", pattern_text, "pattern graph");
  scan->add_option("--nmax", nmax, "largest n");
  scan->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return malformed;
  }

  try {
    cfg = config_from_env(cfg);
    cfg.threads = threads;

    if (*turan5) {
      detail::emit(out_path, io::to_text(turan5_witness(n)), out);
      return ok;
    }
    if (*blowup) {
      detail::emit(out_path, io::to_text(blow_up(detail::load_colored(in_path), detail::parse_sizes(sizes_text))), out);
      return ok;
    }
    if (*verify) {
      auto c = detail::load_colored(in_path);
      auto h = parse_pattern(pattern_text);
      auto k = ColoringConstraint::parse(constraint_text);
      out << "vertices=" << c.order() << "\nedges=" << c.edge_count() << "\ncolors=" << c.color_count()
          << "\ncolor_incidence=" << total_color_incidence(c) << "\nmax_color_degree=" << max_color_degree(c) << '\n';
      bool good = true;
      if (!satisfies(c, k)) {
        good = false;
        out << "violation=constraint " << k.to_string() << '\n';
        if (auto* mean = std::get_if<RhoMean>(&k.kind()))
          out << "detail=sum c(v) = " << total_color_incidence(c) << " > " << mrt::to_string(mean->rho * c.order())
              << " = rho*n\n";
      }
      if (auto mono = find_monochromatic(c, h)) {
        good = false;
        out << "violation=monochromatic " << describe_pattern(h) << " color=" << mono->color
            << " embedding=" << detail::join(mono->embedding, ',') << '\n';
      }
      out << "status=" << (good ? "ok" : "violation") << '\n';
      return good ? ok : violation;
    }
    if (*rt) {
      auto cert = rt_exact(n, parse_pattern(pattern_text), ColoringConstraint::parse(constraint_text), cfg);
      out << cert.value << '\n';
      std::ostringstream text;
      io::write_certificate(text, cert);
      detail::emit(out_path, text.str(), out);
      return ok;
    }
    if (*ramsey) {
      auto cert = ramsey_exact(parse_pattern(pattern_text), ColoringConstraint::parse(constraint_text), nmax, cfg);
      if (cert.conclusive) out << cert.value << '\n';
      else out << "none up to " << nmax << '\n';
      std::ostringstream text;
      io::write_certificate(text, cert);
      detail::emit(out_path, text.str(), out);
      return ok;
    }
    if (*color_sum) {
      auto cert = min_color_sum(m);
      out << cert.value << '\n';
      io::write_colored(out, *cert.witness);
      return ok;
    }
    if (*factor) {
      auto g = detail::load_colored(in_path).host();
      if (auto f = theorem3_factor(g)) {
        out << "factor=found\nblocks=" << f->blocks.size() << '\n';
        for (const auto& b : f->blocks) out << "block=" << detail::join(b) << '\n';
      } else {
        out << "factor=none\n";
      }
      return ok;
    }
    if (*cluster) {
      auto c = detail::load_colored(in_path);
      auto p = detail::load_partition(partition_path);
      auto gamma = parse_rational(gamma_text), eta = parse_rational(eta_text);
      auto cg = colored ? majority_color_clusters(c, p, gamma, eta) : cluster_graph(c.host(), p, gamma, eta);
      out << "m=" << cg.m << "\nequitable=" << (is_equitable(p) ? "true" : "false") << '\n';
      for (const auto& pr : cg.pairs) {
        out << "pair=" << pr.i << ' ' << pr.j << " density=" << mrt::to_string(pr.density)
            << " regular=" << pr.regular << " edge=" << pr.edge;
        if (pr.color) out << " color=" << *pr.color;
        out << '\n';
      }
      out << "cluster_edges=" << cg.graph().edge_count() << '\n';
      if (colored) out << "rho_star=" << mrt::to_string(cg.rho_star()) << '\n';
      return ok;
    }
    if (*scan) {
      auto h = parse_pattern(pattern_text);
      auto ramsey_value = known_two_color_clique_ramsey(h);
      const auto ks = {ColoringConstraint::colors(2), ColoringConstraint::local(2), ColoringConstraint::mean(2)};
      bool all_equal = true;
      for (int size = 1; size <= nmax; ++size) {
        out << "n=" << size;
        std::vector<std::int64_t> values;
        for (const auto& k : ks) {
          values.push_back(rt_exact(size, h, k, cfg).value);
          out << ' ' << k.to_string() << '=' << values.back();
        }
        bool equal = values[0] == values[1] && values[1] == values[2];
        if (ramsey_value) {
          auto ref = static_cast<std::int64_t>(turan_edge_count(static_cast<std::uint64_t>(size),
                                                                static_cast<std::uint64_t>(*ramsey_value - 1)));
          out << " reference=" << ref;
          equal = equal && values[0] == ref;
        }
        out << " equal=" << (equal ? "true" : "false") << '\n';
        all_equal = all_equal && equal;
      }
      out << "pattern=" << describe_pattern(h) << " all_equal=" << (all_equal ? "true" : "false") << '\n';
      return ok;
    }
  } catch (const budget_exceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return over_budget;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return malformed;
  }
  return malformed;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"mrt"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace mrt::cli
