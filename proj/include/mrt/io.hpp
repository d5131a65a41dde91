#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "coloring.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "regularity.hpp"
#include "search.hpp"

// Text formats.
//
// Colored graph: a header line "n q m" followed by m lines "u v c", edges in
// lexicographic order with colors in first-use order. An uncolored graph uses
// the same layout with q = 1 and the color column omitted.
//
// Partition: a line with the class count, then one line of vertex ids per class.
//
// Certificate: one "key=value" record per line.

namespace mrt::io {

namespace detail {

inline std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

inline int to_int(const std::string& s) { return static_cast<int>(mrt::detail::parse_int(s)); }

inline bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first != std::string::npos && line[first] != '#') return true;
  }
  return false;
}

}  // namespace detail

inline void write_colored(std::ostream& out, const EdgeColoring& c) {
  out << c.order() << ' ' << c.color_count() << ' ' << c.edge_count() << '\n';
  for (std::size_t i = 0; i < c.edges().size(); ++i)
    out << c.edges()[i].u << ' ' << c.edges()[i].v << ' ' << c.colors()[i] << '\n';
}

inline void write_graph(std::ostream& out, const Graph& g) {
  out << g.order() << " 1 " << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

/// Reads either layout; lines without a color column get color 0.
inline EdgeColoring read_colored(std::istream& in) {
  std::string line;
  if (!detail::next_content_line(in, line)) throw invalid_argument("graph file: missing header");
  auto head = detail::tokens(line);
  if (head.size() != 3) throw invalid_argument("graph file: header must be 'n q m'");
  int n = detail::to_int(head[0]), q = detail::to_int(head[1]), m = detail::to_int(head[2]);
  if (n < 0 || n > max_vertices || q < 0 || m < 0) throw invalid_argument("graph file: header out of range");
  std::vector<std::tuple<int, int, int>> triples;
  for (int i = 0; i < m; ++i) {
    if (!detail::next_content_line(in, line))
      throw invalid_argument("graph file: expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    auto t = detail::tokens(line);
    if (t.size() != 2 && t.size() != 3) throw invalid_argument("graph file: edge line must be 'u v [c]'");
    int u = detail::to_int(t[0]), v = detail::to_int(t[1]);
    int c = t.size() == 3 ? detail::to_int(t[2]) : 0;
    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
      throw invalid_argument("graph file: bad edge '" + line + "'");
    if (c < 0 || c >= std::max(q, 1)) throw invalid_argument("graph file: color out of range in '" + line + "'");
    triples.emplace_back(std::min(u, v), std::max(u, v), c);
  }
  if (detail::next_content_line(in, line)) throw invalid_argument("graph file: trailing data '" + line + "'");
  return EdgeColoring::from_triples(n, triples);
}

inline Graph read_graph(std::istream& in) { return read_colored(in).host(); }

inline std::string to_text(const EdgeColoring& c) {
  std::ostringstream out;
  write_colored(out, c);
  return out.str();
}

inline EdgeColoring colored_from_text(const std::string& text) {
  std::istringstream in(text);
  return read_colored(in);
}

inline void write_partition(std::ostream& out, const Partition& p) {
  out << p.classes.size() << '\n';
  for (auto c : p.classes) {
    bool first = true;
    c.for_each([&](int v) {
      out << (first ? "" : " ") << v;
      first = false;
    });
    out << '\n';
  }
}

inline Partition read_partition(std::istream& in) {
  std::string line;
  if (!detail::next_content_line(in, line)) throw invalid_argument("partition file: missing class count");
  auto head = detail::tokens(line);
  if (head.size() != 1) throw invalid_argument("partition file: first line must be the class count");
  int m = detail::to_int(head[0]);
  if (m < 0) throw invalid_argument("partition file: negative class count");
  Partition p;
  for (int i = 0; i < m; ++i) {
    if (!detail::next_content_line(in, line)) throw invalid_argument("partition file: missing class line");
    VertexSet c;
    for (const auto& t : detail::tokens(line)) {
      int v = detail::to_int(t);
      if (v < 0 || v >= max_vertices) throw invalid_argument("partition file: vertex out of range");
      c.insert(v);
    }
    p.classes.push_back(c);
  }
  return p;
}

inline void write_certificate(std::ostream& out, const Certificate& c) {
  const auto& a = c.attestation;
  out << "kind=" << to_string(c.kind) << '\n'
      << "value=" << c.value << '\n'
      << "conclusive=" << (c.conclusive ? "true" : "false") << '\n'
      << "n=" << a.n << '\n'
      << "pattern=" << a.pattern << '\n'
      << "constraint=" << a.constraint << '\n'
      << "space=" << a.space << '\n'
      << "nodes=" << a.stats.nodes << '\n'
      << "pruned_mono=" << a.stats.pruned_mono << '\n'
      << "pruned_constraint=" << a.stats.pruned_constraint << '\n'
      << "pruned_iso=" << a.stats.pruned_iso << '\n'
      << "tasks=" << a.stats.tasks << '\n'
      << "graphs_examined=" << a.graphs_examined << '\n'
      << "graphs_refuted=" << a.graphs_refuted << '\n'
      << "engine=" << a.engine << '\n';
  if (c.witness) {
    const auto& w = *c.witness;
    out << "witness=" << w.order() << ' ' << w.color_count() << ' ' << w.edge_count() << '\n';
    for (std::size_t i = 0; i < w.edges().size(); ++i)
      out << "witness.edge=" << w.edges()[i].u << ' ' << w.edges()[i].v << ' ' << w.colors()[i] << '\n';
  }
}

inline Certificate read_certificate(std::istream& in) {
  Certificate c;
  auto& a = c.attestation;
  a.engine.clear();
  std::string witness_text;
  auto u64 = [](const std::string& s) { return static_cast<std::uint64_t>(mrt::detail::parse_int(s)); };
  for (std::string line; detail::next_content_line(in, line);) {
    auto eq = line.find('=');
    if (eq == std::string::npos) throw invalid_argument("certificate: expected key=value, got '" + line + "'");
    auto key = line.substr(0, eq), value = line.substr(eq + 1);
    if (key == "kind") {
      if (value == "LowerBoundWitness") c.kind = CertificateKind::LowerBoundWitness;
      else if (value == "ExhaustiveUpperBound") c.kind = CertificateKind::ExhaustiveUpperBound;
      else if (value == "RamseyValue") c.kind = CertificateKind::RamseyValue;
      else if (value == "OracleValue") c.kind = CertificateKind::OracleValue;
      else throw invalid_argument("certificate: unknown kind '" + value + "'");
    } else if (key == "value") c.value = mrt::detail::parse_int(value);
    else if (key == "conclusive") c.conclusive = value == "true";
    else if (key == "n") a.n = detail::to_int(value);
    else if (key == "pattern") a.pattern = value;
    else if (key == "constraint") a.constraint = value;
    else if (key == "space") a.space = value;
    else if (key == "nodes") a.stats.nodes = u64(value);
    else if (key == "pruned_mono") a.stats.pruned_mono = u64(value);
    else if (key == "pruned_constraint") a.stats.pruned_constraint = u64(value);
    else if (key == "pruned_iso") a.stats.pruned_iso = u64(value);
    else if (key == "tasks") a.stats.tasks = u64(value);
    else if (key == "graphs_examined") a.graphs_examined = u64(value);
    else if (key == "graphs_refuted") a.graphs_refuted = u64(value);
    else if (key == "engine") a.engine = value;
    else if (key == "witness") witness_text = value + "\n";
    else if (key == "witness.edge") witness_text += value + "\n";
    else throw invalid_argument("certificate: unknown key '" + key + "'");
  }
  if (!witness_text.empty()) c.witness = colored_from_text(witness_text);
  return c;
}

}  // namespace mrt::io
