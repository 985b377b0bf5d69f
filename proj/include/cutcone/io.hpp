#pragma once

#include <cstdint>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cutcone/certificate.hpp"
#include "cutcone/cut_algebra.hpp"
#include "cutcone/embeddings.hpp"
#include "cutcone/fullcut.hpp"
#include "cutcone/graph.hpp"
#include "cutcone/matrix.hpp"
#include "cutcone/metric.hpp"
#include "cutcone/rational.hpp"

namespace cutcone {

using json = nlohmann::json;

namespace detail {

// DOM builder that keeps every non-integer number as its source text, so
// decimals can be converted to rationals without a detour through double.
class RawDecimalParser : public nlohmann::detail::json_sax_dom_parser<json> {
 public:
  using nlohmann::detail::json_sax_dom_parser<json>::json_sax_dom_parser;

  bool number_float(number_float_t, const string_t& text) { return string(const_cast<string_t&>(text)); }
};

}  // namespace detail

inline json parse_json(std::string_view text) {
  json root;
  detail::RawDecimalParser sax(root, true);
  try {
    json::sax_parse(text, &sax);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return root;
}

inline json parse_json(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_json(text);
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_json(in);
}

inline Rational rational_from_json(const json& v) {
  if (v.is_string()) return parse_rational(v.get_ref<const std::string&>());
  if (v.is_number_unsigned()) return Rational(std::to_string(v.get<std::uint64_t>()));
  if (v.is_number_integer()) return Rational(std::to_string(v.get<std::int64_t>()));
  throw ParseError("expected a rational, got " + v.dump());
}

inline json rational_to_json(const Rational& r) { return to_string(r); }

inline json vector_to_json(const RationalVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(rational_to_json(x));
  return out;
}

inline RationalVector vector_from_json(const json& v) {
  if (!v.is_array()) throw ParseError("expected an array of rationals");
  RationalVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(rational_from_json(x));
  return out;
}

namespace detail {

inline std::size_t size_field(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  const json& v = doc.at(key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
    throw ParseError(std::string("field '") + key + "' must be a nonnegative integer");
  return v.get<std::size_t>();
}

inline std::size_t vertex_from_json(const json& v, std::size_t n) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 1 || v.get<std::uint64_t>() > n)
    throw ParseError("vertex " + v.dump() + " outside 1.." + std::to_string(n));
  return v.get<std::size_t>();
}

}  // namespace detail

// Metric: {"n": N, "d": [d_12, d_13, ..., d_{n-1,n}]}

inline Metric metric_from_json(const json& doc) {
  const std::size_t n = detail::size_field(doc, "n");
  if (!doc.contains("d")) throw ParseError("missing field 'd'");
  try {
    return Metric(n, vector_from_json(doc.at("d")));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

inline json metric_to_json(const Metric& d) { return {{"n", d.n()}, {"d", vector_to_json(d.values())}}; }

// Graph: {"n": N, "edges": [[i, j], ...]} or {"n": N, "adjacency": [[0/1, ...], ...]}

inline SimpleGraph graph_from_json(const json& doc) {
  const std::size_t n = detail::size_field(doc, "n");
  if (n == 0) throw ParseError("graph needs at least one vertex");
  SimpleGraph g(n);
  if (doc.contains("edges")) {
    for (const auto& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ParseError("edge must be a pair of vertices: " + e.dump());
      std::size_t i = detail::vertex_from_json(e[0], n), j = detail::vertex_from_json(e[1], n);
      if (i == j) throw ParseError("self-loop at vertex " + std::to_string(i));
      g.add_edge(i, j);
    }
  } else if (doc.contains("adjacency")) {
    const json& a = doc.at("adjacency");
    if (!a.is_array() || a.size() != n) throw ParseError("adjacency must have n rows");
    for (std::size_t i = 0; i < n; ++i) {
      if (!a[i].is_array() || a[i].size() != n) throw ParseError("adjacency must have n columns");
      for (std::size_t j = 0; j < n; ++j) {
        const json& x = a[i][j];
        if (!x.is_number_integer() || (x.get<std::int64_t>() != 0 && x.get<std::int64_t>() != 1))
          throw ParseError("adjacency entries must be 0 or 1");
        if (x.get<std::int64_t>() != a[j][i].get<std::int64_t>()) throw ParseError("adjacency must be symmetric");
        if (i == j && x.get<std::int64_t>() != 0) throw ParseError("adjacency must have zero diagonal");
        if (i < j && x.get<std::int64_t>() == 1) g.add_edge(i + 1, j + 1);
      }
    }
  } else {
    throw ParseError("graph needs 'edges' or 'adjacency'");
  }
  return g;
}

inline json graph_to_json(const SimpleGraph& g) {
  json edges = json::array();
  for (auto [i, j] : g.edges()) edges.push_back({i, j});
  return {{"n", g.n()}, {"edges", edges}};
}

// Certificate: {"n": N, "cuts": [{"members": [..]} or {"mask": M}, "weight": w}, ...]}
// Bit i-1 of a mask stands for vertex i.

inline CutCertificate certificate_from_json(const json& doc) {
  const std::size_t n = detail::size_field(doc, "n");
  if (n < 2 || n > 63) throw ParseError("certificate needs 2 <= n <= 63");
  if (!doc.contains("cuts") || !doc.at("cuts").is_array()) throw ParseError("certificate needs a 'cuts' array");
  CutCertificate cert{n, {}, {}};
  for (const auto& entry : doc.at("cuts")) {
    if (!entry.is_object() || !entry.contains("weight")) throw ParseError("cut entry needs a 'weight'");
    std::uint64_t mask = 0;
    if (entry.contains("members")) {
      for (const auto& v : entry.at("members")) mask |= std::uint64_t{1} << (detail::vertex_from_json(v, n) - 1);
    } else if (entry.contains("mask")) {
      if (!entry.at("mask").is_number_unsigned()) throw ParseError("mask must be a nonnegative integer");
      mask = entry.at("mask").get<std::uint64_t>();
      if (mask >> n) throw ParseError("mask has bits beyond vertex " + std::to_string(n));
    } else {
      throw ParseError("cut entry needs 'members' or 'mask'");
    }
    cert.add(Cut(n, mask), rational_from_json(entry.at("weight")));
  }
  return cert;
}

inline json certificate_to_json(const CutCertificate& cert) {
  json cuts = json::array();
  for (std::size_t k = 0; k < cert.cuts.size(); ++k)
    cuts.push_back({{"members", cert.cuts[k].members()}, {"weight", rational_to_json(cert.weights[k])}});
  return {{"n", cert.n}, {"cuts", cuts}};
}

inline json point_set_to_json(const PointSet& pts) {
  json points = json::array();
  for (const auto& p : pts.points) points.push_back(vector_to_json(p));
  return {{"norm", pts.norm == Norm::l1 ? "l1" : "linf"}, {"dimension", pts.dimension()}, {"points", points}};
}

inline PointSet point_set_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("points")) throw ParseError("point set needs 'points'");
  PointSet pts;
  const std::string norm = doc.value("norm", "l1");
  if (norm == "linf") pts.norm = Norm::linf;
  else if (norm != "l1") throw ParseError("unknown norm '" + norm + "'");
  for (const auto& p : doc.at("points")) pts.points.push_back(vector_from_json(p));
  return pts;
}

/// One point per line, coordinates as space-separated rationals.
inline void write_point_set_text(std::ostream& os, const PointSet& pts) {
  for (const auto& p : pts.points) {
    for (std::size_t k = 0; k < p.size(); ++k) os << (k ? " " : "") << to_string(p[k]);
    os << '\n';
  }
}

inline json matrix_to_json(const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(vector_to_json(m.row(i)));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", rows}};
}

inline json kernel_basis_to_json(const KernelBasis& basis) {
  json vectors = json::array();
  for (const auto& v : basis.vectors) {
    json dense = json::array();
    for (const auto& x : v.vector.dense()) dense.push_back(x.get_num().get_si());
    vectors.push_back({{"label", v.label()}, {"vector", dense}});
  }
  return {{"n", basis.n}, {"dimension", basis.vectors.size()}, {"normative", basis.normative}, {"vectors", vectors}};
}

inline void write_json_file(const std::string& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << doc.dump(2) << '\n';
}

}  // namespace cutcone
