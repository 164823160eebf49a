#include "wconvex/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <tuple>

#include "wconvex/errors.hpp"

namespace wconvex::io {

namespace {

/// Non-empty, non-comment lines with their numbers.
struct LineReader {
  explicit LineReader(std::istream& stream) : in(stream) {}

  std::istream& in;
  std::size_t number = 0;
  std::string text;

  bool next() {
    while (std::getline(in, text)) {
      ++number;
      if (!text.empty() && text.back() == '\r') text.pop_back();
      const auto first = text.find_first_not_of(" \t");
      if (first == std::string::npos || text[first] == '#') continue;
      return true;
    }
    return false;
  }
};

std::vector<std::string> split_ws(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::string trim(std::string s) {
  const auto a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return {};
  const auto b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

template <typename T>
T parse_number(const std::string& word, std::size_t line, const char* what) {
  T value{};
  const auto* end = word.data() + word.size();
  const auto [ptr, ec] = std::from_chars(word.data(), end, value);
  if (ec != std::errc() || ptr != end) throw ParseError(line, "expected " + std::string(what) + ", got '" + word + "'");
  return value;
}

PointId parse_vertex(const std::string& word, std::size_t line, std::size_t vertex_count) {
  const auto v = parse_number<std::uint64_t>(word, line, "a vertex id");
  if (v >= vertex_count) throw UnknownPoint(static_cast<std::size_t>(v));
  return static_cast<PointId>(v);
}

bool parse_label(const std::string& word, std::size_t line) {
  if (word == "+") return true;
  if (word == "-") return false;
  throw ParseError(line, "label must be '+' or '-', got '" + word + "'");
}

}  // namespace

Graph read_graph(std::istream& in) {
  LineReader lines(in);
  if (!lines.next()) throw ParseError(0, "graph file is empty");
  const auto header = split_ws(lines.text);
  if (header.size() != 2) throw ParseError(lines.number, "header must be 'n m'");
  Graph g;
  g.vertex_count = parse_number<std::size_t>(header[0], lines.number, "a vertex count");
  const auto m = parse_number<std::size_t>(header[1], lines.number, "an edge count");
  for (std::size_t i = 0; i < m; ++i) {
    if (!lines.next()) throw ParseError(lines.number, "expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    const auto w = split_ws(lines.text);
    if (w.size() != 2 && w.size() != 3) throw ParseError(lines.number, "edge line must be 'u v [w]'");
    const bool has_weight = w.size() == 3;
    if (i == 0) g.weighted = has_weight;
    if (has_weight != g.weighted) throw ParseError(lines.number, "either every edge has a weight or none has");
    Edge e;
    e.u = parse_vertex(w[0], lines.number, g.vertex_count);
    e.v = parse_vertex(w[1], lines.number, g.vertex_count);
    if (has_weight) e.weight = parse_number<double>(w[2], lines.number, "a weight");
    g.edges.push_back(e);
  }
  if (lines.next()) throw ParseError(lines.number, "more edge lines than announced");
  return g;
}

std::vector<PointId> read_vertices(std::istream& in, std::size_t vertex_count) {
  LineReader lines(in);
  std::vector<PointId> out;
  while (lines.next())
    for (const auto& w : split_ws(lines.text)) out.push_back(parse_vertex(w, lines.number, vertex_count));
  return out;
}

Examples<PointId> read_vertex_labels(std::istream& in, std::size_t vertex_count) {
  LineReader lines(in);
  Examples<PointId> out;
  while (lines.next()) {
    const auto w = split_ws(lines.text);
    if (w.size() != 2) throw ParseError(lines.number, "label line must be 'v +' or 'v -'");
    const PointId v = parse_vertex(w[0], lines.number, vertex_count);
    (parse_label(w[1], lines.number) ? out.positive : out.negative).push_back(v);
  }
  return out;
}

Examples<BitString> read_bitstrings(std::istream& in) {
  LineReader lines(in);
  Examples<BitString> out;
  std::size_t length = 0;
  while (lines.next()) {
    const auto w = split_ws(lines.text);
    if (w.empty() || w.size() > 2) throw ParseError(lines.number, "line must be '<bits> [+|-]'");
    BitString b;
    try {
      b = BitString::parse(w[0]);
    } catch (const ParseError& e) {
      throw ParseError(lines.number, e.what());
    }
    if (b.length == 0) throw ParseError(lines.number, "empty bit string");
    if (length == 0) length = b.length;
    if (b.length != length)
      throw ParseError(lines.number, "bit string of length " + std::to_string(b.length) + ", expected " + std::to_string(length));
    const bool positive = w.size() == 1 || parse_label(w[1], lines.number);
    (positive ? out.positive : out.negative).push_back(b);
  }
  return out;
}

Examples<PointR> read_points(std::istream& in) {
  LineReader lines(in);
  Examples<PointR> out;
  std::size_t dim = 0;
  while (lines.next()) {
    std::vector<std::string> fields;
    std::istringstream row(lines.text);
    for (std::string f; std::getline(row, f, ',');) fields.push_back(trim(f));
    bool positive = true;
    if (!fields.empty() && (fields.back() == "+" || fields.back() == "-")) {
      positive = fields.back() == "+";
      fields.pop_back();
    }
    if (fields.empty()) throw ParseError(lines.number, "row has no coordinates");
    PointR p;
    for (const auto& f : fields) {
      const double v = parse_number<double>(f, lines.number, "a coordinate");
      if (!std::isfinite(v)) throw ParseError(lines.number, "coordinate is not finite");
      p.push_back(v);
    }
    if (dim == 0) dim = p.size();
    if (p.size() != dim)
      throw ParseError(lines.number, std::to_string(p.size()) + " coordinates, expected " + std::to_string(dim));
    (positive ? out.positive : out.negative).push_back(std::move(p));
  }
  return out;
}

nlohmann::json to_json(const ThetaDecomposition& d) {
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& b : d.blocks) blocks.push_back(b);
  return {{"theta", d.theta.value()}, {"blocks", std::move(blocks)}};
}

ThetaDecomposition decomposition_from_json(const nlohmann::json& doc, std::size_t vertex_count) {
  if (!doc.is_object() || !doc.contains("theta") || !doc.contains("blocks"))
    throw ParseError(0, "decomposition needs 'theta' and 'blocks'");
  if (!doc["theta"].is_number()) throw ParseError(0, "'theta' must be a number");
  if (!doc["blocks"].is_array()) throw ParseError(0, "'blocks' must be an array");
  ThetaDecomposition d{Theta(doc["theta"].get<double>()), {}};
  for (const auto& block : doc["blocks"]) {
    if (!block.is_array()) throw ParseError(0, "every block must be an array of vertex ids");
    PointSet b;
    for (const auto& v : block) {
      if (!v.is_number_unsigned()) throw ParseError(0, "vertex ids must be non-negative integers");
      const auto id = v.get<std::uint64_t>();
      if (id >= vertex_count) throw UnknownPoint(static_cast<std::size_t>(id));
      b.push_back(static_cast<PointId>(id));
    }
    d.blocks.push_back(std::move(b));
  }
  return d;
}

namespace {

std::vector<Term> sorted_terms(const BlockSet<Term>& set) {
  std::vector<Term> terms = set.blocks;
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.str() < b.str(); });
  return terms;
}

std::vector<Box> sorted_boxes(const BlockSet<Box>& set) {
  std::vector<Box> boxes = set.blocks;
  std::sort(boxes.begin(), boxes.end(), [](const Box& a, const Box& b) {
    return std::tie(a.lo, a.hi) < std::tie(b.lo, b.hi);
  });
  return boxes;
}

}  // namespace

std::string dnf(const BlockSet<Term>& set) {
  const auto terms = sorted_terms(set);
  if (terms.empty()) return "false";
  std::string out;
  for (const Term& t : terms) {
    if (!out.empty()) out += " | ";
    out += terms.size() > 1 && t.literal_count() > 1 ? "(" + t.str() + ")" : t.str();
  }
  return out;
}

nlohmann::json to_json(const BlockSet<Term>& set) {
  nlohmann::json blocks = nlohmann::json::array();
  for (const Term& t : sorted_terms(set)) blocks.push_back(t.str());
  return {{"theta", set.theta.value()}, {"blocks", std::move(blocks)}, {"dnf", dnf(set)}};
}

nlohmann::json to_json(const BlockSet<Box>& set) {
  nlohmann::json blocks = nlohmann::json::array();
  for (const Box& b : sorted_boxes(set)) blocks.push_back({{"lo", b.lo}, {"hi", b.hi}});
  return {{"theta", set.theta.value()}, {"blocks", std::move(blocks)}};
}

void write_csv(std::ostream& out, const ThetaDecomposition& d) {
  out << "block,vertex\n";
  for (std::size_t b = 0; b < d.blocks.size(); ++b)
    for (PointId v : d.blocks[b]) out << b << ',' << v << '\n';
}

void write_csv(std::ostream& out, const BlockSet<Term>& set) {
  out << "term\n";
  for (const Term& t : sorted_terms(set)) out << t.str() << '\n';
}

void write_csv(std::ostream& out, const BlockSet<Box>& set) {
  const auto boxes = sorted_boxes(set);
  if (boxes.empty()) return;
  const std::size_t d = boxes.front().dimension();
  for (std::size_t i = 0; i < d; ++i) out << "min" << i + 1 << ',';
  for (std::size_t i = 0; i < d; ++i) out << "max" << i + 1 << (i + 1 < d ? "," : "\n");
  for (const Box& b : boxes) {
    for (double v : b.lo) out << v << ',';
    for (std::size_t i = 0; i < d; ++i) out << b.hi[i] << (i + 1 < d ? "," : "\n");
  }
}

SuiteConfig suite_config_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ParseError(0, "config must be a JSON object");
  auto require = [&](const char* key) -> const nlohmann::json& {
    if (!doc.contains(key)) throw ParseError(0, std::string("missing config key '") + key + "'");
    return doc[key];
  };
  auto get = [](const nlohmann::json& v, const char* key, auto fallback) {
    try {
      return v.get<decltype(fallback)>();
    } catch (const nlohmann::json::exception&) {
      throw ParseError(0, std::string("config key '") + key + "' has the wrong type");
    }
  };
  SuiteConfig c;
  c.graph_sizes = get(require("graph_sizes"), "graph_sizes", std::vector<std::size_t>{});
  c.graphs_per_size = get(require("graphs_per_size"), "graphs_per_size", std::size_t{});
  c.targets_per_graph = get(require("targets_per_graph"), "targets_per_graph", std::size_t{});
  c.train_sizes = get(require("train_sizes"), "train_sizes", std::vector<std::size_t>{});
  if (doc.contains("weighted")) {
    const auto& w = doc["weighted"];
    c.weighted = w.is_array() ? get(w, "weighted", std::vector<bool>{}) : std::vector<bool>{get(w, "weighted", false)};
  }
  if (doc.contains("master_seed")) c.master_seed = get(doc["master_seed"], "master_seed", std::uint64_t{});
  if (doc.contains("workers")) c.workers = get(doc["workers"], "workers", std::size_t{});
  c.record_timing = doc.contains("record_timing") ? get(doc["record_timing"], "record_timing", false) : false;
  if (doc.contains("seed_vertices")) c.target.seed_vertices = get(doc["seed_vertices"], "seed_vertices", std::size_t{});
  if (doc.contains("min_fraction")) c.target.min_fraction = get(doc["min_fraction"], "min_fraction", double{});
  return c;
}

}  // namespace wconvex::io
