#include "cedom/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "cedom/generators.hpp"

namespace cedom {

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<long long> as_integer(std::string_view s) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

struct Line {
  std::size_t number;
  std::vector<std::string_view> fields;
};

std::vector<Line> significant_lines(std::string_view text, std::string_view comment_prefixes) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    auto fields = tokens(text.substr(pos, end - pos));
    if (!fields.empty() && comment_prefixes.find(fields[0][0]) == std::string_view::npos) {
      out.push_back({number, std::move(fields)});
    }
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

Vertex parse_count(const Line& line, std::string_view field) {
  auto n = as_integer(field);
  if (!n || *n < 0 || *n > INT32_MAX) throw ParseError(line.number, "invalid vertex count '" + std::string(field) + "'");
  return static_cast<Vertex>(*n);
}

Graph make_graph(Vertex n, const std::vector<Edge>& edges, const std::vector<std::size_t>& line_of) {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].first == edges[i].second) throw ParseError(line_of[i], "self-loop is not allowed");
  }
  return Graph(n, edges);
}

Instance parse_dimacs(const std::vector<Line>& lines, std::string name) {
  const Line& header = lines.front();
  if (header.fields.size() < 3) throw ParseError(header.number, "DIMACS header needs 'p edge <n> <m>'");
  Instance inst;
  inst.name = std::move(name);
  const Vertex n = parse_count(header, header.fields[2]);
  std::vector<Edge> edges;
  std::vector<std::size_t> line_of;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.fields[0] != "e" || line.fields.size() != 3) throw ParseError(line.number, "expected 'e <u> <v>'");
    auto u = as_integer(line.fields[1]);
    auto v = as_integer(line.fields[2]);
    if (!u || !v) throw ParseError(line.number, "vertex ids must be integers");
    if (*u < 1 || *u > n || *v < 1 || *v > n) throw ParseError(line.number, "endpoint out of range");
    edges.emplace_back(static_cast<Vertex>(*u - 1), static_cast<Vertex>(*v - 1));
    line_of.push_back(line.number);
  }
  inst.graph = make_graph(n, edges, line_of);
  for (Vertex v = 0; v < n; ++v) inst.labels.push_back(std::to_string(v + 1));
  return inst;
}

}  // namespace

bool Instance::identity_labels() const {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] != std::to_string(i)) return false;
  }
  return true;
}

Instance parse_instance(std::string_view text, std::string name) {
  auto probe = significant_lines(text, "#c");
  if (!probe.empty() && probe.front().fields[0] == "p") return parse_dimacs(probe, std::move(name));

  auto lines = significant_lines(text, "#");
  if (lines.empty()) throw ParseError(0, "missing vertex count header");
  const Line& header = lines.front();
  if (header.fields.size() != 1) throw ParseError(header.number, "header must hold only the vertex count");
  const Vertex n = parse_count(header, header.fields[0]);

  bool numeric = true;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.fields.size() != 2) throw ParseError(line.number, "expected two labels per edge line");
    for (auto f : line.fields) {
      auto id = as_integer(f);
      if (!id || *id < 0 || (f.size() > 1 && f[0] == '0')) numeric = false;
    }
  }

  Instance inst;
  inst.name = std::move(name);
  std::vector<Edge> edges;
  std::vector<std::size_t> line_of;
  if (numeric) {
    for (std::size_t i = 1; i < lines.size(); ++i) {
      const Line& line = lines[i];
      auto u = *as_integer(line.fields[0]);
      auto v = *as_integer(line.fields[1]);
      if (u >= n || v >= n) {
        throw ParseError(line.number, "endpoint out of range [0, " + std::to_string(n) + ")");
      }
      edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
      line_of.push_back(line.number);
    }
    for (Vertex v = 0; v < n; ++v) inst.labels.push_back(std::to_string(v));
  } else {
    std::unordered_map<std::string_view, Vertex> ids;
    auto id_of = [&](const Line& line, std::string_view label) {
      auto [it, inserted] = ids.try_emplace(label, static_cast<Vertex>(ids.size()));
      if (inserted) {
        if (it->second >= n) {
          throw ParseError(line.number, "more distinct labels than the declared " + std::to_string(n) + " vertices");
        }
        inst.labels.emplace_back(label);
      }
      return it->second;
    };
    for (std::size_t i = 1; i < lines.size(); ++i) {
      const Line& line = lines[i];
      const Vertex u = id_of(line, line.fields[0]);
      const Vertex v = id_of(line, line.fields[1]);
      edges.emplace_back(u, v);
      line_of.push_back(line.number);
    }
    for (auto v = static_cast<Vertex>(inst.labels.size()); v < n; ++v) inst.labels.push_back(std::to_string(v));
  }
  inst.graph = make_graph(n, edges, line_of);
  return inst;
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open instance file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str(), path.stem().string());
}

std::string write_instance(const Graph& g, std::span<const std::string> labels) {
  std::ostringstream out;
  out << g.n() << '\n';
  for (auto [u, v] : g.edges()) {
    if (labels.empty()) {
      out << u << ' ' << v << '\n';
    } else {
      out << labels[u] << ' ' << labels[v] << '\n';
    }
  }
  return out.str();
}

namespace {

std::vector<double> spec_numbers(std::string_view spec, std::string_view args, std::size_t expected) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= args.size()) {
    std::size_t end = args.find(',', pos);
    if (end == std::string_view::npos) end = args.size();
    auto piece = args.substr(pos, end - pos);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (piece.empty() || ec != std::errc{} || ptr != piece.data() + piece.size()) {
      throw std::invalid_argument("bad number '" + std::string(piece) + "' in generator spec '" + std::string(spec) + "'");
    }
    out.push_back(value);
    pos = end + 1;
  }
  if (out.size() != expected) {
    throw std::invalid_argument("generator spec '" + std::string(spec) + "' needs " + std::to_string(expected) +
                                " comma-separated parameters");
  }
  return out;
}

Vertex whole(double x, std::string_view what) {
  if (x != static_cast<double>(static_cast<long long>(x)) || x < 0 || x > INT32_MAX) {
    throw std::invalid_argument(std::string(what) + " must be a non-negative integer");
  }
  return static_cast<Vertex>(x);
}

Instance labelled(std::string name, Graph g) {
  Instance inst{std::move(name), std::move(g), {}};
  for (Vertex v = 0; v < inst.graph.n(); ++v) inst.labels.push_back(std::to_string(v));
  return inst;
}

}  // namespace

Instance generate_instance(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("generator spec needs 'family:params'");
  const auto family = spec.substr(0, colon);
  const auto args = spec.substr(colon + 1);

  if (family == "grid") {
    auto p = spec_numbers(spec, args, 2);
    const Vertex rows = whole(p[0], "rows"), cols = whole(p[1], "cols");
    return labelled(grid_name(rows, cols), grid(rows, cols));
  }
  if (family == "snark") {
    auto p = spec_numbers(spec, args, 1);
    const Vertex k = whole(p[0], "k");
    return labelled(flower_snark_name(k), flower_snark(k));
  }
  if (family == "udg") {
    auto p = spec_numbers(spec, args, 5);
    const Vertex c = whole(p[0], "point count");
    const auto seed = static_cast<std::uint64_t>(whole(p[4], "seed"));
    auto g = unit_disk(c, p[1], p[2], p[3], seed);
    std::string name = unit_disk_name(c, p[1], p[2], p[3], seed);
    if (!g) throw std::invalid_argument(name + " is disconnected; try another seed");
    return labelled(std::move(name), std::move(*g));
  }
  if (family == "er") {
    auto p = spec_numbers(spec, args, 3);
    const Vertex n = whole(p[0], "vertex count");
    const auto seed = static_cast<std::uint64_t>(whole(p[2], "seed"));
    std::ostringstream name;
    name << "ER_" << n << "-" << p[1] << "_" << seed;
    return labelled(name.str(), erdos_renyi(n, p[1], seed));
  }
  if (family == "erdeg") {
    auto p = spec_numbers(spec, args, 3);
    const Vertex n = whole(p[0], "vertex count");
    auto result = erdos_renyi_with_degree(n, p[1], static_cast<std::uint64_t>(whole(p[2], "seed")));
    return labelled(erdos_renyi_name(n, p[1]), std::move(result.graph));
  }
  throw std::invalid_argument("unknown generator family '" + std::string(family) + "'");
}

}  // namespace cedom
