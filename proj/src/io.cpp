#include "l6n1/io.hpp"

#include <fstream>
#include <sstream>

namespace l6n1 {

namespace {

struct Parsed {
  int vertices = -1;
  std::vector<std::pair<Dart, Dart>> edges;
  std::vector<Colour> colours;
  std::vector<int> over;  // -1 until set
  bool any_over = false;
};

Parsed parse_lines(const std::string& text) {
  Parsed out;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  std::vector<bool> edge_seen;
  std::vector<bool> dart_used;
  while (std::getline(is, line)) {
    lineno++;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "vertices") {
      if (out.vertices != -1) fail_at(lineno, "duplicate vertices line");
      if (!(ls >> out.vertices) || out.vertices < 1) fail_at(lineno, "bad vertex count");
      out.edges.assign(2 * out.vertices, {-1, -1});
      out.colours.assign(2 * out.vertices, Colour::Blue);
      edge_seen.assign(2 * out.vertices, false);
      dart_used.assign(4 * out.vertices, false);
      out.over.assign(out.vertices, -1);
    } else if (kw == "edge") {
      if (out.vertices < 0) fail_at(lineno, "edge before vertices line");
      long id, a, b;
      std::string col;
      if (!(ls >> id >> a >> b >> col)) fail_at(lineno, "expected: edge <id> <dartA> <dartB> <colour>");
      if (id < 0 || id >= (long)out.edges.size()) fail_at(lineno, "edge id out of range");
      if (edge_seen[id]) fail_at(lineno, "duplicate edge id");
      if (a < 0 || a >= 4L * out.vertices || b < 0 || b >= 4L * out.vertices)
        fail_at(lineno, "dart out of range");
      if (a == b) fail_at(lineno, "edge pairs a dart with itself");
      if (dart_used[a] || dart_used[b]) fail_at(lineno, "dart used by more than one edge");
      auto c = col.size() == 1 ? colour_from_letter(col[0]) : std::nullopt;
      if (!c) fail_at(lineno, "colour must be B, R or G");
      dart_used[a] = dart_used[b] = true;
      edge_seen[id] = true;
      out.edges[id] = {(Dart)a, (Dart)b};
      out.colours[id] = *c;
    } else if (kw == "over") {
      if (out.vertices < 0) fail_at(lineno, "over before vertices line");
      long v, bit;
      if (!(ls >> v >> bit)) fail_at(lineno, "expected: over <vertex> <0|1>");
      if (v < 0 || v >= out.vertices) fail_at(lineno, "vertex out of range");
      if (bit != 0 && bit != 1) fail_at(lineno, "over bit must be 0 or 1");
      if (out.over[v] != -1) fail_at(lineno, "duplicate over line for vertex");
      out.over[v] = (int)bit;
      out.any_over = true;
    } else {
      fail_at(lineno, "unknown keyword '" + kw + "'");
    }
  }
  if (out.vertices < 0) fail_at(lineno, "missing vertices line");
  for (std::size_t e = 0; e < out.edges.size(); e++)
    if (!edge_seen[e]) fail_at(lineno, "missing edge " + std::to_string(e));
  return out;
}

Projection to_projection(Parsed& p) {
  return Projection::make(PlanarMap::build(p.vertices, std::move(p.edges)),
                          std::move(p.colours));
}

}  // namespace

Projection parse_projection(const std::string& text) {
  Parsed p = parse_lines(text);
  if (p.any_over) fail_at(0, "projection record carries over lines; parse it as a diagram");
  return to_projection(p);
}

std::string serialize_projection(const Projection& p) {
  std::ostringstream os;
  os << "vertices " << p.map().vertex_count() << "\n";
  for (int e = 0; e < p.map().edge_count(); e++) {
    auto [a, b] = p.map().edges()[e];
    os << "edge " << e << " " << a << " " << b << " " << colour_letter(p.colour_of_edge(e))
       << "\n";
  }
  return os.str();
}

Diagram parse_diagram(const std::string& text) {
  Parsed p = parse_lines(text);
  for (int v = 0; v < p.vertices; v++)
    if (p.over[v] == -1) fail_at(0, "missing over line for vertex " + std::to_string(v));
  Resolution res;
  for (int v = 0; v < p.vertices; v++) res.over_parity.push_back((std::uint8_t)p.over[v]);
  return Diagram{to_projection(p), std::move(res)};
}

std::string serialize_diagram(const Diagram& d) {
  std::ostringstream os;
  os << serialize_projection(d.projection);
  for (std::size_t v = 0; v < d.resolution.over_parity.size(); v++)
    os << "over " << v << " " << (int)d.resolution.over_parity[v] << "\n";
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) fail(Errc::ParseError, "cannot open " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) fail(Errc::ParseError, "cannot open " + path + " for writing");
  f << content;
  if (!f) fail(Errc::ParseError, "write failed: " + path);
}

}  // namespace l6n1
