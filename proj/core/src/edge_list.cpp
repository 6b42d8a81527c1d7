#include "ktree/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <unordered_map>

namespace ktree {
namespace {

constexpr std::string_view kCountDirective = "n=";

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t parse_uint(std::string_view s, std::size_t line_no, const char* what) {
  std::uint64_t x = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc{} || p != s.data() + s.size()) {
    throw ParseError(line_no, std::string(what) + " is not a non-negative integer: '" +
                                  std::string(s) + "'");
  }
  return x;
}

}  // namespace

LoadedGraph read_edge_list(std::istream& in, bool relabel) {
  struct RawEdge {
    std::uint64_t u, v;
    std::optional<std::uint64_t> w;
    std::size_t line;
  };
  std::vector<RawEdge> raw;
  LoadedGraph result;
  std::optional<std::uint64_t> declared_n;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view view(line);
    auto first = view.find_first_not_of(" \t");
    if (first == std::string_view::npos) continue;
    view.remove_prefix(first);
    if (view[0] == '#') {
      std::string_view body = view.substr(1);
      auto b = body.find_first_not_of(" \t");
      body = b == std::string_view::npos ? std::string_view{} : body.substr(b);
      if (body.substr(0, kCountDirective.size()) == kCountDirective) {
        declared_n = parse_uint(body.substr(kCountDirective.size()), line_no, "vertex count");
      } else {
        result.comments.emplace_back(body);
      }
      continue;
    }
    auto tokens = split_ws(view);
    if (tokens.size() != 2 && tokens.size() != 3) {
      throw ParseError(line_no, "expected 'u v' or 'u v w', got " +
                                    std::to_string(tokens.size()) + " fields");
    }
    RawEdge e{parse_uint(tokens[0], line_no, "vertex"), parse_uint(tokens[1], line_no, "vertex"),
              std::nullopt, line_no};
    if (tokens.size() == 3) e.w = parse_uint(tokens[2], line_no, "weight");
    if (e.u == e.v) throw ParseError(line_no, "self-loop on vertex " + std::to_string(e.u));
    raw.push_back(e);
  }

  std::unordered_map<std::uint64_t, Vertex> remap;
  auto map_id = [&](std::uint64_t id, std::size_t ln) -> Vertex {
    if (!relabel) {
      if (id >= std::numeric_limits<Vertex>::max()) throw ParseError(ln, "vertex id too large");
      return static_cast<Vertex>(id);
    }
    auto [it, inserted] = remap.try_emplace(id, static_cast<Vertex>(result.original_ids.size()));
    if (inserted) result.original_ids.push_back(id);
    return it->second;
  };

  std::vector<std::tuple<Vertex, Vertex, std::optional<std::uint64_t>>> mapped;
  mapped.reserve(raw.size());
  std::uint64_t n = 0;
  for (const auto& e : raw) {
    Vertex u = map_id(e.u, e.line);
    Vertex v = map_id(e.v, e.line);
    n = std::max<std::uint64_t>(n, std::max(u, v) + std::uint64_t{1});
    mapped.emplace_back(u, v, e.w);
  }
  if (declared_n && !relabel) {
    if (*declared_n < n) throw ParseError(1, "declared vertex count smaller than largest id");
    n = *declared_n;
  }

  result.graph = Graph(n);
  for (const auto& [u, v, w] : mapped) {
    result.graph.add_edge(u, v);
    if (w) result.graph.add_weight(u, v, *w);
  }
  return result;
}

LoadedGraph read_edge_list(const std::string& path, bool relabel) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_edge_list(in, relabel);
}

void write_edge_list(const Graph& g, std::ostream& out, const std::vector<std::string>& comments) {
  out << "# " << kCountDirective << g.num_vertices() << '\n';
  for (const auto& c : comments) out << "# " << c << '\n';
  g.for_each_edge([&](Vertex u, Vertex v) {
    out << u << ' ' << v;
    if (auto w = g.weight(u, v)) out << ' ' << *w;
    out << '\n';
  });
}

void write_edge_list(const Graph& g, const std::string& path,
                     const std::vector<std::string>& comments) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_edge_list(g, out, comments);
}

void write_id_map(const std::vector<std::uint64_t>& original_ids, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << "vertex,original_id\n";
  for (std::size_t i = 0; i < original_ids.size(); ++i) out << i << ',' << original_ids[i] << '\n';
}

}  // namespace ktree
