#include <algorithm>
#include <charconv>
#include <sstream>

#include "tdmm/errors.hpp"
#include "tdmm/generators.hpp"

namespace tdmm {

// Format, one record per line ('#' starts a comment):
//   k2_count <k>
//   a_count <a>
//   marked <v>...
//   a_edges <a-index> <v> <v>...
//   l_leaf_edge <v> <a-index>
//   extra_vm_edge <v> <w>
//   pendant <v> <count>

std::string serialize_recipe(const FRecipe& r) {
  std::ostringstream out;
  out << "k2_count " << r.k2_count << '\n';
  out << "a_count " << r.a_count << '\n';
  out << "marked";
  for (Vertex v : r.marked) out << ' ' << v;
  out << '\n';
  for (std::size_t i = 0; i < r.a_edges.size(); ++i) {
    out << "a_edges " << i;
    for (Vertex v : r.a_edges[i]) out << ' ' << v;
    out << '\n';
  }
  for (const auto& [v, a] : r.l_leaf_edges) out << "l_leaf_edge " << v << ' ' << a << '\n';
  for (const Edge& e : r.extra_vm_edges) out << "extra_vm_edge " << e.u << ' ' << e.v << '\n';
  for (const auto& [v, count] : r.pendant_counts) out << "pendant " << v << ' ' << count << '\n';
  return out.str();
}

namespace {

std::size_t to_number(const std::string& token, std::size_t line_no) {
  std::size_t value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw FormatError("recipe line " + std::to_string(line_no) + ": '" + token +
                      "' is not a non-negative integer");
  }
  return value;
}

}  // namespace

FRecipe parse_recipe(std::string_view text) {
  FRecipe r;
  r.a_count = 0;
  bool saw_a_count = false;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string key;
    if (!(fields >> key) || key.front() == '#') continue;
    std::vector<std::size_t> values;
    for (std::string token; fields >> token;) values.push_back(to_number(token, line_no));

    auto expect = [&](std::size_t count) {
      if (values.size() != count) {
        throw FormatError("recipe line " + std::to_string(line_no) + ": '" + key + "' takes " +
                          std::to_string(count) + " value(s)");
      }
    };
    if (key == "k2_count") {
      expect(1);
      r.k2_count = values[0];
    } else if (key == "a_count") {
      expect(1);
      r.a_count = values[0];
      saw_a_count = true;
      r.a_edges.resize(r.a_count);
    } else if (key == "marked") {
      for (std::size_t v : values) r.marked.push_back(static_cast<Vertex>(v));
    } else if (key == "a_edges") {
      if (values.empty()) throw FormatError("recipe line " + std::to_string(line_no) + ": missing A index");
      if (values[0] >= r.a_edges.size()) r.a_edges.resize(values[0] + 1);
      for (std::size_t i = 1; i < values.size(); ++i) {
        r.a_edges[values[0]].push_back(static_cast<Vertex>(values[i]));
      }
    } else if (key == "l_leaf_edge") {
      expect(2);
      r.l_leaf_edges.emplace_back(static_cast<Vertex>(values[0]), values[1]);
    } else if (key == "extra_vm_edge") {
      expect(2);
      if (values[0] == values[1]) {
        throw FormatError("recipe line " + std::to_string(line_no) + ": self-loop");
      }
      r.extra_vm_edges.emplace_back(static_cast<Vertex>(values[0]), static_cast<Vertex>(values[1]));
    } else if (key == "pendant") {
      expect(2);
      r.pendant_counts[static_cast<Vertex>(values[0])] = values[1];
    } else {
      throw FormatError("recipe line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  if (!saw_a_count) r.a_count = r.a_edges.size();
  std::sort(r.marked.begin(), r.marked.end());
  r.marked.erase(std::unique(r.marked.begin(), r.marked.end()), r.marked.end());
  for (auto& nbrs : r.a_edges) std::sort(nbrs.begin(), nbrs.end());
  return r;
}

}  // namespace tdmm
