#include <algorithm>
#include <sstream>

#include "pregroup/error.hpp"
#include "pregroup/reduction.hpp"

namespace pregroup {

namespace {

void check_fit(const CompoundType& input, const ReductionWitness& w) {
  if (w.input_size() != input.size())
    throw Error("witness does not match input: witness covers " + std::to_string(w.input_size()) +
                " positions, input has " + std::to_string(input.size()));
  std::vector<int> use(input.size(), 0);
  for (const auto& l : w.links) {
    if (l.left >= l.right || l.right >= input.size()) throw Error("witness does not match input: bad link");
    ++use[l.left];
    ++use[l.right];
  }
  for (auto r : w.residue) {
    if (r >= input.size()) throw Error("witness does not match input: bad residue index");
    ++use[r];
  }
  if (std::any_of(use.begin(), use.end(), [](int u) { return u != 1; }))
    throw Error("witness does not match input: positions not partitioned");
  if (!is_planar(w)) throw Error("witness does not match input: links cross");
}

void rtrim(std::string& s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
}

// Row 0 is the type line. A link of depth d has its bar on row d and
// uprights on rows 1..d; residue wires run one row past the deepest bar.
std::string render_text(const CompoundType& input, const ReductionWitness& w) {
  if (input.empty()) return {};
  std::vector<std::size_t> column(input.size());
  std::string header;
  for (std::size_t i = 0; i < input.size(); ++i) {
    if (i > 0) header += "  ";
    column[i] = header.size();
    header += render(input[i]);
  }

  std::vector<std::size_t> depth(w.links.size(), 1);
  // Links are sorted by left end; inner links have larger left ends.
  for (std::size_t a = w.links.size(); a-- > 0;)
    for (std::size_t b = a + 1; b < w.links.size(); ++b)
      if (w.links[a].left < w.links[b].left && w.links[b].right < w.links[a].right)
        depth[a] = std::max(depth[a], depth[b] + 1);
  const std::size_t max_depth = w.links.empty() ? 0 : *std::max_element(depth.begin(), depth.end());
  const std::size_t rows = max_depth + (w.residue.empty() ? 0 : 1);

  std::vector<std::string> lines{header};
  for (std::size_t row = 1; row <= rows; ++row) {
    std::string line(header.size(), ' ');
    for (std::size_t k = 0; k < w.links.size(); ++k) {
      if (depth[k] < row) continue;
      const auto lo = column[w.links[k].left];
      const auto hi = column[w.links[k].right];
      line[lo] = '|';
      line[hi] = '|';
      if (depth[k] == row)
        for (auto c = lo + 1; c < hi; ++c) line[c] = '_';
    }
    for (auto r : w.residue) line[column[r]] = '|';
    rtrim(line);
    lines.push_back(std::move(line));
  }
  std::string out;
  for (const auto& l : lines) out += l + '\n';
  return out;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string render_dot(const CompoundType& input, const ReductionWitness& w) {
  std::ostringstream os;
  os << "graph reduction {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=plaintext];\n";
  for (std::size_t i = 0; i < input.size(); ++i) {
    const bool is_residue = std::binary_search(w.residue.begin(), w.residue.end(), i);
    os << "  t" << i << " [label=\"" << escape(render(input[i])) << "\""
       << (is_residue ? ", shape=box" : "") << "];\n";
  }
  if (input.size() > 1) {
    os << "  { rank=same;";
    for (std::size_t i = 0; i < input.size(); ++i) os << " t" << i << ";";
    os << " }\n";
    os << "  edge [style=invis];\n  ";
    for (std::size_t i = 0; i < input.size(); ++i) os << (i ? " -- " : "") << "t" << i;
    os << ";\n";
  }
  os << "  edge [style=solid];\n";
  for (const auto& l : w.links) os << "  t" << l.left << " -- t" << l.right << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace

std::string render_diagram(const CompoundType& input, const ReductionWitness& w,
                           DiagramFormat format) {
  check_fit(input, w);
  return format == DiagramFormat::Text ? render_text(input, w) : render_dot(input, w);
}

}  // namespace pregroup
