#include "treemorph/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace treemorph {

namespace {

struct LineReader {
  std::istream& in;
  int line_no = 0;

  std::istringstream next(const char* what) {
    std::string line;
    while (std::getline(in, line)) {
      ++line_no;
      size_t pos = line.find_first_not_of(" \t\r");
      if (pos == std::string::npos) continue;  // blank
      if (line[pos] == '#') continue;          // comment
      return std::istringstream(line);
    }
    throw ParseError(std::string("unexpected end of file, expected ") + what, line_no);
  }
};

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Drawing3D read_drawing_block(LineReader& r, std::shared_ptr<const RootedTree> tree) {
  std::istringstream header = r.next("drawing header");
  std::string tag;
  int n = 0, dim = 0;
  if (!(header >> tag >> n >> dim) || tag != "drawing")
    throw ParseError("malformed drawing header", r.line_no);
  if (dim != 2 && dim != 3) throw ParseError("drawing dimension must be 2 or 3", r.line_no);
  if (tree && n != tree->vertex_count())
    throw ParseError("drawing vertex count does not match the tree", r.line_no);
  Drawing3D d;
  d.tree = std::move(tree);
  d.position.assign(n, {});
  std::vector<char> seen(n, 0);
  for (int i = 0; i < n; ++i) {
    std::istringstream ls = r.next("vertex line");
    int v;
    double x, y, z;
    if (!(ls >> v >> x >> y >> z)) throw ParseError("malformed vertex line", r.line_no);
    if (v < 0 || v >= n) throw ParseError("vertex id out of range", r.line_no);
    if (seen[v]) throw ParseError("duplicate vertex id", r.line_no);
    if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z))
      throw ParseError("non-finite coordinate", r.line_no);
    seen[v] = 1;
    d.position[v] = {x, y, z};
  }
  return d;
}

}  // namespace

std::shared_ptr<const RootedTree> read_tree(std::istream& in) {
  LineReader r{in};
  std::istringstream header = r.next("tree header");
  std::string tag;
  int n = 0, root = 0;
  if (!(header >> tag >> n >> root) || tag != "tree")
    throw ParseError("malformed tree header", r.line_no);
  if (n <= 0) throw ParseError("tree vertex count must be positive", r.line_no);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n - 1; ++i) {
    std::istringstream ls = r.next("edge line");
    int child, parent;
    if (!(ls >> child >> parent)) throw ParseError("malformed edge line", r.line_no);
    edges.emplace_back(child, parent);
  }
  try {
    return std::make_shared<RootedTree>(n, root, edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), r.line_no);
  }
}

void write_tree(std::ostream& out, const RootedTree& tree) {
  out << "tree " << tree.vertex_count() << ' ' << tree.root() << '\n';
  for (auto [child, parent] : tree.edges()) out << child << ' ' << parent << '\n';
}

Drawing3D read_drawing(std::istream& in, std::shared_ptr<const RootedTree> tree) {
  LineReader r{in};
  return read_drawing_block(r, std::move(tree));
}

void write_drawing(std::ostream& out, const Drawing3D& d) {
  int dim = d.is_planar(0.0) ? 2 : 3;
  out << "drawing " << d.n() << ' ' << dim << '\n';
  for (int v = 0; v < d.n(); ++v) {
    const Vec3& p = d.position[v];
    out << v << ' ' << fmt_double(p.x) << ' ' << fmt_double(p.y) << ' ' << fmt_double(p.z)
        << '\n';
  }
}

Morph read_morph(std::istream& in, std::shared_ptr<const RootedTree> tree) {
  LineReader r{in};
  std::istringstream header = r.next("morph header");
  std::string tag;
  int n = 0, frames = 0;
  if (!(header >> tag >> n >> frames) || tag != "morph")
    throw ParseError("malformed morph header", r.line_no);
  if (frames < 1) throw ParseError("morph needs at least one keyframe", r.line_no);
  Morph m;
  for (int k = 0; k < frames; ++k) {
    Drawing3D d = read_drawing_block(r, tree);
    if (d.n() != n) throw ParseError("keyframe size does not match morph header", r.line_no);
    m.keyframes.push_back(std::move(d));
  }
  return m;
}

void write_morph(std::ostream& out, const Morph& m) {
  int n = m.keyframes.empty() ? 0 : m.keyframes.front().n();
  out << "morph " << n << ' ' << m.keyframes.size() << '\n';
  for (const Drawing3D& k : m.keyframes) write_drawing(out, k);
}

namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  return in;
}

}  // namespace

std::shared_ptr<const RootedTree> load_tree(const std::string& path) {
  std::ifstream in = open_input(path);
  return read_tree(in);
}

Drawing3D load_drawing(const std::string& path, std::shared_ptr<const RootedTree> tree) {
  std::ifstream in = open_input(path);
  return read_drawing(in, std::move(tree));
}

Morph load_morph(const std::string& path, std::shared_ptr<const RootedTree> tree) {
  std::ifstream in = open_input(path);
  return read_morph(in, std::move(tree));
}

void save_text(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open file for writing: " + path);
  out << content;
}

}  // namespace treemorph
