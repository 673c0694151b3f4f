// Command-line surface over the tree morphing library: decompositions,
// canonical drawings, morph construction, verification, linking numbers,
// generators, and a step-count experiment runner.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "treemorph/canonical.hpp"
#include "treemorph/canonize.hpp"
#include "treemorph/generators.hpp"
#include "treemorph/io.hpp"
#include "treemorph/linking.hpp"
#include "treemorph/morph3d.hpp"
#include "treemorph/path_morph.hpp"
#include "treemorph/tree.hpp"
#include "treemorph/verify.hpp"

using namespace treemorph;

namespace {

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty() || out_path == "-") {
    std::cout << content;
  } else {
    save_text(out_path, content);
  }
}

std::string drawing_text(const Drawing3D& d) {
  std::ostringstream os;
  write_drawing(os, d);
  return os.str();
}

std::string morph_text(const Morph& m) {
  std::ostringstream os;
  write_morph(os, m);
  return os.str();
}

std::string tree_text(const RootedTree& t) {
  std::ostringstream os;
  write_tree(os, t);
  return os.str();
}

// Drawing files carry positions only, so commands that need the structure
// take the tree file as an explicit argument.
Drawing3D load_with_tree(const std::string& drawing_path, const std::string& tree_path) {
  auto tree = load_tree(tree_path);
  return load_drawing(drawing_path, tree);
}

int report_and_exit_code(const CrossingReport& rep) {
  if (rep.clean()) {
    std::cout << "clean\n";
    return 0;
  }
  std::cout << "violation";
  if (rep.step >= 0) std::cout << " step " << rep.step;
  std::printf(" t=%.12g edges (%d, %d) at (%.17g, %.17g, %.17g): %s\n", rep.time, rep.edge_a,
              rep.edge_b, rep.witness.x, rep.witness.y, rep.witness.z, rep.detail.c_str());
  return 1;
}

DecompositionKind parse_kind(const std::string& kind) {
  if (kind == "heavy") return DecompositionKind::Heavy;
  if (kind == "strahler") return DecompositionKind::Strahler;
  throw CLI::ValidationError("--kind must be heavy or strahler");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"crossing-free 3D morphs for tree drawings"};
  app.require_subcommand(1);

  std::string tree_path, drawing_a, drawing_b, out_path, kind = "heavy", family = "random";
  std::string sizes_arg = "10,100,1000";
  double c_const = 2.0;
  bool do_verify = false;
  int cut_edge = -1, gen_n = 0;
  uint64_t seed = 1;

  auto* decompose_cmd = app.add_subcommand("decompose", "path decomposition of a tree");
  decompose_cmd->add_option("tree", tree_path)->required();
  decompose_cmd->add_option("--kind", kind, "heavy|strahler");
  decompose_cmd->callback([&] {
    auto tree = load_tree(tree_path);
    auto d = decompose(*tree, parse_kind(kind));
    std::cout << "paths " << d.paths.size() << "\n";
    for (size_t p = 0; p < d.paths.size(); ++p) {
      std::cout << "path " << p << " depth " << d.dpt[d.paths[p][0]] << " parent "
                << d.path_parent[p] << " :";
      for (int v : d.paths[p]) std::cout << ' ' << v;
      std::cout << "\n  L:";
      for (int u : d.light_order[p]) std::cout << ' ' << u;
      std::cout << "\n";
    }
    std::cout << "path-tree height " << d.path_tree_height() << "\n";
  });

  auto* canonical_cmd = app.add_subcommand("canonical", "canonical 3D drawing of a tree");
  canonical_cmd->add_option("tree", tree_path)->required();
  canonical_cmd->add_option("--kind", kind, "heavy|strahler");
  canonical_cmd->add_option("-o,--out", out_path);
  canonical_cmd->callback([&] {
    auto tree = load_tree(tree_path);
    auto d = decompose(*tree, parse_kind(kind));
    emit(out_path, drawing_text(canonical_tree_drawing(tree, d)));
  });

  auto* canonize_cmd =
      app.add_subcommand("canonize", "morph a planar drawing to the canonical drawing");
  canonize_cmd->add_option("drawing", drawing_a)->required();
  canonize_cmd->add_option("--tree", tree_path)->required();
  canonize_cmd->add_option("--c", c_const, "well-separation constant (> 1)");
  canonize_cmd->add_option("--kind", kind, "heavy|strahler");
  canonize_cmd->add_flag("--verify", do_verify, "verify every emitted step");
  canonize_cmd->add_option("-o,--out", out_path);
  canonize_cmd->callback([&] {
    Drawing3D g = load_with_tree(drawing_a, tree_path);
    MorphConfig config;
    config.c = c_const;
    config.kind = parse_kind(kind);
    config.verify_each_step = do_verify;
    Morph m = canonize(g, config);
    std::cerr << "steps " << m.steps() << "\n";
    emit(out_path, morph_text(m));
  });

  auto* morph2d_cmd =
      app.add_subcommand("morph2d", "morph between two planar drawings of one tree");
  morph2d_cmd->add_option("drawingA", drawing_a)->required();
  morph2d_cmd->add_option("drawingB", drawing_b)->required();
  morph2d_cmd->add_option("--tree", tree_path)->required();
  morph2d_cmd->add_option("--c", c_const);
  morph2d_cmd->add_option("--kind", kind);
  morph2d_cmd->add_option("-o,--out", out_path);
  morph2d_cmd->callback([&] {
    auto tree = load_tree(tree_path);
    Drawing3D g1 = load_drawing(drawing_a, tree);
    Drawing3D g2 = load_drawing(drawing_b, tree);
    MorphConfig config;
    config.c = c_const;
    config.kind = parse_kind(kind);
    Morph m = morph_between_planar(g1, g2, config);
    std::cerr << "steps " << m.steps() << "\n";
    emit(out_path, morph_text(m));
  });

  auto* morph_path_cmd =
      app.add_subcommand("morph-path", "2-step morph between planar path drawings");
  morph_path_cmd->add_option("drawingA", drawing_a)->required();
  morph_path_cmd->add_option("drawingB", drawing_b)->required();
  morph_path_cmd->add_option("-o,--out", out_path);
  morph_path_cmd->callback([&] {
    // Path drawings use vertex ids in path order; no tree file needed.
    Drawing3D g1 = load_drawing(drawing_a, nullptr);
    g1.tree = make_path_tree(g1.n());
    Drawing3D g2 = load_drawing(drawing_b, nullptr);
    g2.tree = g1.tree;
    Morph m = two_step_path_morph(g1, g2);
    std::cerr << "steps " << m.steps() << "\n";
    emit(out_path, morph_text(m));
  });

  auto* morph3d_cmd = app.add_subcommand("morph3d", "morph between two 3D drawings of one tree");
  morph3d_cmd->add_option("drawingA", drawing_a)->required();
  morph3d_cmd->add_option("drawingB", drawing_b)->required();
  morph3d_cmd->add_option("--tree", tree_path)->required();
  morph3d_cmd->add_option("-o,--out", out_path);
  morph3d_cmd->callback([&] {
    auto tree = load_tree(tree_path);
    Drawing3D g1 = load_drawing(drawing_a, tree);
    Drawing3D g2 = load_drawing(drawing_b, tree);
    Morph m = morph3d(g1, g2);
    std::cerr << "steps " << m.steps() << "\n";
    emit(out_path, morph_text(m));
  });

  auto* verify_cmd = app.add_subcommand("verify", "verify a morph file");
  verify_cmd->add_option("morph", drawing_a)->required();
  verify_cmd->add_option("--tree", tree_path)->required();
  verify_cmd->callback([&] {
    auto tree = load_tree(tree_path);
    Morph m = load_morph(drawing_a, tree);
    std::exit(report_and_exit_code(verify_morph(m)));
  });

  auto* linking_cmd = app.add_subcommand("linking", "linking number of a cut path drawing");
  linking_cmd->add_option("drawing", drawing_a)->required();
  linking_cmd->add_option("--cut", cut_edge, "edge index to cut")->required();
  linking_cmd->callback([&] {
    Drawing3D g = load_drawing(drawing_a, nullptr);
    g.tree = make_path_tree(g.n());
    PolygonalLink link = close_link(g, cut_edge);
    std::cout << linking_number(link) << "\n";
  });

  auto* gen_cmd = app.add_subcommand("gen", "generators");
  gen_cmd->require_subcommand(1);

  auto* gen_spiral = gen_cmd->add_subcommand("spiral", "interlocked-coil path drawing");
  gen_spiral->add_option("n", gen_n)->required();
  gen_spiral->add_option("-o,--out", out_path);
  gen_spiral->callback([&] {
    Drawing3D d = spiral_drawing(gen_n);
    std::cerr << "cut edge " << spiral_cut_edge(gen_n) << "\n";
    emit(out_path, drawing_text(d));
  });

  auto* gen_tree = gen_cmd->add_subcommand("tree", "tree generators");
  gen_tree->require_subcommand(1);
  auto* gen_tree_random = gen_tree->add_subcommand("random");
  gen_tree_random->add_option("n", gen_n)->required();
  gen_tree_random->add_option("--seed", seed);
  gen_tree_random->add_option("-o,--out", out_path);
  gen_tree_random->callback([&] { emit(out_path, tree_text(*make_random_tree(gen_n, seed))); });

  auto* gen_cat = gen_cmd->add_subcommand("caterpillar");
  gen_cat->add_option("n", gen_n)->required();
  gen_cat->add_option("-o,--out", out_path);
  gen_cat->callback([&] { emit(out_path, tree_text(*make_caterpillar(gen_n))); });

  auto* gen_drawing = gen_cmd->add_subcommand("drawing", "drawing generators");
  gen_drawing->require_subcommand(1);
  auto* gen_drawing_random = gen_drawing->add_subcommand("random");
  gen_drawing_random->add_option("tree", tree_path)->required();
  gen_drawing_random->add_option("--seed", seed);
  gen_drawing_random->add_option("-o,--out", out_path);
  gen_drawing_random->callback(
      [&] { emit(out_path, drawing_text(random_planar_drawing(load_tree(tree_path), seed))); });

  auto* stats_cmd = app.add_subcommand("stats", "experiment tables");
  auto* stats_steps = stats_cmd->add_subcommand("steps", "canonize step counts (TSV)");
  stats_steps->add_option("--family", family, "path|caterpillar|random|binary");
  stats_steps->add_option("--sizes", sizes_arg, "comma-separated sizes");
  stats_steps->add_option("--seed", seed);
  stats_steps->add_option("--c", c_const);
  stats_steps->callback([&] {
    std::cout << "n\theight\tsteps\n";
    std::stringstream ss(sizes_arg);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      int n = std::stoi(tok);
      std::shared_ptr<const RootedTree> tree;
      if (family == "path") tree = make_path_tree(n);
      else if (family == "caterpillar") tree = make_caterpillar(n);
      else if (family == "binary") tree = make_binary_tree(n);
      else if (family == "random") tree = make_random_tree(n, seed);
      else throw CLI::ValidationError("unknown family: " + family);
      Drawing3D g = random_planar_drawing(tree, seed + n);
      MorphConfig config;
      config.c = c_const;
      Morph m = canonize(g, config);
      auto d = heavy_path_decomposition(*tree);
      std::cout << n << '\t' << d.path_tree_height() << '\t' << m.steps() << "\n";
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
