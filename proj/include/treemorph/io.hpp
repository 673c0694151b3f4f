#pragma once

#include <iosfwd>
#include <memory>
#include <string>

#include "treemorph/drawing.hpp"

namespace treemorph {

// Line-oriented text formats:
//   tree file:    "tree <n> <root>" then n-1 lines "<child> <parent>"
//   drawing file: "drawing <n> <dim>" then n lines "<vertex> <x> <y> <z>"
//   morph file:   "morph <n> <keyframes>" then one drawing block per keyframe
// Coordinates are written with 17 significant digits so read-after-write is
// exact. Parse failures throw ParseError with the offending line number.

struct ParseError : std::runtime_error {
  int line;
  ParseError(const std::string& msg, int line_no)
      : std::runtime_error(msg + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
};

std::shared_ptr<const RootedTree> read_tree(std::istream& in);
void write_tree(std::ostream& out, const RootedTree& tree);

// Drawings are stored without edges; the caller supplies the tree.
Drawing3D read_drawing(std::istream& in, std::shared_ptr<const RootedTree> tree);
void write_drawing(std::ostream& out, const Drawing3D& d);

Morph read_morph(std::istream& in, std::shared_ptr<const RootedTree> tree);
void write_morph(std::ostream& out, const Morph& m);

std::shared_ptr<const RootedTree> load_tree(const std::string& path);
Drawing3D load_drawing(const std::string& path, std::shared_ptr<const RootedTree> tree);
Morph load_morph(const std::string& path, std::shared_ptr<const RootedTree> tree);
void save_text(const std::string& path, const std::string& content);

}  // namespace treemorph
