#pragma once

#include <string>

#include "lpcat/tree.hpp"

namespace lpcat {

/// Output selector for render(). ascii-arc works for every family (arc rows /
/// mountain / dot matrix); the svg formats draw link patterns only.
struct RenderSpec {
  std::string format = "ascii-arc";  // ascii-arc | svg-chord | svg-arc
  int radius = 100;                  // svg-chord circle radius
  int spacing = 28;                  // svg-arc distance between points
};

/// Deterministic (byte-stable) drawing of one node.
/// Throws Errc::unknown_format for unrecognized formats and Errc::domain when
/// a format does not support the node's family.
std::string render(const TreeNode& node, const RenderSpec& spec);

}  // namespace lpcat
