#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "moduli/marked_cycle.hpp"

namespace moduli {

struct RenderSpec {
  int frames = 9;
  std::filesystem::path output_dir = ".";
  int size = 400;  // pixels, square
  bool labels = true;
};

// One SVG 1.1 document: the unit circle, the scan chord at homotopy time
// tau, marked vertices filled (and labelled), unmarked vertices hollow.
std::string render_frame_svg(const ModuliPoint& x, const Rational& tau, int size, bool labels);

// Writes frame_0000.svg ... showing homotopy_frame(x, k / (frames - 1)).
// Throws std::runtime_error when a file cannot be written.
std::vector<std::filesystem::path> render_frames(const ModuliPoint& x, const RenderSpec& spec);

}  // namespace moduli
