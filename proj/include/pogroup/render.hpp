#pragma once

#include <string>
#include <vector>

#include "pogroup/downset.hpp"
#include "pogroup/region.hpp"

namespace pogroup {

/// Inclusive integer window [lo, hi] in data coordinates.
struct ViewBox {
  IntVec lo, hi;
};

/// "A..B" where A and B are a single integer (used for every coordinate)
/// or comma-separated coordinates.
ViewBox parse_view_box(const std::string& text, std::size_t n);

/// The window spanning all finite endpoints of d with a margin of 2.
ViewBox default_view(const DownsetExpr& d);

struct Layer {
  Region region;
  std::string fill;
};

struct Panel {
  std::string title;
  /// Drawn in order, later layers on top.
  std::vector<Layer> layers;
  /// The layer whose points count as members in ASCII output.
  std::size_t primary = 0;
};

/// One panel per component: the component shaded over a faint D, with its
/// local support darker. Panels are joined by union signs.
std::vector<Panel> component_panels(const DownsetExpr& d, const std::vector<Component>& components);

std::string render_svg(const std::vector<Panel>& panels, const ViewBox& view);
/// '#' for points of each panel's primary layer, '.' elsewhere, with axes
/// drawn as '|', '-' and '+' at non-members.
std::string render_ascii(const std::vector<Panel>& panels, const ViewBox& view);

} // namespace pogroup
