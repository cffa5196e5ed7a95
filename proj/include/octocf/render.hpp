#pragma once

// SVG drawings of quadrangulations, one panel per state, laid out left to
// right and top to bottom. Geometry is computed exactly and printed with
// twelve decimals, so equal inputs give byte-identical files.

#include <optional>
#include <string>
#include <vector>

#include "octocf/diagch.hpp"
#include "octocf/json_io.hpp"

namespace octocf::render {

struct RenderSpec {
  Rational scale{60};
  bool show_labels = true;
  /// Overrides each panel's own reference direction.
  std::optional<farey::Direction> direction_overlay;
  std::size_t panels_per_row = 3;
};

struct Panel {
  std::string caption;
  diagch::LabeledQuadrangulation q;
};

/// Throws std::invalid_argument on scale <= 0.
std::string render_svg(const std::vector<Panel>& panels, const RenderSpec& spec);

/// Panels of a trace document as produced by json_io::sector_trace or
/// json_io::expansion_trace, or a bare quadrangulation.
std::vector<Panel> panels_from_json(const json_io::json& doc);

}  // namespace octocf::render
