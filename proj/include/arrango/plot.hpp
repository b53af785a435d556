#pragma once

#include <string>

#include "arrango/arrangement.hpp"

namespace arrango {

class PlotError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Projective picture of a real essential rank-3 arrangement in the chart
/// x3 = 1: every other line is clipped to a disk of radius 4 and the line
/// at infinity, when present, is drawn as a dashed circle marked with an
/// infinity sign. The output only depends on the arrangement.
std::string plot_svg(const Arrangement &a);

}  // namespace arrango
