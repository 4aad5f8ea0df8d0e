#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "ineq/index.hpp"

namespace ineqcli {

/// Static line plot of λ -> value: one polyline with a vertex per point,
/// x ticks at 0, 0.25, 0.5, 0.75, 1 and y ticks at the data range.
void write_path_svg(std::ostream& os, std::span<const ineq::PathPoint> path,
                    const std::string& title);

}  // namespace ineqcli
