#pragma once

#include <string>
#include <vector>

#include "hooke/dynamics.hpp"
#include "hooke/io.hpp"

namespace hooke {

/// Plain hand-built SVG of the table, both caustic conics, and the trajectory
/// arcs (sampled polylines).  No plotting dependency.
std::string trajectory_svg(const BilliardTable& table, const Trajectory& traj);

/// SVG of the momentum-map image region, the three critical half-lines, and
/// the sampled (E, lambda2) points.
std::string diagram_svg(const BilliardTable& table,
                        const std::vector<DiagramCsvRow>& rows);

}  // namespace hooke
