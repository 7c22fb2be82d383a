#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hooke/dynamics.hpp"
#include "hooke/integrability.hpp"

namespace hooke {

/// Shortest-exact decimal rendering used by every emitter (17 significant
/// digits, lossless double round trip).
std::string format_g17(double v);

struct TrajectoryCsvRow {
    long bounce_index;
    double t_hit;
    double x, y;
    double vx_out, vy_out;
    double E;
    double lambda1, lambda2;
};

inline constexpr const char* kTrajectoryCsvHeader =
    "bounce_index,t_hit,x,y,vx_out,vy_out,E,lambda1,lambda2";

std::vector<TrajectoryCsvRow> trajectory_rows(const BilliardTable& table,
                                              const Trajectory& traj);
void write_trajectory_csv(std::ostream& os, const std::vector<TrajectoryCsvRow>& rows);
std::vector<TrajectoryCsvRow> read_trajectory_csv(std::istream& is);

/// Bifurcation-diagram CSV: kind in {sample, corner_sample, region_boundary,
/// halfline_a, halfline_b, halfline_0}, then E, lambda2.
struct DiagramCsvRow {
    std::string kind;
    double E;
    double lambda2;
};

void write_diagram_csv(std::ostream& os, const std::vector<DiagramCsvRow>& rows);

}  // namespace hooke
