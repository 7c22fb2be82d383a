#include "hooke/io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hooke {

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<TrajectoryCsvRow> trajectory_rows(const BilliardTable& table,
                                              const Trajectory& traj) {
    std::vector<TrajectoryCsvRow> rows;
    rows.reserve(traj.bounce_points.size());
    for (std::size_t k = 0; k < traj.bounce_points.size(); ++k) {
        const PhasePoint& p = traj.bounce_points[k];
        const CausticPair cp = caustics(table, p);
        rows.push_back({static_cast<long>(k), traj.bounce_times[k], p.xi.x, p.xi.y,
                        p.v.x, p.v.y, energy(table, p), cp.lambda1, cp.lambda2});
    }
    return rows;
}

void write_trajectory_csv(std::ostream& os, const std::vector<TrajectoryCsvRow>& rows) {
    os << kTrajectoryCsvHeader << '\n';
    for (const TrajectoryCsvRow& r : rows) {
        os << r.bounce_index << ',' << format_g17(r.t_hit) << ','
           << format_g17(r.x) << ',' << format_g17(r.y) << ','
           << format_g17(r.vx_out) << ',' << format_g17(r.vy_out) << ','
           << format_g17(r.E) << ',' << format_g17(r.lambda1) << ','
           << format_g17(r.lambda2) << '\n';
    }
}

std::vector<TrajectoryCsvRow> read_trajectory_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != kTrajectoryCsvHeader) {
        throw std::runtime_error("bad trajectory CSV header");
    }
    std::vector<TrajectoryCsvRow> rows;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        TrajectoryCsvRow r{};
        std::istringstream ss(line);
        std::string field;
        double* fields[] = {&r.t_hit, &r.x,      &r.y,       &r.vx_out,
                            &r.vy_out, &r.E,     &r.lambda1, &r.lambda2};
        if (!std::getline(ss, field, ',')) throw std::runtime_error("short CSV row");
        r.bounce_index = std::stol(field);
        for (double* f : fields) {
            if (!std::getline(ss, field, ',')) throw std::runtime_error("short CSV row");
            *f = std::stod(field);
        }
        rows.push_back(r);
    }
    return rows;
}

void write_diagram_csv(std::ostream& os, const std::vector<DiagramCsvRow>& rows) {
    os << "kind,E,lambda2\n";
    for (const DiagramCsvRow& r : rows) {
        os << r.kind << ',' << format_g17(r.E) << ',' << format_g17(r.lambda2) << '\n';
    }
}

}  // namespace hooke
