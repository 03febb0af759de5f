#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "sidecon/qss.hpp"

namespace sidecon {

struct Trajectory {
    double step = 0.0;
    std::vector<double> times;
    std::vector<std::vector<double>> states;  // one vector per sample
    std::map<std::string, double> parameters;
    bool truncated = false;  // non-finite state encountered
};

// Classical fixed-step RK4; deterministic, double precision only.
Trajectory integrate(const VectorField& f, const std::map<std::string, double>& params,
                     const std::vector<double>& x0, double h, double t_end);

struct ResidualEntry {
    std::string name;
    double max_abs = 0.0;
    double time_of_max_abs = 0.0;
    double max_scaled = 0.0;  // |phi| / (1 + |grad phi|), a first-order distance proxy
    double time_of_max_scaled = 0.0;
};

struct ResidualReport {
    std::vector<ResidualEntry> entries;
};

ResidualReport residual_monitor(const Trajectory& traj, const VectorField& f,
                                const std::vector<NamedFunction>& conditions);

struct PerturbationRow {
    double value;
    double max_scaled_residual;
    std::vector<double> start;
};

struct PerturbationStudy {
    std::string knob;
    std::string solved_state;  // state variable phi was solved for
    std::vector<PerturbationRow> rows;
};

// Starts each run on phi = 0 (phi solved for the first state variable it is
// linear in; remaining states and unset parameters default to 1).
PerturbationStudy perturbation_study(const VectorField& f, const NamedFunction& phi,
                                     const std::string& knob, const std::vector<double>& values,
                                     double t_end, double h,
                                     const std::map<std::string, double>& base_params = {});

// Header row then comma-separated samples, 17 significant digits.
void write_csv(std::ostream& os, const Trajectory& traj, const ContextPtr& ctx);
void write_csv(std::ostream& os, const PerturbationStudy& study);

std::string format_double(double v);  // shared 17-digit formatting

}  // namespace sidecon
