#pragma once

#include <iosfwd>
#include <string>

#include "mixsim/experiment.hpp"

namespace mixsim {

// Line-oriented experiment spec format: '#' comments, blank lines ignored,
// section headers [experiment] / [network] / [case], one "key = value" per
// line. Unknown sections and keys are rejected with the offending line
// number.
//
//   [experiment]            [network]            [case]
//   u = 1                   name = star          g = 0.4
//   n0 = 10                 kind = star          d = 0.3
//   t_max = 100             n = 91
//   reps = 100
//   mode = single-event     # kinds: star tree jumpers ws ba hypercube edgelist
//   seed = 1                # keys per kind: n branching depth count k p m dim path seed
//
// The [experiment] seed is overridden by an explicit master seed at the CLI.
ExperimentSpec parse_experiment_spec(std::istream& in);
ExperimentSpec parse_experiment_spec_text(const std::string& text);
ExperimentSpec load_experiment_spec(const std::string& path);

// Canonical serialization; parse(serialize(spec)) round-trips.
std::string experiment_spec_text(const ExperimentSpec& spec);

} // namespace mixsim
