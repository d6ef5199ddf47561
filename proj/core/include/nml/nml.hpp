#pragma once

#include "nml/baselines.hpp"
#include "nml/diagnostics.hpp"
#include "nml/errors.hpp"
#include "nml/kernels.hpp"
#include "nml/multiscale.hpp"
#include "nml/report.hpp"
#include "nml/trajectory.hpp"
#include "nml/trajectory_io.hpp"
#include "nml/volterra.hpp"
