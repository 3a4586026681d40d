#pragma once

#include "femtonc/conflict_graphs.hpp"
#include "femtonc/error.hpp"
#include "femtonc/fixtures.hpp"
#include "femtonc/graph.hpp"
#include "femtonc/model.hpp"
#include "femtonc/scenario_io.hpp"
#include "femtonc/scheduler.hpp"
#include "femtonc/sim.hpp"
#include "femtonc/solvers.hpp"
#include "femtonc/theory.hpp"
