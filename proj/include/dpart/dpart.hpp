// Umbrella header.
#pragma once

#include "dpart/asymptotics.hpp"
#include "dpart/beta_solver.hpp"
#include "dpart/boltzmann.hpp"
#include "dpart/bound_ratio.hpp"
#include "dpart/exact_count.hpp"
#include "dpart/lemma_bounds.hpp"
#include "dpart/local_limit.hpp"
#include "dpart/special_functions.hpp"
