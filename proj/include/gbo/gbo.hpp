#pragma once

// Umbrella header: the optimizer, the benchmark suite, the baselines and the
// experiment harness.

#include "gbo/ball.hpp"
#include "gbo/baselines/de.hpp"
#include "gbo/baselines/ga.hpp"
#include "gbo/baselines/pso.hpp"
#include "gbo/baselines/sa.hpp"
#include "gbo/benchmarks.hpp"
#include "gbo/harness/experiment.hpp"
#include "gbo/harness/report.hpp"
#include "gbo/harness/stability.hpp"
#include "gbo/objective.hpp"
#include "gbo/optimizer.hpp"
#include "gbo/oracle.hpp"
#include "gbo/primes.hpp"
#include "gbo/quality.hpp"
