#pragma once

#include "kuramoto/analytic.hpp"
#include "kuramoto/condition2.hpp"
#include "kuramoto/equitable.hpp"
#include "kuramoto/error.hpp"
#include "kuramoto/generators.hpp"
#include "kuramoto/graph.hpp"
#include "kuramoto/graph_io.hpp"
#include "kuramoto/integrate.hpp"
#include "kuramoto/model.hpp"
#include "kuramoto/partition.hpp"
#include "kuramoto/rational.hpp"
#include "kuramoto/report.hpp"
#include "kuramoto/search.hpp"
#include "kuramoto/sync.hpp"
#include "kuramoto/trajectory.hpp"
