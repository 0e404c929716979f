#pragma once

#include "lapcen/centrality.hpp"
#include "lapcen/econ.hpp"
#include "lapcen/error.hpp"
#include "lapcen/experiment.hpp"
#include "lapcen/graph.hpp"
#include "lapcen/io.hpp"
#include "lapcen/lec.hpp"
#include "lapcen/matrices.hpp"
#include "lapcen/measures.hpp"
#include "lapcen/random.hpp"
#include "lapcen/randnet.hpp"
#include "lapcen/scenario.hpp"
#include "lapcen/spectrum.hpp"
#include "lapcen/stats.hpp"
