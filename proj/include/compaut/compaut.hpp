#pragma once

#include "compaut/errors.hpp"
#include "compaut/graph.hpp"
#include "compaut/permutation.hpp"
#include "compaut/orientation.hpp"
#include "compaut/oracles.hpp"
#include "compaut/enumerate.hpp"
#include "compaut/modular_decomposition.hpp"
#include "compaut/group_expr.hpp"
#include "compaut/group_engine.hpp"
#include "compaut/orientations.hpp"
#include "compaut/linear_orders.hpp"
#include "compaut/permutation_graphs.hpp"
#include "compaut/dim4.hpp"
#include "compaut/io.hpp"
