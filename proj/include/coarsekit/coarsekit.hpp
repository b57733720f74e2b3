#pragma once

#include "coarsekit/centred.hpp"
#include "coarsekit/coarse.hpp"
#include "coarsekit/errors.hpp"
#include "coarsekit/formats.hpp"
#include "coarsekit/generators.hpp"
#include "coarsekit/graph.hpp"
#include "coarsekit/independence.hpp"
#include "coarsekit/limits.hpp"
#include "coarsekit/separators.hpp"
#include "coarsekit/treedecomp.hpp"
