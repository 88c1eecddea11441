#pragma once

#include "wheels/catalog.hpp"
#include "wheels/coloring.hpp"
#include "wheels/dense.hpp"
#include "wheels/error.hpp"
#include "wheels/experiments.hpp"
#include "wheels/gadget.hpp"
#include "wheels/gadget_library.hpp"
#include "wheels/generate.hpp"
#include "wheels/graph.hpp"
#include "wheels/io.hpp"
#include "wheels/linkage.hpp"
#include "wheels/planarity.hpp"
#include "wheels/recipes.hpp"
#include "wheels/separation.hpp"
#include "wheels/subdivision.hpp"
#include "wheels/terminal_graph.hpp"
#include "wheels/wheel.hpp"
