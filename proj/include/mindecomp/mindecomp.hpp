#pragma once

#include "mindecomp/vertex_set.hpp"
#include "mindecomp/graph.hpp"
#include "mindecomp/decomposition.hpp"
#include "mindecomp/canon.hpp"
#include "mindecomp/solver.hpp"
#include "mindecomp/gadgets.hpp"
#include "mindecomp/oracle.hpp"
