#pragma once

#include "dirichlet/bounds.hpp"
#include "dirichlet/decompositions.hpp"
#include "dirichlet/eigen.hpp"
#include "dirichlet/error.hpp"
#include "dirichlet/extremal.hpp"
#include "dirichlet/families.hpp"
#include "dirichlet/graph.hpp"
#include "dirichlet/graph_io.hpp"
#include "dirichlet/parallel.hpp"
#include "dirichlet/random_graphs.hpp"
#include "dirichlet/serialize.hpp"
#include "dirichlet/sigma.hpp"
#include "dirichlet/spectral.hpp"
#include "dirichlet/tree_code.hpp"
