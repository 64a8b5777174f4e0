#pragma once

#include "chain_complex.hpp"
#include "geometric.hpp"
#include "graph.hpp"
#include "homology.hpp"
#include "magnitude.hpp"
#include "matrix.hpp"
#include "report.hpp"
#include "simplicial.hpp"
#include "smith.hpp"
#include "tree.hpp"
