#pragma once

#include "exact.hpp"
#include "linear_algebra.hpp"
#include "double_description.hpp"
#include "digraph.hpp"
#include "graph_io.hpp"
#include "lattice_polytope.hpp"
#include "fano_criteria.hpp"
#include "constructions.hpp"
#include "oracle.hpp"
#include "report_json.hpp"
