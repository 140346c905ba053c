#pragma once

#include "dihedral.hpp"
#include "format.hpp"
#include "moment_graph.hpp"
#include "neighborhood.hpp"
#include "oracle.hpp"
