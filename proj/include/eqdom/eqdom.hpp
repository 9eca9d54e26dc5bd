#pragma once

#include "eqdom/error.hpp"
#include "eqdom/graph.hpp"
#include "eqdom/grid.hpp"
#include "eqdom/io.hpp"
#include "eqdom/oracles.hpp"
#include "eqdom/recognition.hpp"
#include "eqdom/report.hpp"
#include "eqdom/tree_family.hpp"
