#pragma once

#include "primeclique/bench.hpp"
#include "primeclique/encoding.hpp"
#include "primeclique/errors.hpp"
#include "primeclique/graph.hpp"
#include "primeclique/graph_io.hpp"
#include "primeclique/oracle.hpp"
#include "primeclique/prime_core.hpp"
#include "primeclique/solver.hpp"
