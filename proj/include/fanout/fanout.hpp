#pragma once

#include "fanout/adequacy.hpp"
#include "fanout/amplitude.hpp"
#include "fanout/builtins.hpp"
#include "fanout/circuit.hpp"
#include "fanout/coupling.hpp"
#include "fanout/error.hpp"
#include "fanout/geometry.hpp"
#include "fanout/hamiltonian.hpp"
#include "fanout/padic.hpp"
#include "fanout/quadratic.hpp"
#include "fanout/rational.hpp"
#include "fanout/search5.hpp"
#include "fanout/squarefree.hpp"
#include "fanout/standard_position.hpp"
#include "fanout/tables.hpp"
