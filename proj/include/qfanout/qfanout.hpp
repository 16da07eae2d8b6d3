// Umbrella header for the three-qubit fanout toolkit.
#pragma once

#include "qfanout/basis.hpp"
#include "qfanout/circuit.hpp"
#include "qfanout/evolution.hpp"
#include "qfanout/fanout.hpp"
#include "qfanout/hamiltonian.hpp"
#include "qfanout/matrix.hpp"
#include "qfanout/pauli.hpp"
#include "qfanout/random.hpp"
#include "qfanout/serialize.hpp"
