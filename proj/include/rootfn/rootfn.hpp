/*!
  \file rootfn.hpp
  \brief Umbrella header
*/

#pragma once

#include "circuit.hpp"
#include "construct.hpp"
#include "cube.hpp"
#include "enumerate.hpp"
#include "errors.hpp"
#include "faultsim.hpp"
#include "io.hpp"
#include "minterm.hpp"
#include "properties.hpp"
#include "sop.hpp"
#include "synth.hpp"
#include "transform.hpp"
#include "truth_table.hpp"
#include "universal.hpp"
#include "version.hpp"
