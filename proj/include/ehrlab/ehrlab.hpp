#pragma once

// Umbrella header: exact lattice-point and Ehrhart-root workbench for the
// dual root polytopes A*_d and C*_d.

#include "numbers.hpp"
#include "polytope.hpp"
#include "enumerate.hpp"
#include "ehrhart.hpp"
#include "bijection.hpp"
#include "roots.hpp"
#include "report.hpp"
