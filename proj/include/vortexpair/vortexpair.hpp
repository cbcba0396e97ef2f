/// \file vortexpair.hpp
/// Convenience umbrella: pulls in the whole solver library.

#ifndef VORTEXPAIR_VORTEXPAIR_HPP
#define VORTEXPAIR_VORTEXPAIR_HPP

#include "vortexpair/version.hpp"
#include "vortexpair/types.hpp"
#include "vortexpair/special_functions.hpp"
#include "vortexpair/quadrature.hpp"
#include "vortexpair/linalg.hpp"
#include "vortexpair/boundary.hpp"
#include "vortexpair/singular_integrals.hpp"
#include "vortexpair/functionals.hpp"
#include "vortexpair/linearization.hpp"
#include "vortexpair/validation.hpp"
#include "vortexpair/solver.hpp"
#include "vortexpair/solution_io.hpp"

#endif
