#pragma once

#include "shortbasis/error.hpp"
#include "shortbasis/exact_arith.hpp"
#include "shortbasis/quadratic_orders.hpp"
#include "shortbasis/basis.hpp"
#include "shortbasis/lattice.hpp"
#include "shortbasis/basis_builders.hpp"
#include "shortbasis/curve.hpp"
#include "shortbasis/catalog.hpp"
#include "shortbasis/serialization.hpp"
#include "shortbasis/instances.hpp"
