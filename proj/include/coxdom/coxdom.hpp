#pragma once

// Root systems, dominance order, elementary roots, infinity heights, and
// imaginary-cone membership for finite-rank Coxeter groups.

#include "coxdom/cone.hpp"
#include "coxdom/cover.hpp"
#include "coxdom/datum.hpp"
#include "coxdom/dihedral.hpp"
#include "coxdom/dominance.hpp"
#include "coxdom/element.hpp"
#include "coxdom/error.hpp"
#include "coxdom/height.hpp"
#include "coxdom/linalg.hpp"
#include "coxdom/parallel.hpp"
#include "coxdom/report.hpp"
#include "coxdom/rootstore.hpp"
#include "coxdom/scalar.hpp"
