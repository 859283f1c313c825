#ifndef DMV_DMV_HPP
#define DMV_DMV_HPP

#include "dmv/canonical.hpp"
#include "dmv/catalog.hpp"
#include "dmv/error.hpp"
#include "dmv/exact_linalg.hpp"
#include "dmv/f2.hpp"
#include "dmv/framed_graph.hpp"
#include "dmv/hopf.hpp"
#include "dmv/invariants.hpp"
#include "dmv/io.hpp"
#include "dmv/moves.hpp"
#include "dmv/rational.hpp"
#include "dmv/ribbon.hpp"
#include "dmv/set_system.hpp"
#include "dmv/symplectic.hpp"

#endif  // DMV_DMV_HPP
