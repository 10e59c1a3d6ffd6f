#pragma once

// Umbrella header: the whole library except the CLI front end.

#include "a1weyl/checked_int.hpp"
#include "a1weyl/lattice.hpp"
#include "a1weyl/core.hpp"
#include "a1weyl/height.hpp"
#include "a1weyl/length.hpp"
#include "a1weyl/basis.hpp"
#include "a1weyl/oracle.hpp"
