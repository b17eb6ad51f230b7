#pragma once

#include "lattice.hpp"
#include "subdivision.hpp"
#include "path.hpp"
#include "winding.hpp"
#include "homotopy.hpp"
#include "map_homotopy.hpp"
#include "cover.hpp"
#include "oracle.hpp"
#include "dc_example.hpp"
#include "io.hpp"
#include "svg.hpp"
