#pragma once

#include "curve.hpp"
#include "error.hpp"
#include "finite_difference.hpp"
#include "frenet.hpp"
#include "involute.hpp"
#include "lorentz.hpp"
#include "mesh.hpp"
#include "random_curves.hpp"
#include "ruled_surface.hpp"
#include "scene.hpp"
#include "synthesis.hpp"
#include "tolerances.hpp"
