#pragma once

/// Umbrella header: surface wave reconstruction from bed pressure over a
/// prescribed shear flow.

#include "presurf/cli.hpp"
#include "presurf/closed_forms.hpp"
#include "presurf/csv_io.hpp"
#include "presurf/differentiate.hpp"
#include "presurf/errors.hpp"
#include "presurf/exact_relation.hpp"
#include "presurf/fourier.hpp"
#include "presurf/grid.hpp"
#include "presurf/ode.hpp"
#include "presurf/quadrature.hpp"
#include "presurf/rayleigh.hpp"
#include "presurf/root_find.hpp"
#include "presurf/shear.hpp"
#include "presurf/solitary.hpp"
#include "presurf/spline.hpp"
#include "presurf/stokes.hpp"
