#pragma once

#include "casimir/constants.hpp"
#include "casimir/core.hpp"
#include "casimir/dielectric.hpp"
#include "casimir/edge.hpp"
#include "casimir/errors.hpp"
#include "casimir/experiment.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/reflection.hpp"
#include "casimir/specfun.hpp"
#include "casimir/tilt.hpp"
