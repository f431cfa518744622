#pragma once

#include "pdm1d/bands.hpp"
#include "pdm1d/barrier.hpp"
#include "pdm1d/constants.hpp"
#include "pdm1d/errors.hpp"
#include "pdm1d/ordering.hpp"
#include "pdm1d/scattering.hpp"
#include "pdm1d/step.hpp"
#include "pdm1d/structure.hpp"
#include "pdm1d/transfer.hpp"
#include "pdm1d/wavenumber.hpp"
#include "pdm1d/well.hpp"
