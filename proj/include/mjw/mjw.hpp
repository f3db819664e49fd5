#pragma once

#include "mjw/errors.hpp"
#include "mjw/spectral.hpp"
#include "mjw/weight.hpp"
#include "mjw/ortho_oracle.hpp"
#include "mjw/bessel.hpp"
#include "mjw/szego.hpp"
#include "mjw/asymptotics.hpp"
#include "mjw/convergence.hpp"
