#pragma once

#include "maxfock/constants.hpp"
#include "maxfock/dynamics.hpp"
#include "maxfock/errors.hpp"
#include "maxfock/fidelity.hpp"
#include "maxfock/fock.hpp"
#include "maxfock/grid.hpp"
#include "maxfock/kernels.hpp"
#include "maxfock/maps.hpp"
#include "maxfock/random.hpp"
#include "maxfock/representations.hpp"
#include "maxfock/snapshot_io.hpp"
#include "maxfock/spectral_ops.hpp"
#include "maxfock/transforms.hpp"
