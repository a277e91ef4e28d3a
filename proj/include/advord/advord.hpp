#pragma once

// Umbrella header for the order-verification library.

#include "advord/analysis.hpp"
#include "advord/config.hpp"
#include "advord/emit.hpp"
#include "advord/errmodel.hpp"
#include "advord/field.hpp"
#include "advord/format.hpp"
#include "advord/grid.hpp"
#include "advord/linalg.hpp"
#include "advord/manufactured.hpp"
#include "advord/march.hpp"
#include "advord/presets.hpp"
#include "advord/run.hpp"
#include "advord/scheme.hpp"
