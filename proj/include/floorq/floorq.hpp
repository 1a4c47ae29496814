// floorq.hpp — umbrella header for the a-floor quotient order library.

#pragma once

#include "core.hpp"
#include "intervals.hpp"
#include "semigroup.hpp"
#include "moebius.hpp"
#include "analytics.hpp"
