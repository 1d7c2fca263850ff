#pragma once

/* Everything except the JSON helpers, which need nlohmann/json. */

#include "check.hpp"
#include "cyclo.hpp"
#include "errors.hpp"
#include "invariants.hpp"
#include "mock_maass.hpp"
#include "modular_forms.hpp"
#include "qseries.hpp"
#include "rational.hpp"
#include "reference.hpp"
#include "suites.hpp"
#include "sw_geometry.hpp"
