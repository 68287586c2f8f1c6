#pragma once

// Umbrella for the brute-force finite-group engine.

#include "hall/engine/field.hpp"     // IWYU pragma: export
#include "hall/engine/group.hpp"     // IWYU pragma: export
#include "hall/engine/subgroup.hpp"  // IWYU pragma: export
#include "hall/engine/hall.hpp"      // IWYU pragma: export
#include "hall/engine/identify.hpp"  // IWYU pragma: export
