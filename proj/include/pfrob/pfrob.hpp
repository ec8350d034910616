#pragma once

// umbrella header

#include "pfrob/apery.hpp"
#include "pfrob/bernoulli.hpp"
#include "pfrob/denumerant.hpp"
#include "pfrob/errors.hpp"
#include "pfrob/eulerian.hpp"
#include "pfrob/generators.hpp"
#include "pfrob/lambda_spec.hpp"
#include "pfrob/number_field.hpp"
#include "pfrob/oracle.hpp"
#include "pfrob/power_sums.hpp"
#include "pfrob/rational.hpp"
#include "pfrob/serialization.hpp"
#include "pfrob/weighted_sums.hpp"

namespace pfrob {
// library version
inline constexpr const char* kVersion = "1.0.0";
}  // namespace pfrob
