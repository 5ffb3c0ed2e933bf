#pragma once

#include "galring/arith/sampler.hpp"

namespace galring::testing {

using Gen = galring::Sampler;

}  // namespace galring::testing
