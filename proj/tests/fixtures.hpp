#pragma once

#include "omegaq/samples.hpp"

namespace fixtures {

using namespace omegaq;
using samples::ArrowPool;
using samples::random_collection;
using samples::two_loops;

} // namespace fixtures
