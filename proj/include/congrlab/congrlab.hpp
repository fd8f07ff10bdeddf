#pragma once

#include "congrlab/arith.hpp"
#include "congrlab/bound_check.hpp"
#include "congrlab/chars.hpp"
#include "congrlab/count.hpp"
#include "congrlab/errors.hpp"
#include "congrlab/farey.hpp"
#include "congrlab/harness.hpp"
#include "congrlab/lat2.hpp"
#include "congrlab/msets.hpp"
