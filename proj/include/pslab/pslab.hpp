#pragma once

#include "pslab/bigint.hpp"
#include "pslab/core.hpp"
#include "pslab/energy.hpp"
#include "pslab/errors.hpp"
#include "pslab/io.hpp"
#include "pslab/montecarlo.hpp"
#include "pslab/productset.hpp"
#include "pslab/rankin.hpp"
#include "pslab/sampler.hpp"
