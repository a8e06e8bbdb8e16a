#pragma once

#include "scoremanip/errors.hpp"
#include "scoremanip/election.hpp"
#include "scoremanip/dichotomy.hpp"
#include "scoremanip/manipulation.hpp"
#include "scoremanip/reduction.hpp"
#include "scoremanip/instance_io.hpp"
