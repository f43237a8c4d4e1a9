#pragma once

#include "lambdajc/block.hpp"
#include "lambdajc/coherent.hpp"
#include "lambdajc/cubic.hpp"
#include "lambdajc/errors.hpp"
#include "lambdajc/model.hpp"
#include "lambdajc/nonlinearity.hpp"
#include "lambdajc/observables.hpp"
#include "lambdajc/oracle.hpp"
#include "lambdajc/phase_entropy.hpp"
#include "lambdajc/state.hpp"
#include "lambdajc/sweep.hpp"
