#pragma once

#include "ohpade/analytic_function.hpp"
#include "ohpade/catalog.hpp"
#include "ohpade/coefficients.hpp"
#include "ohpade/domain.hpp"
#include "ohpade/errors.hpp"
#include "ohpade/experiment.hpp"
#include "ohpade/fit.hpp"
#include "ohpade/hp_solver.hpp"
#include "ohpade/incomplete.hpp"
#include "ohpade/independence.hpp"
#include "ohpade/json_io.hpp"
#include "ohpade/ortho_basis.hpp"
#include "ohpade/poles.hpp"
#include "ohpade/polynomial.hpp"
#include "ohpade/recurrence.hpp"
#include "ohpade/verify.hpp"
