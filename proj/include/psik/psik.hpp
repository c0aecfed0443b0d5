#pragma once

#include "psik/bound_result.hpp"
#include "psik/bounds.hpp"
#include "psik/constants.hpp"
#include "psik/errors.hpp"
#include "psik/field.hpp"
#include "psik/psi_oracle.hpp"
#include "psik/refdata.hpp"
#include "psik/roots.hpp"
#include "psik/selfcheck.hpp"
#include "psik/serialize.hpp"
#include "psik/specfun.hpp"
#include "psik/tables.hpp"
#include "psik/tselect.hpp"
#include "psik/zero_estimates.hpp"
