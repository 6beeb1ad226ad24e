#pragma once

#include "liouville/a_spec.hpp"
#include "liouville/arith_core.hpp"
#include "liouville/cache_file.hpp"
#include "liouville/dirichlet.hpp"
#include "liouville/errors.hpp"
#include "liouville/experiments.hpp"
#include "liouville/numeric.hpp"
#include "liouville/regression.hpp"
#include "liouville/report_io.hpp"
#include "liouville/stepquad.hpp"
#include "liouville/summatory.hpp"
#include "liouville/verify.hpp"
#include "liouville/version.hpp"
#include "liouville/zeta.hpp"
