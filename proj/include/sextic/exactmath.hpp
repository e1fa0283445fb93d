#pragma once

#include "sextic/exactmath/factor.hpp"
#include "sextic/exactmath/identity.hpp"
#include "sextic/exactmath/integer.hpp"
#include "sextic/exactmath/matrix.hpp"
#include "sextic/exactmath/modp.hpp"
#include "sextic/exactmath/poly.hpp"
#include "sextic/exactmath/resultant.hpp"
