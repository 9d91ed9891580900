#pragma once

#include "twodist/errors.hpp"
#include "twodist/linalg/eigen.hpp"
#include "twodist/linalg/matrix.hpp"
#include "twodist/linalg/rational.hpp"
#include "twodist/linalg/scalar.hpp"
#include "twodist/linalg/symmetric.hpp"
#include "twodist/graphs/algorithms.hpp"
#include "twodist/graphs/bisection.hpp"
#include "twodist/graphs/canonical.hpp"
#include "twodist/graphs/enumerate.hpp"
#include "twodist/graphs/graph.hpp"
#include "twodist/graphs/graph6.hpp"
#include "twodist/certificates/alpha.hpp"
#include "twodist/certificates/beta.hpp"
#include "twodist/certificates/code.hpp"
#include "twodist/certificates/code_json.hpp"
#include "twodist/certificates/params.hpp"
#include "twodist/certificates/realize.hpp"
#include "twodist/certificates/shift.hpp"
#include "twodist/bounds/bounds.hpp"
#include "twodist/search/search.hpp"
