#ifndef SUPERTOUGH_SUPERTOUGH_HPP_
#define SUPERTOUGH_SUPERTOUGH_HPP_

#include "supertough/canonical.hpp"
#include "supertough/census.hpp"
#include "supertough/certificates.hpp"
#include "supertough/connectivity.hpp"
#include "supertough/cutsets.hpp"
#include "supertough/dot.hpp"
#include "supertough/enumerate.hpp"
#include "supertough/formats.hpp"
#include "supertough/generators.hpp"
#include "supertough/graph.hpp"
#include "supertough/independence.hpp"
#include "supertough/parallel.hpp"
#include "supertough/rational.hpp"
#include "supertough/stars.hpp"
#include "supertough/toughness.hpp"
#include "supertough/verify.hpp"
#include "supertough/vertex_set.hpp"

#endif  // SUPERTOUGH_SUPERTOUGH_HPP_
