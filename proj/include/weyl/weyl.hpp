#pragma once

// Umbrella header for the library; cli.hpp is separate since it pulls in CLI11.

#include "weyl/centralizer.hpp"
#include "weyl/derivation.hpp"
#include "weyl/errors.hpp"
#include "weyl/graded.hpp"
#include "weyl/io.hpp"
#include "weyl/leading.hpp"
#include "weyl/linalg.hpp"
#include "weyl/oracle.hpp"
#include "weyl/polynomial.hpp"
#include "weyl/rational.hpp"
#include "weyl/weyl_element.hpp"
