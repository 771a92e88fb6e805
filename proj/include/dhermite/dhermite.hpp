#pragma once

#include "dhermite/alpha.hpp"
#include "dhermite/deformation.hpp"
#include "dhermite/io.hpp"
#include "dhermite/matrix.hpp"
#include "dhermite/measure.hpp"
#include "dhermite/ode.hpp"
#include "dhermite/orthogonal.hpp"
#include "dhermite/polynomial.hpp"
#include "dhermite/rational.hpp"
#include "dhermite/verify.hpp"
