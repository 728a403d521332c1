#pragma once

#include "cdkit/error.hpp"
#include "cdkit/polynomial.hpp"
#include "cdkit/complex.hpp"
#include "cdkit/homology.hpp"
#include "cdkit/invariants.hpp"
#include "cdkit/generators.hpp"
#include "cdkit/io.hpp"
#include "cdkit/verify.hpp"
#include "cdkit/report.hpp"
#include "cdkit/census.hpp"
