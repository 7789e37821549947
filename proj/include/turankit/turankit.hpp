#pragma once

// Umbrella header for the turankit library.

#include "turankit/bounds.hpp"
#include "turankit/cache.hpp"
#include "turankit/canonical.hpp"
#include "turankit/certificate.hpp"
#include "turankit/combinatorics.hpp"
#include "turankit/density.hpp"
#include "turankit/enumerate.hpp"
#include "turankit/flag.hpp"
#include "turankit/hypergraph.hpp"
#include "turankit/rational.hpp"
#include "turankit/relations.hpp"
#include "turankit/report.hpp"
#include "turankit/tridiagonal.hpp"
