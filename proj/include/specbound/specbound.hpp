#ifndef SPECBOUND_SPECBOUND_HPP
#define SPECBOUND_SPECBOUND_HPP

// Umbrella header: spectral upper bounds (ratio, inertia) and certified
// lower bounds on the nonnegative-eigenvalue count of graph weightings.

#include "specbound/bounds.hpp"
#include "specbound/certificate.hpp"
#include "specbound/cli.hpp"
#include "specbound/edge_io.hpp"
#include "specbound/exact.hpp"
#include "specbound/generators.hpp"
#include "specbound/graph.hpp"
#include "specbound/report.hpp"
#include "specbound/rng.hpp"
#include "specbound/scaling.hpp"
#include "specbound/search.hpp"
#include "specbound/spectrum.hpp"
#include "specbound/walks.hpp"
#include "specbound/weighting.hpp"

#endif
