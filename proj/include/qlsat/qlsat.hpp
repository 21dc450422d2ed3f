#pragma once

/// Umbrella header. Pulls in the whole library: formulas and their
/// enumeration, exact linear algebra over the two supported fields,
/// the three evaluation semantics, satisfiability search, certificates,
/// the formula-space explorer, and the theorem reproduction battery.
///
/// The command layer (commands.hpp) is deliberately left out: it drags
/// in <functional> dispatch plumbing that library users rarely want.
/// Include "qlsat/commands.hpp" directly when building a front end.

#include "qlsat/errors.hpp"
#include "qlsat/rational.hpp"
#include "qlsat/gaussian.hpp"
#include "qlsat/scalar.hpp"
#include "qlsat/matrix.hpp"
#include "qlsat/subspace.hpp"
#include "qlsat/projector.hpp"
#include "qlsat/formula.hpp"
#include "qlsat/enumerate.hpp"
#include "qlsat/random.hpp"
#include "qlsat/semantics.hpp"
#include "qlsat/search.hpp"
#include "qlsat/certificate.hpp"
#include "qlsat/explorer.hpp"
#include "qlsat/reproduce.hpp"
