#pragma once

// Umbrella header: exact q-series and theta-function kernel, modular forms,
// the universal characteristic-form ring with its transgressed families,
// the cancellation derivations, the floating-point theta kernel, and the
// verification suites.

#include "transverify/cancel.hpp"
#include "transverify/charring.hpp"
#include "transverify/cyclo.hpp"
#include "transverify/json_io.hpp"
#include "transverify/modforms.hpp"
#include "transverify/numeval.hpp"
#include "transverify/phiforms.hpp"
#include "transverify/qexp.hpp"
#include "transverify/rational.hpp"
#include "transverify/report.hpp"
#include "transverify/scalar.hpp"
#include "transverify/suites.hpp"
#include "transverify/theta.hpp"
#include "transverify/transgress.hpp"
#include "transverify/yseries.hpp"
