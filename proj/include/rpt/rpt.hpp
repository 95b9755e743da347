#ifndef RPT_RPT_HPP
#define RPT_RPT_HPP

#include "errors.hpp"
#include "io.hpp"
#include "laurent_table.hpp"
#include "numeric.hpp"
#include "numerov.hpp"
#include "potential.hpp"
#include "quasi_exact.hpp"
#include "renormalization.hpp"
#include "series.hpp"
#include "sextic_closed_form.hpp"
#include "table1.hpp"
#include "version.hpp"

#endif
