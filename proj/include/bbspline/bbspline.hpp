#pragma once

#include "bbspline/opcount.hpp"
#include "bbspline/bernstein.hpp"
#include "bbspline/knots.hpp"
#include "bbspline/bbf.hpp"
#include "bbspline/uniform.hpp"
#include "bbspline/geometry.hpp"
#include "bbspline/oracle.hpp"
#include "bbspline/diff_recurrence.hpp"
#include "bbspline/curve.hpp"
#include "bbspline/surface.hpp"
#include "bbspline/io.hpp"
#include "bbspline/bench.hpp"
