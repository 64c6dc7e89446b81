#pragma once

#include <hyperrec/scalar.hpp>
#include <hyperrec/polynomial.hpp>
#include <hyperrec/sturm.hpp>
#include <hyperrec/roots.hpp>
#include <hyperrec/recurrence.hpp>
#include <hyperrec/params.hpp>
#include <hyperrec/theta_frame.hpp>
#include <hyperrec/gn_solver.hpp>
#include <hyperrec/analysis.hpp>
