#pragma once

// Umbrella header for the octaudit library: exact arithmetic for generalized
// octonion algebras O(alpha, beta, gamma) over the rationals, the Fibonacci /
// Lucas / Horadam / generalized Fibonacci-Lucas sequence engines, and the
// audit suites that re-verify the identity catalog, the closed-form norms,
// the split/division classification, and the generated module structure.

#include <octaudit/audit.hpp>
#include <octaudit/classification.hpp>
#include <octaudit/expr.hpp>
#include <octaudit/fib_octonions.hpp>
#include <octaudit/gfl_octonions.hpp>
#include <octaudit/octonion.hpp>
#include <octaudit/rational.hpp>
#include <octaudit/report_io.hpp>
#include <octaudit/sampling.hpp>
#include <octaudit/sequences.hpp>
