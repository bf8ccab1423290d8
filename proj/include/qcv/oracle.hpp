#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qcv/qfactory.hpp"
#include "qcv/report.hpp"

namespace qcv {

// Combinatorial counting oracles.  These deliberately avoid the series
// engine: partition counts come from bounded-part dynamic programming (no
// pentagonal recurrence) and t-core counts from explicit enumeration of
// partitions with hook-length tests.  cross_validate is the only function
// here that touches series; it exists to compare the two worlds.

struct PartitionTable {
  std::string family;
  std::vector<mpz_class> values;  // values[n], 0 <= n <= max_n
};

// p(n): partitions of n
PartitionTable count_partitions(std::size_t max_n);

// partitions of n into even parts
PartitionTable count_partitions_even(std::size_t max_n);

// a_t(n): partitions of n with no hook length divisible by t.
// Enumerative, so max_n is capped at 60.
PartitionTable count_tcore(long t, std::size_t max_n);

// a(n): partitions where even parts come in two colors
PartitionTable count_cubic(std::size_t max_n);

// Compare an oracle table against the series engine coefficients.
// Supported families: tcore(t), cubic, d.
CheckReport cross_validate(const GeneratingFunctionId& id, std::size_t max_n);

}  // namespace qcv
