#pragma once

namespace dplf {

// Enumeration kernels come in two flavors: a serial reference and an
// OpenMP-parallel version. Tests assert they produce identical results;
// the benchmark binary times them against each other.
enum class ExecPolicy { Serial, Parallel };

}  // namespace dplf
