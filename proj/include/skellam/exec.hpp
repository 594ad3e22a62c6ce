#pragma once

namespace skellam {

/// Execution strategy for the data-parallel kernels. Serial is the reference
/// implementation; Parallel uses OpenMP when compiled in and must produce
/// identical results.
enum class ExecMode { Serial, Parallel };

} // namespace skellam
