#ifndef DEFLOG_OPTIONS_HPP
#define DEFLOG_OPTIONS_HPP

#include <cstddef>

namespace deflog {

/// Resource guard for the exponential searches. Exceeding max_theory_size
/// raises TheoryTooLargeError instead of silently truncating.
struct EngineLimits {
    std::size_t max_theory_size = 24;
};

} // namespace deflog

#endif
