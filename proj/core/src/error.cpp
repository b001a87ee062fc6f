#include "bohl/error.hpp"

namespace bohl {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::invalid_input: return "invalid-input";
    case ErrorKind::hypothesis_not_met: return "hypothesis-not-met";
    case ErrorKind::consistency: return "consistency";
    case ErrorKind::dependent_solutions: return "dependent-solutions";
    case ErrorKind::diagonal_degenerate: return "diagonal-degenerate";
    case ErrorKind::positivity_failure: return "positivity-failure";
    case ErrorKind::singular_system: return "singular-system";
    case ErrorKind::conjugate_dependence: return "conjugate-dependence";
    }
    return "unknown";
}

} // namespace bohl
