#pragma once
#include <stdexcept>
#include <string>

namespace detloci {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input errors: the CLI maps all of these to exit code 1.
struct SizeError : Error { using Error::Error; };
struct CharError : Error { using Error::Error; };
struct IndexError : Error { using Error::Error; };
struct SortError : Error { using Error::Error; };
struct EmptyLocusError : Error { using Error::Error; };
using EmptyError = EmptyLocusError;
struct ConsistencyError : Error { using Error::Error; };
struct VariableError : Error { using Error::Error; };
struct GuardError : Error { using Error::Error; };
struct InputError : Error { using Error::Error; };

// Two independent computations disagreed (exit code 2).
struct InternalInconsistency : Error { using Error::Error; };

}  // namespace detloci
