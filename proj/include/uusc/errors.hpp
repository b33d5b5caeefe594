#pragma once
#include <stdexcept>
#include <string>

namespace uusc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidParams : Error {
    using Error::Error;
};

struct InstanceTooLarge : Error {
    using Error::Error;
};

struct BudgetExceeded : Error {
    using Error::Error;
};

struct InvalidSeedPacking : Error {
    using Error::Error;
};

struct PreconditionViolated : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

} // namespace uusc
