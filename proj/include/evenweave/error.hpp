#ifndef EVENWEAVE_ERROR_HPP
#define EVENWEAVE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace evenweave
{

struct Error : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

/// Precondition violated by the caller (bad parameters, mismatched domains).
struct InvalidArgument : Error
{
    using Error::Error;
};

/// A construction could not be completed (e.g. a bounded search ran out of budget).
struct ConstructionError : Error
{
    using Error::Error;
};

} // namespace evenweave

#endif
