// Copyright 2026 the fbaskit developers. Licensed under the Apache License,
// Version 2.0. See the COPYING file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef FBASKIT_ERRORS_HPP
#define FBASKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fbas
{

enum class ErrorCode
{
    kInvalidArgument,
    kMembershipViolation,
    kEmptySliceSet,
    kDuplicateSlice,
    kUnknownNode,
    kThresholdOutOfRange,
    kExpansionTooLarge,
    kKTooLarge,
    kNotATrustCluster,
    kEmptySet,
    kPreconditionViolation,
    kNoQuorumIntersection,
    kInstanceTooLarge,
    kTooManyQuorums,
    kTooManyMaximalDsets,
    kMalformedFormula,
    kPartitionInvalid,
    kParseError,
    kIoError,
};

class Error : public std::runtime_error
{
  public:
    Error(ErrorCode code, std::string const& what)
        : std::runtime_error(what), mCode(code)
    {
    }

    ErrorCode
    code() const
    {
        return mCode;
    }

  private:
    ErrorCode mCode;
};

[[noreturn]] inline void
raise(ErrorCode code, std::string const& what)
{
    throw Error(code, what);
}

} // namespace fbas

#endif
