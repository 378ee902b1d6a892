#pragma once

#include <stdexcept>
#include <string>

namespace hrc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define HRC_DECLARE_ERROR(Name) \
  class Name : public Error {   \
   public:                      \
    using Error::Error;         \
  }

HRC_DECLARE_ERROR(JointLimitViolation);
HRC_DECLARE_ERROR(NonUnitBone);
HRC_DECLARE_ERROR(DegenerateBone);
HRC_DECLARE_ERROR(DomainError);
HRC_DECLARE_ERROR(UnreachableWaypoint);
HRC_DECLARE_ERROR(InsufficientLength);
HRC_DECLARE_ERROR(ShapeMismatch);
HRC_DECLARE_ERROR(DivergenceError);
HRC_DECLARE_ERROR(InsufficientSamples);
HRC_DECLARE_ERROR(SchemaMismatch);
HRC_DECLARE_ERROR(ConfigError);

#undef HRC_DECLARE_ERROR

}  // namespace hrc
