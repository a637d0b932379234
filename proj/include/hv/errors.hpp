// Copyright 2026 The hv Authors - All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HV_ERRORS_HPP
#define HV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hv {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define HV_DEFINE_ERROR(Name)            \
  class Name : public Error {            \
   public:                               \
    explicit Name(const std::string &w)  \
        : Error(std::string(#Name ": ") + w) {} \
  }

HV_DEFINE_ERROR(DimensionMismatch);
HV_DEFINE_ERROR(NotSameRay);
HV_DEFINE_ERROR(NotHermitian);
HV_DEFINE_ERROR(EigSolverFailure);
HV_DEFINE_ERROR(NotProjector);
HV_DEFINE_ERROR(NotAResolution);
HV_DEFINE_ERROR(NotOrthogonal);
HV_DEFINE_ERROR(InvalidContext);
HV_DEFINE_ERROR(QuadratureFailure);
HV_DEFINE_ERROR(StepTooLarge);
HV_DEFINE_ERROR(NotComplexOrConjugateLinear);
HV_DEFINE_ERROR(PhaseNotOrbitConstant);
HV_DEFINE_ERROR(GaugeMismatch);
HV_DEFINE_ERROR(IncompatibleFamily);
HV_DEFINE_ERROR(NeedsDimensionThree);
HV_DEFINE_ERROR(NoSharedVector);
HV_DEFINE_ERROR(ConfigInvalid);

#undef HV_DEFINE_ERROR

}  // namespace hv

#endif  // HV_ERRORS_HPP
