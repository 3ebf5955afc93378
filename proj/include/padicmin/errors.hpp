// Copyright 2026 The padicmin Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PADICMIN_ERRORS_HPP
#define PADICMIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace padicmin {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

#define PADICMIN_DEFINE_ERROR(Name)     \
  class Name : public Error {           \
  public:                               \
    using Error::Error;                 \
  }

PADICMIN_DEFINE_ERROR(InvalidArgument);
PADICMIN_DEFINE_ERROR(NotAUnit);
PADICMIN_DEFINE_ERROR(ConstantTermNotUnit);
PADICMIN_DEFINE_ERROR(UnsupportedPrime);
PADICMIN_DEFINE_ERROR(NotNormalized);
PADICMIN_DEFINE_ERROR(PreconditionViolated);
PADICMIN_DEFINE_ERROR(FamilyTooLarge);
PADICMIN_DEFINE_ERROR(ParseError);

#undef PADICMIN_DEFINE_ERROR

}  // namespace padicmin

#endif  // PADICMIN_ERRORS_HPP
