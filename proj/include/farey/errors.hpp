// Copyright 2026 The Farey Mosaics Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace farey {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define FAREY_DEFINE_ERROR(Name)           \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  }

FAREY_DEFINE_ERROR(RangeError);
FAREY_DEFINE_ERROR(DomainError);
FAREY_DEFINE_ERROR(OverlapError);
FAREY_DEFINE_ERROR(BudgetError);
FAREY_DEFINE_ERROR(SizeError);
FAREY_DEFINE_ERROR(AmbiguityError);
FAREY_DEFINE_ERROR(ShapeError);
FAREY_DEFINE_ERROR(PartnerMissing);
FAREY_DEFINE_ERROR(ParseError);

#undef FAREY_DEFINE_ERROR

}  // namespace farey
