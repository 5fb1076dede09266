// Copyright 2026 The emotraj authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EMOTRAJ_ERRORS_HPP_
#define EMOTRAJ_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace emotraj
{

/// Base class of every domain error thrown by this library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

#define EMOTRAJ_DEFINE_ERROR(NAME)        \
  class NAME : public Error               \
  {                                       \
  public:                                 \
    using Error::Error;                   \
  }

EMOTRAJ_DEFINE_ERROR(DegenerateTrajectory);  // too few distinct waypoints
EMOTRAJ_DEFINE_ERROR(LengthMismatch);        // paired point sequences differ in length
EMOTRAJ_DEFINE_ERROR(InvalidGate);           // non-positive accuracy gate
EMOTRAJ_DEFINE_ERROR(InvalidBox);            // inverted or non-finite box coordinates
EMOTRAJ_DEFINE_ERROR(UnknownLabel);          // scored emotion label missing from the VAD map
EMOTRAJ_DEFINE_ERROR(ZeroMass);              // emotion distribution sums to zero
EMOTRAJ_DEFINE_ERROR(EmptyCorpus);           // idf requested over an empty corpus
EMOTRAJ_DEFINE_ERROR(InvalidAlpha);          // fusion weight outside [0, 1]
EMOTRAJ_DEFINE_ERROR(EmptyVariants);         // augmented command set without variants
EMOTRAJ_DEFINE_ERROR(NonFiniteInput);        // NaN or infinity where a finite value is required
EMOTRAJ_DEFINE_ERROR(MissingTrajectory);     // preference pair references an absent trajectory
EMOTRAJ_DEFINE_ERROR(InvalidDimensions);     // non-positive image width or height
EMOTRAJ_DEFINE_ERROR(ZeroCentroid);          // direction of the origin is undefined
EMOTRAJ_DEFINE_ERROR(IdMismatch);            // record id sets of joined inputs differ
EMOTRAJ_DEFINE_ERROR(DegenerateInput);       // constant or too-short column for rank statistics
EMOTRAJ_DEFINE_ERROR(ZeroBaseline);          // reduction/improvement against a zero baseline
EMOTRAJ_DEFINE_ERROR(ConfigError);           // run configuration violates a precondition
EMOTRAJ_DEFINE_ERROR(ParseError);            // malformed input file or record

#undef EMOTRAJ_DEFINE_ERROR

}  // namespace emotraj

#endif  // EMOTRAJ_ERRORS_HPP_
