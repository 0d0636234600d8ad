// Copyright 2026 The qcs Authors
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

#ifndef QCS_ERROR_H
#define QCS_ERROR_H

#include <stdexcept>
#include <string>
#include <string_view>

namespace qcs {

enum class Errc {
    NonHermitian,
    NonUnitary,
    NotNormalized,
    DimensionMismatch,
    OutOfDomain,
    DomainGap,
    BadSpec,
    DomainMismatch,
    NotInjective,
    DistributionMismatch,
    ValueNotInSupport,
    LabelOnBreakpoint,
    NotABarrier,
    NotAResolution,
    NotMonotone,
    UndefinedEquivalence,
    EmptySample,
    SchemaError,
    IoError,
};

std::string_view errc_name(Errc code);

/// Every failure raised by the library carries one of the `Errc` kinds so
/// callers (and the CLI's exit-code mapping) can dispatch without parsing text.
class Error : public std::runtime_error {
   public:
    Error(Errc code, const std::string &message);

    Errc code() const noexcept {
        return code_;
    }

   private:
    Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string &message);

}  // namespace qcs

#endif
