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

#include "qcs/error.h"

namespace qcs {

std::string_view errc_name(Errc code) {
    switch (code) {
        case Errc::NonHermitian:
            return "NonHermitian";
        case Errc::NonUnitary:
            return "NonUnitary";
        case Errc::NotNormalized:
            return "NotNormalized";
        case Errc::DimensionMismatch:
            return "DimensionMismatch";
        case Errc::OutOfDomain:
            return "OutOfDomain";
        case Errc::DomainGap:
            return "DomainGap";
        case Errc::BadSpec:
            return "BadSpec";
        case Errc::DomainMismatch:
            return "DomainMismatch";
        case Errc::NotInjective:
            return "NotInjective";
        case Errc::DistributionMismatch:
            return "DistributionMismatch";
        case Errc::ValueNotInSupport:
            return "ValueNotInSupport";
        case Errc::LabelOnBreakpoint:
            return "LabelOnBreakpoint";
        case Errc::NotABarrier:
            return "NotABarrier";
        case Errc::NotAResolution:
            return "NotAResolution";
        case Errc::NotMonotone:
            return "NotMonotone";
        case Errc::UndefinedEquivalence:
            return "UndefinedEquivalence";
        case Errc::EmptySample:
            return "EmptySample";
        case Errc::SchemaError:
            return "SchemaError";
        case Errc::IoError:
            return "IoError";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string &message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {
}

void fail(Errc code, const std::string &message) {
    throw Error(code, message);
}

}  // namespace qcs
