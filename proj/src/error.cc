// Copyright 2026 The cswitch Authors
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

#include "cswitch/error.h"

namespace cswitch {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIo: return "IoError";
    case ErrorCode::kEmptyCorpus: return "EmptyCorpus";
    case ErrorCode::kLineCountMismatch: return "LineCountMismatch";
    case ErrorCode::kMalformedRow: return "MalformedRow";
    case ErrorCode::kUnknownLanguage: return "UnknownLanguage";
    case ErrorCode::kDuplicateLemma: return "DuplicateLemma";
    case ErrorCode::kTokenTooShort: return "TokenTooShort";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kEmptyMatrix: return "EmptyMatrix";
    case ErrorCode::kMissingResource: return "MissingResource";
    case ErrorCode::kPlanMismatch: return "PlanMismatch";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kHeaderMismatch: return "HeaderMismatch";
    case ErrorCode::kRaggedRow: return "RaggedRow";
    case ErrorCode::kEmptySet: return "EmptySet";
    case ErrorCode::kZeroVector: return "ZeroVector";
    case ErrorCode::kEndpointUnreachable: return "EndpointUnreachable";
    case ErrorCode::kPartialBatchFailure: return "PartialBatchFailure";
    case ErrorCode::kBadResponse: return "BadResponse";
  }
  return "Unknown";
}

}  // namespace cswitch
