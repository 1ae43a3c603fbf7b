// Copyright 2026 The cellmorph Authors. All Rights Reserved.
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

#include "cellmorph/error.h"

namespace cellmorph {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kEmptyRegion: return "EmptyRegion";
    case ErrorCode::kEmptyCollection: return "EmptyCollection";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kFormatError: return "FormatError";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kUnsupportedSegmentation: return "UnsupportedSegmentation";
    case ErrorCode::kDanglingImageRef: return "DanglingImageRef";
    case ErrorCode::kImageTooSmall: return "ImageTooSmall";
    case ErrorCode::kInvalidRect: return "InvalidRect";
    case ErrorCode::kFrameMismatch: return "FrameMismatch";
    case ErrorCode::kMissingScores: return "MissingScores";
    case ErrorCode::kOutOfFrame: return "OutOfFrame";
    case ErrorCode::kPlacementFailure: return "PlacementFailure";
  }
  return "Unknown";
}

}  // namespace cellmorph
