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

#ifndef CELLMORPH_INGEST_COMPONENTS_H_
#define CELLMORPH_INGEST_COMPONENTS_H_

#include "cellmorph/geometry/binary_mask.h"
#include "cellmorph/ingest/instance_set.h"

namespace cellmorph {

// Splits a flat foreground mask into 8-connected instances. Ids start at 1 and
// follow raster-scan discovery order of each component's first pixel.
InstanceSet ConnectedComponents(const BinaryMask& mask);

}  // namespace cellmorph

#endif  // CELLMORPH_INGEST_COMPONENTS_H_
