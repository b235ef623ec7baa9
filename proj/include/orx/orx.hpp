// Copyright 2026 The orx Authors
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

/// Umbrella header for the orx library.

#pragma once

#include "orx/bench.hpp"
#include "orx/csv.hpp"
#include "orx/linalg.hpp"
#include "orx/metrics.hpp"
#include "orx/orlr.hpp"
#include "orx/orpca.hpp"
#include "orx/proxreg.hpp"
#include "orx/random.hpp"
#include "orx/rpca.hpp"
#include "orx/synth.hpp"
#include "orx/types.hpp"
