// Copyright 2026 The uinterp Authors
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

// Umbrella header pulling in the whole library.

#pragma once

#include "uinterp/catalog.hpp"
#include "uinterp/cycle_graph.hpp"
#include "uinterp/cyclic_subgroup.hpp"
#include "uinterp/errors.hpp"
#include "uinterp/generator.hpp"
#include "uinterp/interpolation.hpp"
#include "uinterp/landau.hpp"
#include "uinterp/matrix.hpp"
#include "uinterp/permutation.hpp"
#include "uinterp/prng.hpp"
#include "uinterp/serialize.hpp"
#include "uinterp/tolerance.hpp"
#include "uinterp/verify.hpp"
