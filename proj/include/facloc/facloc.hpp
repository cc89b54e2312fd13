// Copyright 2026 The facloc Authors
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

#ifndef FACLOC_FACLOC_HPP_
#define FACLOC_FACLOC_HPP_

// Umbrella header pulling in the whole library.

#include "facloc/core.hpp"
#include "facloc/error.hpp"
#include "facloc/families.hpp"
#include "facloc/io.hpp"
#include "facloc/mechanisms.hpp"
#include "facloc/objectives.hpp"
#include "facloc/optimum.hpp"
#include "facloc/rational.hpp"
#include "facloc/verify.hpp"

#endif  // FACLOC_FACLOC_HPP_
