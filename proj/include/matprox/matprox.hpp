// Copyright 2026 The Authors.
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


// Everything.

#ifndef MATPROX_MATPROX_HPP
#define MATPROX_MATPROX_HPP

#include "matprox/constructions.hpp"
#include "matprox/element_set.hpp"
#include "matprox/io.hpp"
#include "matprox/labels.hpp"
#include "matprox/matroid.hpp"
#include "matprox/multilabel.hpp"
#include "matprox/parallel.hpp"
#include "matprox/proximity.hpp"
#include "matprox/random.hpp"
#include "matprox/satgen.hpp"
#include "matprox/sibo.hpp"
#include "matprox/solver.hpp"

#endif  // MATPROX_MATPROX_HPP
