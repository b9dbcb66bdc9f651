// Copyright 2026 The symratio Authors
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

#ifndef SYMRATIO_SYMRATIO_HPP_
#define SYMRATIO_SYMRATIO_HPP_

#include "symratio/aut_search.hpp"
#include "symratio/er_model.hpp"
#include "symratio/errors.hpp"
#include "symratio/graph.hpp"
#include "symratio/identity.hpp"
#include "symratio/numeric.hpp"
#include "symratio/orbits.hpp"
#include "symratio/perm_group.hpp"
#include "symratio/random.hpp"
#include "symratio/reconstruction.hpp"

#endif  // SYMRATIO_SYMRATIO_HPP_
