// Copyright 2026 The cartesian-codes Authors.
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

#pragma once

#include "cartesian/arith.hpp"
#include "cartesian/code_core.hpp"
#include "cartesian/constructions.hpp"
#include "cartesian/error.hpp"
#include "cartesian/finite_field.hpp"
#include "cartesian/grid.hpp"
#include "cartesian/linalg.hpp"
#include "cartesian/multipoly.hpp"
#include "cartesian/oracle.hpp"
#include "cartesian/params.hpp"
#include "cartesian/set_expression.hpp"
