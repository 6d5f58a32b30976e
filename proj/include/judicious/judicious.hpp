// Copyright 2026 The Judicious Authors
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

#include "judicious/blowup_solver.hpp"
#include "judicious/certificates.hpp"
#include "judicious/constructions.hpp"
#include "judicious/error.hpp"
#include "judicious/exact_solver.hpp"
#include "judicious/graph.hpp"
#include "judicious/graph_search.hpp"
#include "judicious/heuristics.hpp"
#include "judicious/interval.hpp"
#include "judicious/io.hpp"
#include "judicious/parallel.hpp"
#include "judicious/random.hpp"
#include "judicious/rational.hpp"
#include "judicious/reproduction.hpp"
