// Copyright 2026 The Qontic Authors
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

#include "qontic/bitvec.hpp"
#include "qontic/circuit.hpp"
#include "qontic/context.hpp"
#include "qontic/demo.hpp"
#include "qontic/errors.hpp"
#include "qontic/oracle.hpp"
#include "qontic/pauli.hpp"
#include "qontic/rng.hpp"
#include "qontic/selftest.hpp"
