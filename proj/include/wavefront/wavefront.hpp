// SPDX-License-Identifier: Apache-2.0
//
// wavefront: physical channel models for large antenna arrays
// Copyright (C) 2026 The wavefront authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef WAVEFRONT_HPP
#define WAVEFRONT_HPP

#include "config.hpp"
#include "estimation.hpp"
#include "geometry.hpp"
#include "io.hpp"
#include "parallel.hpp"
#include "random.hpp"
#include "scenario.hpp"
#include "validity.hpp"
#include "wavemodels.hpp"

#endif
