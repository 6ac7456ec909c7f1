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

#ifndef DM_DM_HPP_
#define DM_DM_HPP_

#include "dm/certify.hpp"
#include "dm/delta_matroid.hpp"
#include "dm/element_set.hpp"
#include "dm/enumerate.hpp"
#include "dm/error.hpp"
#include "dm/io.hpp"
#include "dm/matroid.hpp"
#include "dm/minors.hpp"
#include "dm/structure.hpp"

#endif  // DM_DM_HPP_
