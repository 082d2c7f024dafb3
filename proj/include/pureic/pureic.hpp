// Copyright 2026 The pureic authors
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
//
// Umbrella header: pulls in the whole library.

#ifndef PUREIC_PUREIC_HPP
#define PUREIC_PUREIC_HPP

#include "pureic/bounds.hpp"
#include "pureic/criterion.hpp"
#include "pureic/io.hpp"
#include "pureic/jaming.hpp"
#include "pureic/orthopoly.hpp"
#include "pureic/product4.hpp"
#include "pureic/qlinalg.hpp"
#include "pureic/random.hpp"
#include "pureic/spin1.hpp"
#include "pureic/types.hpp"

#endif  // PUREIC_PUREIC_HPP
