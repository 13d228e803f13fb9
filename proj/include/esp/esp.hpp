/*
 * Copyright 2026 The esp Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * @file esp.hpp
 * @brief Umbrella header.
 */

#pragma once

#include "esp/error.hpp"
#include "esp/ring.hpp"
#include "esp/polynomial.hpp"
#include "esp/ideal.hpp"
#include "esp/matrix.hpp"
#include "esp/symplectic.hpp"
#include "esp/word.hpp"
#include "esp/identities.hpp"
#include "esp/random.hpp"
#include "esp/standard_form.hpp"
#include "esp/relative.hpp"
#include "esp/json_io.hpp"
#include "esp/witness.hpp"
#include "esp/harness.hpp"
