// Copyright (c) 2026 sphere-lab contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "spherelab/csv.hpp"
#include "spherelab/defaults.hpp"
#include "spherelab/gamma_sampler.hpp"
#include "spherelab/harness.hpp"
#include "spherelab/limit_laws.hpp"
#include "spherelab/matrix_oracle.hpp"
#include "spherelab/parallel.hpp"
#include "spherelab/rep_sampler.hpp"
#include "spherelab/rng.hpp"
#include "spherelab/specfun.hpp"
#include "spherelab/stats.hpp"
