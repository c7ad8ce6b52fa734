// Copyright 2026 The steercoh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Derivative-free optimization kernels: Nelder-Mead, deterministic point sets
// on the sphere, and multi-start maximization over unit 3-vectors.

#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "steercoh/qcore.hpp"

namespace steercoh::opt {

struct NelderMeadOptions {
  double initial_step = 0.1;
  double f_tol = 1e-13;  // spread of simplex values
  double x_tol = 1e-9;   // largest vertex distance from the best vertex
  int max_evaluations = 4000;
  int max_restarts = 4;  // re-inflate the simplex at the optimum
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  int evaluations = 0;
  bool converged = false;
};

using Objective = std::function<double(std::span<const double>)>;

NelderMeadResult nelder_mead_minimize(const Objective& f, std::vector<double> start,
                                      const NelderMeadOptions& opts = {});

// Fibonacci lattice: n nearly uniform unit vectors, spiral ordered from +z.
std::vector<BlochVector> fibonacci_sphere(std::size_t n);

// Additive recurrence with generalized golden ratios in [0,1)^dim. The first
// n terms of the sequence are a prefix of the first m > n terms, so grids
// built from it are nested.
std::vector<double> golden_sequence_point(std::size_t index, std::size_t dim);

// golden_sequence_point(index, 2) mapped area-uniformly onto the sphere.
BlochVector sphere_sequence_point(std::size_t index);

struct SphereSearchOptions {
  std::size_t grid = 512;
  std::size_t refine = 4;             // distinct grid maxima refined by Nelder-Mead
  double min_separation = 0.35;       // radians between refined starts
  NelderMeadOptions nelder_mead{};
};

struct SphereOptimum {
  BlochVector argmax;
  double value = 0.0;
  bool converged = true;
  int evaluations = 0;
};

SphereOptimum maximize_on_sphere(const std::function<double(const BlochVector&)>& f,
                                 const SphereSearchOptions& opts = {});

// Refines a single start point on the sphere in a tangent-plane chart,
// re-centering the chart after every Nelder-Mead run.
SphereOptimum refine_on_sphere(const std::function<double(const BlochVector&)>& f,
                               const BlochVector& start, const NelderMeadOptions& opts = {});

}  // namespace steercoh::opt
