// Copyright 2026 The schatten authors
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

#include <atomic>
#include <thread>
#include <vector>

#include "core/embedding.hpp"
#include "core/moi.hpp"
#include "core/obstruction.hpp"
#include "core/pnorm.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace schatten;

TEST_CASE("concurrent invocation is safe and bit-deterministic") {
  Rng rng(31415);
  const Matrix a = test::random_hermitian(5, rng);
  const Matrix b = test::random_hermitian(5, rng);
  const Matrix t = test::random_complex(4, 6, rng);

  struct Results {
    double norm_half = 0, norm_two = 0, d2 = 0, verify = 0;
    Matrix reconstruction;
  };
  auto compute = [&]() {
    Results r;
    r.norm_half = schatten_norm(t, 0.5);
    r.norm_two = schatten_norm(t, 2.0);
    r.d2 = second_derivative_schatten(a, b, 2.5);
    r.verify = verify_isometry(first_row_embedding(2, 3.0), 50, 7, 1e-9)
                   .max_relative_residual;
    const Spectrum spec = hermitian_eig(a);
    r.reconstruction = Matrix::Zero(spec.dim, spec.dim);
    for (size_t i = 0; i < spec.eigenvalues.size(); ++i)
      r.reconstruction += spec.eigenvalues[i] * spec.projectors[i];
    return r;
  };

  const Results serial = compute();

  std::atomic<int> mismatches{0};
  std::vector<std::thread> workers;
  for (int w = 0; w < 8; ++w) {
    workers.emplace_back([&] {
      for (int repeat = 0; repeat < 5; ++repeat) {
        const Results local = compute();
        if (local.norm_half != serial.norm_half || local.norm_two != serial.norm_two ||
            local.d2 != serial.d2 || local.verify != serial.verify ||
            (local.reconstruction - serial.reconstruction).norm() != 0.0)
          ++mismatches;
      }
    });
  }
  for (std::thread& worker : workers) worker.join();
  CHECK(mismatches.load() == 0);
}
