// Copyright 2026 The zassucc Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "zassucc/algebra.hpp"

namespace zassucc {

AlgebraElement cluster_x(const ClusterParams &params) {
    const int n = params.n_blocks();
    AlgebraElement x(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            x.a(i, j) = params.pair(i, j);
        }
    }
    return x;
}

AlgebraElement cluster_y(const ClusterParams &params) {
    AlgebraElement y(params.n_blocks());
    for (int k = 0; k < params.n_blocks(); ++k) {
        y.b(k) = params.single(k);
    }
    return y;
}

AlgebraElement to_double(const ExactAlgebraElement &e) {
    const int n = e.n_blocks();
    AlgebraElement out(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            out.a(i, j) = static_cast<double>(e.a(i, j));
        }
        out.b(i) = static_cast<double>(e.b(i));
    }
    return out;
}

} // namespace zassucc
