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
#include "zassucc/zassenhaus.hpp"

#include "zassucc/kernels.hpp"
#include "zassucc/linalg.hpp"

namespace zassucc {

SparseMatrix commutator(const SparseMatrix &a, const SparseMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("commutator: shape mismatch");
    }
    SparseMatrix out = kernels::parallel::spgemm(a, b) - kernels::parallel::spgemm(b, a);
    out.prune(cplx(0.0, 0.0), 0.0);
    return out;
}

double lie_norm(const SparseMatrix &a) { return a.norm(); }

SparseMatrix zero_like(const SparseMatrix &a) { return SparseMatrix(a.rows(), a.cols()); }

SparseMatrix duhamel_integral(const SparseMatrix &x, const SparseMatrix &y, int quad_order) {
    if (x.rows() != y.rows() || x.cols() != y.cols() || x.rows() != x.cols()) {
        throw std::invalid_argument("duhamel_integral: operators must be square with equal shape");
    }
    const Quadrature q = gauss_legendre(quad_order);
    const InvariantBlocks blocks{x, y};
    std::vector<Eigen::Triplet<cplx>> triplets;
    for (std::size_t b = 0; b < blocks.blocks().size(); ++b) {
        const Eigen::MatrixXcd yb = blocks.extract(y, b);
        if (yb.isZero(0.0)) {
            continue;
        }
        const Eigen::MatrixXcd xb = blocks.extract(x, b);
        if (xb.isZero(0.0)) {
            blocks.scatter(yb, b, triplets);
            continue;
        }
        const auto integrand = [&xb, &yb](double t) -> Eigen::MatrixXcd {
            const Eigen::MatrixXcd minus = -t * xb;
            const Eigen::MatrixXcd plus = t * xb;
            return expm(minus) * yb * expm(plus);
        };
        blocks.scatter(kernels::parallel::integrate(q.nodes, q.weights, integrand), b, triplets);
    }
    SparseMatrix out(x.rows(), x.cols());
    out.setFromTriplets(triplets.begin(), triplets.end());
    out.makeCompressed();
    return out;
}

DuhamelResult duhamel_check(const SparseMatrix &x, const SparseMatrix &y, int quad_order) {
    if (quad_order < 2) {
        throw std::invalid_argument("duhamel_check: quadrature order must be >= 2");
    }
    DuhamelResult r;
    r.integral = duhamel_integral(x, y, quad_order);
    r.series = sum_closed_form(x, y).value;
    r.residual = SparseMatrix(r.integral - r.series).norm();
    return r;
}

DuhamelResult duhamel_check(const FockOperator &x, const FockOperator &y, int quad_order) {
    x.check_compatible(y);
    return duhamel_check(x.matrix(), y.matrix(), quad_order);
}

} // namespace zassucc
