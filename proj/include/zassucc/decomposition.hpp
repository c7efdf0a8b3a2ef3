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
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "zassucc/params.hpp"

namespace zassucc {

/// Symmetric hollow coupling matrix M (M_ij = nu_{i->j} = mu_ij, M_ii = 0).
class TransferMatrix {
  public:
    /// Throws unless m is square, symmetric and has a zero diagonal.
    explicit TransferMatrix(Eigen::MatrixXd m);
    static TransferMatrix from_params(const ClusterParams &params);

    const Eigen::MatrixXd &matrix() const noexcept { return m_; }
    int size() const noexcept { return static_cast<int>(m_.rows()); }

  private:
    Eigen::MatrixXd m_;
};

/// phi(M) = sum_{k>=0} (-M)^k / (k+1)!, equal to (I - exp(-M)) M^{-1} for
/// invertible M and defined for every M. Evaluated by a truncated Taylor series
/// on M / 2^s followed by s doubling steps
///   phi1(2W) = phi1(W) (exp(W) + I) / 2,  exp(2W) = exp(W)^2.
Eigen::MatrixXd phi_of_m(const TransferMatrix &m);

enum class GeneratorKind { A, B };

/// A_ij (i < j) or B_k, 0-based block indices (second index unused for B).
struct Generator {
    GeneratorKind kind = GeneratorKind::B;
    int i = 0;
    int j = -1;

    static Generator a(int i, int j) { return {GeneratorKind::A, i, j}; }
    static Generator b(int k) { return {GeneratorKind::B, k, -1}; }

    friend bool operator==(const Generator &, const Generator &) = default;
};

struct PlanFactor {
    Generator generator;
    double angle = 0.0;
};

enum class PlanProvenance { N2ClosedForm, PhiMatrix, StarAlgebra };

std::string_view to_string(PlanProvenance p);

/// Ordered finite product prod exp(angle * generator). All A-factors come
/// before all B-factors.
struct DecompositionPlan {
    int n_blocks = 0;
    std::vector<PlanFactor> factors;
    PlanProvenance provenance = PlanProvenance::PhiMatrix;

    int count(GeneratorKind kind) const;
    /// Angle of exp(angle B_k); throws if the plan has no such factor.
    double b_angle(int k) const;
    /// Throws std::logic_error if ordering or count bounds are broken.
    void validate() const;
};

enum class DecomposeMethod { Closed, Phi, Star };

/// exp(X + Y) = prod_{i<j, mu_ij != 0} exp(mu_ij A_ij) prod_k exp(gamma_k B_k)
/// with gamma = phi(M)^T mu. `Closed` uses the sinh/cosh form and requires
/// mu_ij = 0 for every pair other than (0, 1).
DecompositionPlan decompose(const ClusterParams &params, DecomposeMethod method = DecomposeMethod::Phi);

/// gamma_k = (mu . phi(M))_k.
Eigen::VectorXd gamma_angles(const ClusterParams &params);

/// Two-block angles (beta, gamma) of the sinh/cosh closed form.
std::pair<double, double> two_block_angles(double mu12, double mu1, double mu2);

struct ReparamResult {
    Eigen::VectorXd gamma;
    /// (alpha, beta, gamma) = (mu_12, gamma_1, gamma_2) when there are two blocks.
    std::optional<Eigen::Vector3d> alpha_beta_gamma;
};

ReparamResult reparametrize(const ClusterParams &params);

/// Parameter vector layout used by the Jacobian: mu_ij for i<j in
/// lexicographic order, then mu_k.
Eigen::VectorXd flatten(const ClusterParams &params);
ClusterParams unflatten(const Eigen::VectorXd &v, int n_blocks);

struct ReparamJacobian {
    Eigen::MatrixXd jacobian;
    double condition_number = 1.0;
    bool ill_conditioned = false; ///< condition number above 1e8
};

/// Central finite-difference Jacobian of (mu_ij, mu_k) -> (mu_ij, gamma_k).
ReparamJacobian reparam_jacobian(const ClusterParams &params, double step);

/// Symmetric hollow matrix with every off-diagonal entry non-zero and a zero
/// determinant, found by solving det = 0 (a quadratic) for the last coupling.
Eigen::MatrixXd find_singular_coupling(int n_blocks, CounterRng &rng);

std::string plan_to_json(const DecompositionPlan &plan,
                         std::optional<double> residual = std::nullopt);

} // namespace zassucc
