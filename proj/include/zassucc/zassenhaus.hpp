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

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "zassucc/algebra.hpp"
#include "zassucc/fock.hpp"
#include "zassucc/lie.hpp"

namespace zassucc {

enum class ZassenhausMethod { Recursion, ClosedForm };

/// Zassenhaus exponents C_1 .. C_max of exp(X+Y) = exp(X) prod_n exp(C_n),
/// with C_1 = Y.
template <LieElement E> struct ZassenhausSeries {
    std::vector<E> terms; ///< terms[n-1] = C_n
    ZassenhausMethod method = ZassenhausMethod::ClosedForm;

    int max_order() const noexcept { return static_cast<int>(terms.size()); }
    const E &term(int n) const { return terms.at(static_cast<std::size_t>(n - 1)); }
};

namespace detail {

template <typename S> S inverse_factorial(int n) {
    S f(1);
    for (int k = 2; k <= n; ++k) {
        f *= S(k);
    }
    return S(1) / f;
}

template <typename S> S sign(int n) { return (n % 2 == 0) ? S(1) : S(-1); }

} // namespace detail

/// General Zassenhaus recursion (Casas, Murua and Nadinic); uses evaluated
/// commutators only and no property of the pair (x, y):
///   f_{1,n} = sum_{j=1..n} (-1)^n / (j! (n-j)!) ad_y^{n-j} ad_x^j y
///   f_{m,n} = sum_{j=0..[n/m]-1} (-1)^j / j! ad_{C_m}^j f_{m-1, n-mj}
///   C_{n+1} = f_{1,n} / (n+1) for n <= 3, f_{[n/2],n} / (n+1) otherwise.
template <LieElement E> ZassenhausSeries<E> casas_recursion(const E &x, const E &y, int max_order) {
    using S = lie_scalar_t<E>;
    if (max_order < 2) {
        throw std::invalid_argument("casas_recursion: max_order must be >= 2");
    }
    ZassenhausSeries<E> series;
    series.method = ZassenhausMethod::Recursion;
    series.terms.reserve(static_cast<std::size_t>(max_order));
    series.terms.push_back(y);

    // ad_x^j y for j = 0 .. max_order-1
    std::vector<E> ad_x{y};
    for (int j = 1; j < max_order; ++j) {
        ad_x.push_back(commutator(x, ad_x.back()));
    }

    std::map<std::pair<int, int>, E> memo;
    auto f1 = [&](int n) -> E {
        E acc = zero_like(y);
        for (int j = 1; j <= n; ++j) {
            E t = ad_x[static_cast<std::size_t>(j)];
            for (int r = 0; r < n - j; ++r) {
                t = commutator(y, t);
            }
            const S c = detail::sign<S>(n) * detail::inverse_factorial<S>(j) *
                        detail::inverse_factorial<S>(n - j);
            acc = acc + c * t;
        }
        return acc;
    };
    // Recursion on m; C_m for m <= [n/2] is already in series.terms.
    auto f = [&](auto &&self, int m, int n) -> E {
        const auto key = std::make_pair(m, n);
        if (auto it = memo.find(key); it != memo.end()) {
            return it->second;
        }
        E value = zero_like(y);
        if (m == 1) {
            value = f1(n);
        } else {
            const E &cm = series.terms[static_cast<std::size_t>(m - 1)];
            for (int j = 0; j <= n / m - 1; ++j) {
                E t = self(self, m - 1, n - m * j);
                for (int r = 0; r < j; ++r) {
                    t = commutator(cm, t);
                }
                value = value + (detail::sign<S>(j) * detail::inverse_factorial<S>(j)) * t;
            }
        }
        memo.emplace(key, value);
        return value;
    };

    for (int n = 1; n < max_order; ++n) {
        const int m = (n <= 3) ? 1 : n / 2;
        const E fn = f(f, m, n);
        series.terms.push_back(S(1) / S(n + 1) * fn);
    }
    return series;
}

/// C_1 = y, C_n = (-1)^{n-1} / n! ad_x^{n-1} y. Valid only when (x, y) has the
/// no-mixed adjoint property; otherwise the terms are well defined but are not
/// the Zassenhaus exponents.
template <LieElement E> ZassenhausSeries<E> closed_form(const E &x, const E &y, int max_order) {
    using S = lie_scalar_t<E>;
    if (max_order < 1) {
        throw std::invalid_argument("closed_form: max_order must be >= 1");
    }
    ZassenhausSeries<E> series;
    series.method = ZassenhausMethod::ClosedForm;
    E chain = y;
    for (int n = 1; n <= max_order; ++n) {
        if (n > 1) {
            chain = commutator(x, chain);
        }
        series.terms.push_back((detail::sign<S>(n - 1) * detail::inverse_factorial<S>(n)) * chain);
    }
    return series;
}

/// Truncation policy shared by every infinite series in the library.
struct SeriesPolicy {
    double relative_cutoff = 1e-16; ///< stop once ||term|| < cutoff * sum ||previous terms||
    int max_terms = 64;
    int growth_alarm = 5; ///< flag when term norms grow this many orders in a row
};

template <LieElement E> struct SeriesSum {
    E value;
    int terms_used = 0;
    bool truncated_by_cutoff = false;
    bool growth_flagged = false; ///< norms grew for growth_alarm consecutive orders
};

/// Sums C_1 + C_2 + ... with the cutoff of SeriesPolicy.
template <LieElement E>
SeriesSum<E> sum_series(const ZassenhausSeries<E> &s, const SeriesPolicy &policy = {}) {
    if (s.terms.empty()) {
        throw std::invalid_argument("sum_series: empty series");
    }
    SeriesSum<E> out{zero_like(s.terms.front())};
    double accumulated = 0.0;
    double previous = -1.0;
    int growth = 0;
    const int limit = std::min(policy.max_terms, s.max_order());
    for (int n = 1; n <= limit; ++n) {
        const E &term = s.term(n);
        const double norm = lie_norm(term);
        if (n > 1 && norm < policy.relative_cutoff * accumulated) {
            out.truncated_by_cutoff = true;
            break;
        }
        growth = (previous >= 0.0 && norm > previous) ? growth + 1 : 0;
        if (growth >= policy.growth_alarm) {
            out.growth_flagged = true;
        }
        previous = norm;
        out.value = out.value + term;
        accumulated += norm;
        out.terms_used = n;
    }
    return out;
}

/// sum_{n>=1} (-1)^{n-1}/n! ad_x^{n-1} y, generating terms lazily.
template <LieElement E>
SeriesSum<E> sum_closed_form(const E &x, const E &y, const SeriesPolicy &policy = {}) {
    using S = lie_scalar_t<E>;
    SeriesSum<E> out{zero_like(y)};
    double accumulated = 0.0;
    double previous = -1.0;
    int growth = 0;
    E chain = y;
    for (int n = 1; n <= policy.max_terms; ++n) {
        if (n > 1) {
            chain = commutator(x, chain);
        }
        const E term = (detail::sign<S>(n - 1) * detail::inverse_factorial<S>(n)) * chain;
        const double norm = lie_norm(term);
        if (n > 1 && norm < policy.relative_cutoff * accumulated) {
            out.truncated_by_cutoff = true;
            break;
        }
        growth = (previous >= 0.0 && norm > previous) ? growth + 1 : 0;
        if (growth >= policy.growth_alarm) {
            out.growth_flagged = true;
        }
        previous = norm;
        out.value = out.value + term;
        accumulated += norm;
        out.terms_used = n;
    }
    return out;
}

struct DuhamelResult {
    SparseMatrix integral; ///< int_0^1 exp(-tX) Y exp(tX) dt
    SparseMatrix series;   ///< closed-form series evaluated with operator commutators
    double residual = 0.0; ///< ||integral - series||_F
};

/// Gauss-Legendre evaluation of int_0^1 exp(-tX) Y exp(tX) dt, compared with
/// the closed-form series sum evaluated with matrix commutators.
DuhamelResult duhamel_check(const SparseMatrix &x, const SparseMatrix &y, int quad_order = 32);
DuhamelResult duhamel_check(const FockOperator &x, const FockOperator &y, int quad_order = 32);

/// The quadrature half of duhamel_check on its own.
SparseMatrix duhamel_integral(const SparseMatrix &x, const SparseMatrix &y, int quad_order);

} // namespace zassucc
