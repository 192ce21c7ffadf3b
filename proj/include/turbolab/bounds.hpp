// Copyright 2026 The turbolab Authors
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

#ifndef TURBOLAB_BOUNDS_HPP
#define TURBOLAB_BOUNDS_HPP

// Counting bounds on inner and outer weight distributions and on the
// probability that a random interleaver yields a low-weight turbo codeword.
// Everything is exact integer or rational arithmetic except the llog
// comparison, which uses outward-rounded MPFR intervals.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "turbolab/encoders.hpp"
#include "turbolab/spectra.hpp"

namespace turbolab {

/// binom(u, v); 0 when v < 0 or v > u.
mpz_class binomial(long u, long v);

/// Rational upper bound for e used when replacing binom(u,v) by (u e / v)^v.
mpq_class e_upper();

/// 2^m 2^w (|P|-1)^w binom(kN+1, floor(w/2)+1) binom(eta k (w+d)+1, ceil(w/2)).
mpz_class theorem_inner_bound(int m, int k, int w, int d, int N, int eta, int p_size);

struct InnerParams {
    int m = 0;
    int k = 0;
    int eta = 1;
    int p_size = 2;
};

/// A closed-form inner bound evaluated three ways: the binomial form it comes from,
/// the same expression with each binomial replaced by (u e / v)^v, and the
/// growth exponents of N (the explicit one from the substitution and the
/// nominal one of the asymptotic statement).
struct BoundReport {
    std::string name;
    mpz_class binomial_value;
    mpq_class explicit_value;
    int explicit_n_exponent = 0;
    mpq_class nominal_n_exponent;
};

/// Bound 1I for a recursive seed with parameters `seed`.
BoundReport bound_1I(const InnerParams& seed, int w, int d, int N);

/// Bound 2I: theorem_inner_bound applied to the truncated decoder, whose
/// information block has n letters and whose speed is `decoder.eta`. The
/// roles of w and d are exchanged. `decoder.k` must hold n.
BoundReport bound_2I(const InnerParams& decoder, int w, int d, int N);

struct Bound1E {
    /// sum_{j=1}^{J} |P|^{nj} binom(N, j), J = floor((d - d_c)/d_q) + 1.
    mpz_class sum;
    /// J |P|^{nJ} binom(N, J).
    mpz_class majorized;
    int j_max = 0;
};

/// Both forms are 0 when d < d_c.
Bound1E bound_1E(int n, int d_c, int d_q, int p_size, int d, int N);

struct ConstantC {
    /// c_i = |C_i| / ((|P|-1)^i binom(n, i)) for i = 0..n.
    std::vector<mpq_class> c;
    /// i maximizing c_i^(1/i) over 1 <= i <= n.
    int argmax = 1;
    /// Rational r with c <= r, tight to 2^-40.
    mpq_class upper;
};

/// Requires |P| > 2 and d_q >= 2; throws std::invalid_argument otherwise.
ConstantC constant_c(const BlockEncoder& encoder);

/// c_{i*}^floor(d/i*) (|P|-1)^d binom(Nn, d): since c < 1 and c^{i*} = c_{i*},
/// this rational is at least c^d (|P|-1)^d binom(Nn, d).
mpq_class bound_2E(const ConstantC& c, int p_size, int n, int N, int d);

struct ProbabilityBound {
    mpq_class raw;
    mpq_class clamped;
};

/// a_out(w) a_in / ((|P|-1)^w binom(N n_out, w)). Throws when w > N n_out.
ProbabilityBound p_bound(int w, const mpz_class& a_out_w, const mpz_class& a_in, int N, int n_out, int p_size);

enum class SumMode { poly, sublog };

std::string to_string(SumMode mode);
SumMode parse_sum_mode(const std::string& text);

/// Exact decimal or fraction text ("0.25", "3/7", "2") to a rational.
mpq_class parse_rational(const std::string& text);

/// floor(N^alpha) for alpha >= 0, exact.
long floor_power(long N, const mpq_class& alpha);

/// floor(alpha log N / log log N), exact (interval arithmetic with growing
/// precision). Requires N >= 3.
long floor_alpha_llog(long N, const mpq_class& alpha);

/// D as a double for display only.
double threshold_value(SumMode mode, long N, const mpq_class& alpha);

struct PartialSums {
    long D_floor = 0;
    long xN_floor = 0;
    mpq_class first;
    mpq_class second;
    mpq_class third;

    mpq_class total() const { return first + second + third; }
};

/// The three partial sums of p_bound over
///   w <= floor(D) with a_in(w, <= floor(D)),
///   floor(D) < w < floor(xN), d <= floor(D),
///   floor(xN) <= w <= N n_out, d <= floor(D).
/// `inner` must cover w up to N n_out and d up to floor(D); throws
/// std::out_of_range otherwise.
PartialSums partial_sums(SumMode mode, const mpq_class& alpha, const mpq_class& x, int N, int n_out, int p_size,
                         const OuterSpectrum& outer, const InnerSpectrum& inner);

enum class LlogVerdict { holds, fails, not_applicable };

std::string to_string(LlogVerdict verdict);

/// (t llog N)^(t llog N) <= N^t with llog N = log N / log log N. Not
/// applicable when N < exp(exp(t)).
LlogVerdict llog_check(double t, long N);

}  // namespace turbolab

#endif
