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

#include "turbolab/bounds.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace turbolab {

namespace {

mpq_class pow_q(const mpq_class& base, unsigned long e) {
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
    mpq_class out(num, den);
    out.canonicalize();
    return out;
}

mpz_class pow_z(long base, unsigned long e) {
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), e);
    return out;
}

// (u e / v)^v with the v = 0 limit 1.
mpq_class binomial_majorant(long u, long v) {
    if (v <= 0) {
        return 1;
    }
    return pow_q(mpq_class(u) * e_upper() / mpq_class(v), static_cast<unsigned long>(v));
}

void check_nonneg(std::initializer_list<long> values) {
    for (long v : values) {
        if (v < 0) {
            throw std::invalid_argument("bound arguments must be nonnegative");
        }
    }
}

// RAII holder for an MPFR value.
class Real {
   public:
    explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
    ~Real() { mpfr_clear(v_); }
    Real(const Real&) = delete;
    Real& operator=(const Real&) = delete;
    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

   private:
    mpfr_t v_;
};

// Outward-rounded [lo, hi] enclosures of log N and log log N (N >= 3).
struct LogEnclosure {
    explicit LogEnclosure(mpfr_prec_t prec) : l_lo(prec), l_hi(prec), ll_lo(prec), ll_hi(prec) {}
    Real l_lo;
    Real l_hi;
    Real ll_lo;
    Real ll_hi;
};

void enclose_logs(long N, LogEnclosure& e) {
    mpfr_set_si(e.l_lo.get(), N, MPFR_RNDN);
    mpfr_log(e.l_lo.get(), e.l_lo.get(), MPFR_RNDD);
    mpfr_set_si(e.l_hi.get(), N, MPFR_RNDN);
    mpfr_log(e.l_hi.get(), e.l_hi.get(), MPFR_RNDU);
    mpfr_log(e.ll_lo.get(), e.l_lo.get(), MPFR_RNDD);
    mpfr_log(e.ll_hi.get(), e.l_hi.get(), MPFR_RNDU);
}

}  // namespace

mpz_class binomial(long u, long v) {
    if (v < 0 || u < 0 || v > u) {
        return 0;
    }
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(u), static_cast<unsigned long>(v));
    return out;
}

mpq_class e_upper() { return mpq_class(mpz_class("27182818285"), mpz_class("10000000000")); }

mpz_class theorem_inner_bound(int m, int k, int w, int d, int N, int eta, int p_size) {
    check_nonneg({m, k, w, d, N});
    if (eta < 1 || p_size < 2) {
        throw std::invalid_argument("inner bound needs eta >= 1 and |P| >= 2");
    }
    mpz_class out = pow_z(2, static_cast<unsigned long>(m + w)) * pow_z(p_size - 1, static_cast<unsigned long>(w));
    out *= binomial(static_cast<long>(k) * N + 1, w / 2 + 1);
    out *= binomial(static_cast<long>(eta) * k * (w + d) + 1, (w + 1) / 2);
    return out;
}

BoundReport bound_1I(const InnerParams& seed, int w, int d, int N) {
    BoundReport r;
    r.name = "1I";
    r.binomial_value = theorem_inner_bound(seed.m, seed.k, w, d, N, seed.eta, seed.p_size);
    if (w == 0) {
        r.explicit_value = r.binomial_value;
    } else {
        r.explicit_value = mpq_class(pow_z(2, static_cast<unsigned long>(seed.m + w)) *
                                     pow_z(seed.p_size - 1, static_cast<unsigned long>(w))) *
                           binomial_majorant(static_cast<long>(seed.k) * N + 1, w / 2 + 1) *
                           binomial_majorant(static_cast<long>(seed.eta) * seed.k * (w + d) + 1, (w + 1) / 2);
    }
    r.explicit_n_exponent = w / 2 + 1;
    r.nominal_n_exponent = mpq_class(w, 2);
    r.nominal_n_exponent.canonicalize();
    return r;
}

BoundReport bound_2I(const InnerParams& decoder, int w, int d, int N) {
    BoundReport r;
    r.name = "2I";
    r.binomial_value = theorem_inner_bound(decoder.m, decoder.k, d, w, N, decoder.eta, decoder.p_size);
    if (d == 0) {
        r.explicit_value = r.binomial_value;
    } else {
        r.explicit_value = mpq_class(pow_z(2, static_cast<unsigned long>(decoder.m + d)) *
                                     pow_z(decoder.p_size - 1, static_cast<unsigned long>(d))) *
                           binomial_majorant(static_cast<long>(decoder.k) * N + 1, d / 2 + 1) *
                           binomial_majorant(static_cast<long>(decoder.eta) * decoder.k * (w + d) + 1, (d + 1) / 2);
    }
    r.explicit_n_exponent = d / 2 + 1;
    r.nominal_n_exponent = mpq_class(d, 2);
    r.nominal_n_exponent.canonicalize();
    return r;
}

Bound1E bound_1E(int n, int d_c, int d_q, int p_size, int d, int N) {
    check_nonneg({n, d, N});
    if (d_c < 1 || d_q < 1) {
        throw std::invalid_argument("bound 1E needs positive distances");
    }
    Bound1E out;
    if (d < d_c) {
        return out;
    }
    out.j_max = (d - d_c) / d_q + 1;
    for (int j = 1; j <= out.j_max; ++j) {
        out.sum += pow_z(p_size, static_cast<unsigned long>(n) * static_cast<unsigned long>(j)) * binomial(N, j);
    }
    out.majorized = out.j_max * pow_z(p_size, static_cast<unsigned long>(n) * static_cast<unsigned long>(out.j_max)) *
                    binomial(N, out.j_max);
    return out;
}

ConstantC constant_c(const BlockEncoder& encoder) {
    const int p_size = static_cast<int>(encoder.space().size());
    if (p_size <= 2) {
        throw std::invalid_argument("constant c needs |P| > 2");
    }
    const DistancePair dist = distances(encoder);
    if (dist.d_q && *dist.d_q < 2) {
        throw std::invalid_argument("constant c needs d_q >= 2");
    }
    const BlockEnumerator e = block_enumerator(encoder);
    const int n = encoder.n();
    ConstantC out;
    for (int i = 0; i <= n; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        mpq_class ci(e.harmless[idx] + e.harmful[idx], pow_z(p_size - 1, static_cast<unsigned long>(i)) * binomial(n, i));
        ci.canonicalize();
        out.c.push_back(ci);
    }
    // c_i^(1/i) > c_j^(1/j)  <=>  c_i^j > c_j^i.
    out.argmax = 1;
    for (int i = 2; i <= n; ++i) {
        const auto a = static_cast<unsigned long>(i);
        const auto b = static_cast<unsigned long>(out.argmax);
        if (pow_q(out.c[a], b) > pow_q(out.c[b], a)) {
            out.argmax = i;
        }
    }
    const mpq_class target = out.c[static_cast<std::size_t>(out.argmax)];
    if (target == 0) {
        out.upper = 0;
        return out;
    }
    mpq_class lo = 0;
    mpq_class hi = 1;
    for (int it = 0; it < 40; ++it) {
        const mpq_class mid = (lo + hi) / 2;
        if (pow_q(mid, static_cast<unsigned long>(out.argmax)) >= target) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    out.upper = hi;
    return out;
}

mpq_class bound_2E(const ConstantC& c, int p_size, int n, int N, int d) {
    check_nonneg({n, N, d});
    const auto istar = static_cast<unsigned long>(c.argmax);
    const mpq_class ci = c.c.at(istar);
    return pow_q(ci, static_cast<unsigned long>(d) / istar) *
           mpq_class(pow_z(p_size - 1, static_cast<unsigned long>(d)) * binomial(static_cast<long>(N) * n, d));
}

ProbabilityBound p_bound(int w, const mpz_class& a_out_w, const mpz_class& a_in, int N, int n_out, int p_size) {
    if (w < 0 || w > N * n_out) {
        throw std::invalid_argument("p_bound needs 0 <= w <= N n_out");
    }
    ProbabilityBound out;
    const mpz_class den = pow_z(p_size - 1, static_cast<unsigned long>(w)) * binomial(static_cast<long>(N) * n_out, w);
    out.raw = mpq_class(a_out_w * a_in, den);
    out.raw.canonicalize();
    out.clamped = out.raw > 1 ? mpq_class(1) : out.raw;
    return out;
}

std::string to_string(SumMode mode) { return mode == SumMode::poly ? "poly" : "sublog"; }

SumMode parse_sum_mode(const std::string& text) {
    if (text == "poly") {
        return SumMode::poly;
    }
    if (text == "sublog") {
        return SumMode::sublog;
    }
    throw std::invalid_argument("mode must be 'poly' or 'sublog', got '" + text + "'");
}

mpq_class parse_rational(const std::string& text) {
    auto bad = [&]() { return std::invalid_argument("not a number: '" + text + "'"); };
    if (text.empty()) {
        throw bad();
    }
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    const bool negative = text[0] == '-';
    const std::string body = text.substr(start);
    mpq_class out;
    if (const auto slash = body.find('/'); slash != std::string::npos) {
        const std::string num = body.substr(0, slash);
        const std::string den = body.substr(slash + 1);
        auto digits = [](const std::string& s) {
            return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
        };
        if (!digits(num) || !digits(den) || mpz_class(den) == 0) {
            throw bad();
        }
        out = mpq_class(mpz_class(num), mpz_class(den));
    } else {
        const auto dot = body.find('.');
        const std::string whole = body.substr(0, dot);
        const std::string frac = dot == std::string::npos ? "" : body.substr(dot + 1);
        auto digits_or_empty = [](const std::string& s) {
            return std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
        };
        if ((whole.empty() && frac.empty()) || !digits_or_empty(whole) || !digits_or_empty(frac)) {
            throw bad();
        }
        mpz_class scale = pow_z(10, frac.size());
        mpz_class value = mpz_class(whole.empty() ? "0" : whole) * scale + mpz_class(frac.empty() ? "0" : frac);
        out = mpq_class(value, scale);
    }
    out.canonicalize();
    return negative ? mpq_class(-out) : out;
}

long floor_power(long N, const mpq_class& alpha) {
    if (N < 1 || alpha < 0) {
        throw std::invalid_argument("floor_power needs N >= 1 and alpha >= 0");
    }
    if (!alpha.get_num().fits_ulong_p() || !alpha.get_den().fits_ulong_p()) {
        throw std::invalid_argument("alpha has too large a numerator or denominator");
    }
    const mpz_class power = pow_z(N, alpha.get_num().get_ui());
    mpz_class root;
    mpz_root(root.get_mpz_t(), power.get_mpz_t(), alpha.get_den().get_ui());
    if (!root.fits_slong_p()) {
        throw std::overflow_error("N^alpha too large");
    }
    return root.get_si();
}

long floor_alpha_llog(long N, const mpq_class& alpha) {
    if (N < 3 || alpha < 0) {
        throw std::invalid_argument("floor_alpha_llog needs N >= 3 and alpha >= 0");
    }
    for (mpfr_prec_t prec = 128; prec <= 8192; prec *= 2) {
        LogEnclosure e(prec);
        enclose_logs(N, e);
        Real a_lo(prec);
        Real a_hi(prec);
        mpfr_set_q(a_lo.get(), alpha.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(a_hi.get(), alpha.get_mpq_t(), MPFR_RNDU);
        Real lo(prec);
        Real hi(prec);
        mpfr_mul(lo.get(), a_lo.get(), e.l_lo.get(), MPFR_RNDD);
        mpfr_div(lo.get(), lo.get(), e.ll_hi.get(), MPFR_RNDD);
        mpfr_mul(hi.get(), a_hi.get(), e.l_hi.get(), MPFR_RNDU);
        mpfr_div(hi.get(), hi.get(), e.ll_lo.get(), MPFR_RNDU);
        mpfr_floor(lo.get(), lo.get());
        mpfr_floor(hi.get(), hi.get());
        if (mpfr_equal_p(lo.get(), hi.get())) {
            return mpfr_get_si(lo.get(), MPFR_RNDN);
        }
    }
    throw std::runtime_error("could not resolve floor(alpha llog N)");
}

double threshold_value(SumMode mode, long N, const mpq_class& alpha) {
    const double a = alpha.get_d();
    const double n = static_cast<double>(N);
    if (mode == SumMode::poly) {
        return std::pow(n, a);
    }
    return a * std::log(n) / std::log(std::log(n));
}

PartialSums partial_sums(SumMode mode, const mpq_class& alpha, const mpq_class& x, int N, int n_out, int p_size,
                         const OuterSpectrum& outer, const InnerSpectrum& inner) {
    PartialSums out;
    out.D_floor = mode == SumMode::poly ? floor_power(N, alpha) : floor_alpha_llog(N, alpha);
    mpz_class xn;
    const mpq_class prod = x * N;
    mpz_fdiv_q(xn.get_mpz_t(), prod.get_num_mpz_t(), prod.get_den_mpz_t());
    out.xN_floor = xn.get_si();
    const long w_top = static_cast<long>(N) * n_out;
    const long D = out.D_floor;
    if (D > inner.d_max || w_top > inner.w_max) {
        throw std::out_of_range("inner spectrum does not cover w <= N n_out and d <= floor(D)");
    }
    auto a_in = [&](long w, long d) { return inner.a(static_cast<int>(w), static_cast<int>(d)); };
    for (long w = 0; w <= std::min(D, w_top); ++w) {
        const int wi = static_cast<int>(w);
        out.first += p_bound(wi, outer.a(wi), inner.a_leq(wi, static_cast<int>(D)), N, n_out, p_size).raw;
    }
    for (long d = 0; d <= D; ++d) {
        for (long w = D + 1; w <= std::min(out.xN_floor - 1, w_top); ++w) {
            const int wi = static_cast<int>(w);
            out.second += p_bound(wi, outer.a(wi), a_in(w, d), N, n_out, p_size).raw;
        }
        for (long w = std::max(out.xN_floor, 0L); w <= w_top; ++w) {
            const int wi = static_cast<int>(w);
            out.third += p_bound(wi, outer.a(wi), a_in(w, d), N, n_out, p_size).raw;
        }
    }
    return out;
}

std::string to_string(LlogVerdict verdict) {
    switch (verdict) {
        case LlogVerdict::holds: return "holds";
        case LlogVerdict::fails: return "fails";
        case LlogVerdict::not_applicable: return "not_applicable";
    }
    return "not_applicable";
}

LlogVerdict llog_check(double t, long N) {
    if (!(t > 0) || !std::isfinite(t)) {
        throw std::invalid_argument("llog_check needs t > 0");
    }
    if (N < 3) {
        return LlogVerdict::not_applicable;
    }
    for (mpfr_prec_t prec = 128; prec <= 8192; prec *= 2) {
        LogEnclosure e(prec);
        enclose_logs(N, e);
        Real tt(prec);
        mpfr_set_d(tt.get(), t, MPFR_RNDN);  // exact: prec >= 53
        // Applicability: log log N >= t.
        if (mpfr_less_p(e.ll_hi.get(), tt.get())) {
            return LlogVerdict::not_applicable;
        }
        if (mpfr_less_p(e.ll_lo.get(), tt.get())) {
            continue;
        }
        // y = t log N / log log N >= e^t > 1/e, where y log y is increasing.
        Real y_lo(prec);
        Real y_hi(prec);
        mpfr_mul(y_lo.get(), tt.get(), e.l_lo.get(), MPFR_RNDD);
        mpfr_div(y_lo.get(), y_lo.get(), e.ll_hi.get(), MPFR_RNDD);
        mpfr_mul(y_hi.get(), tt.get(), e.l_hi.get(), MPFR_RNDU);
        mpfr_div(y_hi.get(), y_hi.get(), e.ll_lo.get(), MPFR_RNDU);
        Real lhs_lo(prec);
        Real lhs_hi(prec);
        mpfr_log(lhs_lo.get(), y_lo.get(), MPFR_RNDD);
        mpfr_mul(lhs_lo.get(), lhs_lo.get(), y_lo.get(), MPFR_RNDD);
        mpfr_log(lhs_hi.get(), y_hi.get(), MPFR_RNDU);
        mpfr_mul(lhs_hi.get(), lhs_hi.get(), y_hi.get(), MPFR_RNDU);
        Real rhs_lo(prec);
        Real rhs_hi(prec);
        mpfr_mul(rhs_lo.get(), tt.get(), e.l_lo.get(), MPFR_RNDD);
        mpfr_mul(rhs_hi.get(), tt.get(), e.l_hi.get(), MPFR_RNDU);
        if (mpfr_lessequal_p(lhs_hi.get(), rhs_lo.get())) {
            return LlogVerdict::holds;
        }
        if (mpfr_greater_p(lhs_lo.get(), rhs_hi.get())) {
            return LlogVerdict::fails;
        }
    }
    throw std::runtime_error("llog comparison unresolved at 8192 bits");
}

}  // namespace turbolab
