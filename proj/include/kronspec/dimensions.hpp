#pragma once

#include <cmath>
#include <stdexcept>

#include "kronspec/bigint.hpp"
#include "kronspec/errors.hpp"
#include "kronspec/partition.hpp"

namespace kronspec::dims {

/// dim U_lambda = k! / prod hook(i): the number of standard Young tableaux.
inline Int dim_u(const Partition& lambda) {
    const int k = lambda.weight();
    if (k == 0) return 1;
    const Partition conj = conjugate(lambda);
    Int hooks = 1;
    for (int i = 0; i < lambda.rows(); ++i) {
        for (int j = 0; j < lambda.parts()[static_cast<std::size_t>(i)]; ++j) {
            // arm + leg + 1 with 0-based box (i, j)
            hooks *= lambda.part(i) + conj.part(j) - i - j - 1;
        }
    }
    const Int kf = factorial(k);
    if (kf % hooks != 0) throw internal_consistency_error("hook product does not divide k!");
    return kf / hooks;
}

/// dim V_lambda by the Weyl formula with lambda zero-padded to d rows;
/// 0 when lambda has more than d nonzero rows.
inline Int dim_v(const Partition& lambda, int d) {
    if (d < 1) throw std::invalid_argument("local dimension must be at least 1");
    if (lambda.rows() > d) return 0;
    Int num = 1;
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            num *= lambda.part(i) - lambda.part(j) + j - i;
        }
    }
    Int den = 1;
    for (int m = 1; m < d; ++m) den *= factorial(m);
    if (num % den != 0) throw internal_consistency_error("Weyl numerator does not divide superfactorial");
    return num / den;
}

struct DimensionReport {
    Partition lambda;
    int d = 0;
    Int dim_u;
    Int dim_v;
    double v_upper = 0.0;  // (k+1)^{d(d-1)/2}
    Rat u_lower;           // k! / prod (lambda_i + d - i)!
    Rat u_upper;           // k! / prod lambda_i!
    bool u_sandwich_holds = false;
    bool v_bound_holds = false;
};

/// Explicit dimension bounds, compared exactly. The lower bound on dim_u is
/// taken over max(rows, d) padded rows; a negative factorial argument (only
/// possible when lambda has more than d rows) makes the bound vacuous (0).
inline DimensionReport bounds(const Partition& lambda, int d) {
    if (d < 1) throw std::invalid_argument("local dimension must be at least 1");
    DimensionReport report;
    report.lambda = lambda;
    report.d = d;
    report.dim_u = dim_u(lambda);
    report.dim_v = dim_v(lambda, d);

    const int k = lambda.weight();
    const Int kf = factorial(k);
    const int exponent = d * (d - 1) / 2;
    report.v_upper = std::pow(static_cast<double>(k + 1), static_cast<double>(exponent));

    Int upper_den = 1;
    for (int p : lambda.parts()) upper_den *= factorial(p);
    report.u_upper = Rat(kf, upper_den);

    bool lower_defined = true;
    Int lower_den = 1;
    const int padded_rows = std::max(lambda.rows(), d);
    for (int i = 0; i < padded_rows; ++i) {
        const int arg = lambda.part(i) + d - (i + 1);
        if (arg < 0) {
            lower_defined = false;
            break;
        }
        lower_den *= factorial(arg);
    }
    report.u_lower = lower_defined ? Rat(kf, lower_den) : Rat(0);

    const Rat dim_u_rat(report.dim_u);
    report.u_sandwich_holds = report.u_lower <= dim_u_rat && dim_u_rat <= report.u_upper;
    report.v_bound_holds = report.dim_v <= int_pow(Int(k + 1), exponent);
    return report;
}

}  // namespace kronspec::dims
