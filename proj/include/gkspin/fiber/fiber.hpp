#pragma once

#include "gkspin/report/report.hpp"

#include <complex>
#include <cstdint>
#include <functional>

#include <Eigen/Dense>

namespace gkspin {

using Real = long double;
using Complex = std::complex<Real>;
using CMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;

// {h : 1 - h*h > 0}.  margin bounds the smallest eigenvalue from below.
bool in_domain(const CMatrix &h, Real margin = 1e-12L);

// log det(1 - h*h)
Real kahler_potential(const CMatrix &h);

// tr((1 - hh*)^-1 A (1 - h*h)^-1 B*), the negative of the Levi form of the
// potential.  Hermitian, linear in A.
Complex metric_closed_form(const CMatrix &h, const CMatrix &a, const CMatrix &b);

// Levi form d_t d_sbar of the potential at h + tA + sB by central differences.
Complex levi_form_fd(const CMatrix &h, const CMatrix &a, const CMatrix &b, Real step = 1e-5L);

using MetricForm = std::function<Complex(const CMatrix &, const CMatrix &, const CMatrix &)>;

// Hessian agreement, positivity and unitary invariance.  metric overrides the
// closed form, for negative controls.
Report fiber_report(int n, int trials, std::uint64_t seed = 0, MetricForm metric = {});

} // namespace gkspin
