#include "gkspin/fiber/fiber.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace gkspin {

namespace {

CMatrix gram_m(const CMatrix &h) {
  return CMatrix::Identity(h.cols(), h.cols()) - h.adjoint() * h;
}
CMatrix gram_n(const CMatrix &h) {
  return CMatrix::Identity(h.rows(), h.rows()) - h * h.adjoint();
}

void require_square(const CMatrix &h) {
  if (h.rows() != h.cols() || h.rows() == 0)
    throw std::invalid_argument("domain point must be a nonempty square matrix");
}

void require_domain(const CMatrix &h) {
  require_square(h);
  if (!in_domain(h, 0))
    throw std::domain_error("point is outside {1 - h*h > 0}");
}

Real min_eigenvalue(const CMatrix &m) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

CMatrix random_matrix(int n, std::mt19937_64 &rng) {
  std::uniform_real_distribution<Real> u(-1, 1);
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m(i, j) = Complex(u(rng), u(rng));
  return m;
}

CMatrix random_point(int n, std::mt19937_64 &rng) {
  std::uniform_real_distribution<Real> r(0.05L, 0.9L);
  CMatrix x = random_matrix(n, rng);
  Eigen::JacobiSVD<CMatrix> svd(x);
  return x * (r(rng) / svd.singularValues()(0));
}

CMatrix random_unitary(int n, std::mt19937_64 &rng) {
  Eigen::HouseholderQR<CMatrix> qr(random_matrix(n, rng));
  return qr.householderQ();
}

std::string mat_str(const CMatrix &m) {
  std::ostringstream os;
  os.precision(6);
  os << "[";
  for (int i = 0; i < m.rows(); ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < m.cols(); ++j)
      os << (j ? ", " : "") << static_cast<double>(m(i, j).real()) << (m(i, j).imag() < 0 ? "" : "+")
         << static_cast<double>(m(i, j).imag()) << "i";
  }
  os << "]";
  return os.str();
}

std::string num(Real x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << static_cast<double>(x);
  return os.str();
}

} // namespace

bool in_domain(const CMatrix &h, Real margin) {
  require_square(h);
  return min_eigenvalue(gram_m(h)) > margin;
}

Real kahler_potential(const CMatrix &h) {
  require_domain(h);
  Eigen::LLT<CMatrix> llt(gram_m(h));
  if (llt.info() != Eigen::Success)
    throw std::domain_error("1 - h*h is not positive definite");
  Real s = 0;
  for (int i = 0; i < h.cols(); ++i)
    s += std::log(llt.matrixL()(i, i).real());
  return 2 * s;
}

Complex metric_closed_form(const CMatrix &h, const CMatrix &a, const CMatrix &b) {
  require_domain(h);
  CMatrix ni = gram_n(h).inverse(), mi = gram_m(h).inverse();
  return (ni * a * mi * b.adjoint()).trace();
}

Complex levi_form_fd(const CMatrix &h, const CMatrix &a, const CMatrix &b, Real step) {
  // L(X, X) = (D_X^2 f + D_{iX}^2 f) / 4, then polarization
  Real f0 = kahler_potential(h);
  auto second = [&](const CMatrix &x) {
    return (kahler_potential(h + step * x) - 2 * f0 + kahler_potential(h - step * x)) /
           (step * step);
  };
  const Complex i(0, 1);
  auto diag = [&](const CMatrix &x) -> Real { return (second(x) + second(i * x)) / 4; };
  Complex s = 0;
  Complex ik = 1;
  for (int k = 0; k < 4; ++k, ik *= i)
    s += ik * diag(a + ik * b);
  return s / Real(4);
}

Report fiber_report(int n, int trials, std::uint64_t seed, MetricForm metric) {
  if (n < 1)
    throw std::invalid_argument("fiber dimension must be positive");
  Report rep("fiber n=" + std::to_string(n), seed, trials);
  if (!metric)
    metric = metric_closed_form;
  int points = std::max(20, trials);
  auto rng_for = [&](std::uint64_t salt) { return std::mt19937_64(seed * 1000003 + salt); };
  CMatrix id = CMatrix::Identity(n, n);

  {
    Check c = pass_check("fiber.domain", "0 and 0.5*1 lie in {1 - h*h > 0}, 1 lies on the boundary");
    if (!in_domain(CMatrix::Zero(n, n)))
      c = fail_check(c.id, c.anchor, "h = 0 rejected");
    else if (in_domain(id))
      c = fail_check(c.id, c.anchor, "h = 1 accepted");
    else if (!in_domain(Real(0.5) * id))
      c = fail_check(c.id, c.anchor, "h = 0.5*1 rejected");
    rep.add(c);
  }

  {
    Real at_half = kahler_potential(Real(0.5) * id);
    Real want = n * std::log(Real(0.75));
    Check c = pass_check("fiber.potential", "log det(1 - h*h) at 0 and at 0.5*1");
    if (kahler_potential(CMatrix::Zero(n, n)) != 0)
      c = fail_check(c.id, c.anchor, "potential at 0 is nonzero");
    else if (std::abs(at_half - want) > 1e-15L)
      c = fail_check(c.id, c.anchor, "potential at 0.5*1 is " + num(at_half));
    c.value("potential(0.5*1)", num(at_half));
    rep.add(c);
  }

  {
    auto rng = rng_for(21);
    Real worst = 0;
    std::optional<std::string> witness;
    for (int k = 0; k < points && !witness; ++k) {
      CMatrix h = random_point(n, rng), a = random_matrix(n, rng), b = random_matrix(n, rng);
      // metric = -Levi form of the potential
      Complex fd = -levi_form_fd(h, a, b);
      Complex cf = metric(h, a, b);
      Real rel = std::abs(fd - cf) / std::max(std::abs(fd), Real(1e-12));
      worst = std::max(worst, rel);
      if (rel > 1e-6L)
        witness = "h = " + mat_str(h) + ", A = " + mat_str(a) + ", B = " + mat_str(b) +
                  ": closed form " + num(cf.real()) + " + " + num(cf.imag()) + "i, -Levi form " +
                  num(fd.real()) + " + " + num(fd.imag()) + "i, relative error " + num(rel);
    }
    Check c = witness ? fail_check("fiber.hessian", "metric = -dd^c log det(1 - h*h), step 1e-5",
                                   *witness)
                      : pass_check("fiber.hessian", "metric = -dd^c log det(1 - h*h), step 1e-5");
    c.value("points", std::to_string(points)).value("max_relative_error", num(worst));
    rep.add(c);
  }

  {
    auto rng = rng_for(22);
    std::optional<std::string> witness;
    Real lowest = INFINITY;
    int m = n * n;
    for (int k = 0; k < points && !witness; ++k) {
      CMatrix h = random_point(n, rng);
      CMatrix g(m, m);
      for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q) {
          CMatrix ep = CMatrix::Zero(n, n), eq = CMatrix::Zero(n, n);
          ep(p / n, p % n) = 1;
          eq(q / n, q % n) = 1;
          g(p, q) = metric(h, ep, eq);
        }
      Real hermitian_defect = (g - g.adjoint()).norm();
      Real ev = min_eigenvalue((g + g.adjoint()) / Real(2));
      lowest = std::min(lowest, ev);
      if (hermitian_defect > 1e-10L * g.norm())
        witness = "metric matrix is not Hermitian at h = " + mat_str(h);
      else if (ev <= 0)
        witness = "smallest eigenvalue " + num(ev) + " at h = " + mat_str(h);
    }
    Check c = witness ? fail_check("fiber.positivity", "the metric is positive definite", *witness)
                      : pass_check("fiber.positivity", "the metric is positive definite");
    c.value("min_eigenvalue", num(lowest));
    // sign of the literal form 4i dd^c log det, as a Levi form
    CMatrix h = Real(0.3) * id, a = id;
    c.value("levi_form(potential)(1, 1) at 0.3*1", num(levi_form_fd(h, a, a).real()));
    rep.add(c);
  }

  {
    auto rng = rng_for(23);
    Real worst = 0, worst_metric = 0;
    for (int k = 0; k < points; ++k) {
      CMatrix h = random_point(n, rng), a = random_matrix(n, rng), b = random_matrix(n, rng);
      CMatrix u = random_unitary(n, rng), v = random_unitary(n, rng);
      CMatrix hu = u * h * v.adjoint();
      worst = std::max(worst, std::abs(kahler_potential(hu) - kahler_potential(h)));
      Complex g0 = metric(h, a, b), g1 = metric(hu, u * a * v.adjoint(), u * b * v.adjoint());
      worst_metric = std::max(worst_metric, std::abs(g1 - g0) / std::max(std::abs(g0), Real(1)));
    }
    Check c = worst <= 1e-10L && worst_metric <= 1e-10L
                  ? pass_check("fiber.unitary-invariance", "h -> u h v* preserves the potential and metric")
                  : fail_check("fiber.unitary-invariance",
                               "h -> u h v* preserves the potential and metric",
                               "potential defect " + num(worst) + ", metric defect " +
                                   num(worst_metric));
    c.value("potential_defect", num(worst)).value("metric_defect", num(worst_metric));
    rep.add(c);
  }
  return rep;
}

} // namespace gkspin
