#include "zeitlin/brackets.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "zeitlin/parallel.hpp"

namespace zeitlin {

namespace {

// Split real/imaginary planes in centered order: slot (k1 + h) * N + (k2 + h).
struct CenteredPlanes {
  std::vector<double> re;
  std::vector<double> im;
};

// q_k = ω_{-k} / k², with q_0 = 0 so the k = 0 term drops out of every sum.
CenteredPlanes weighted_reflection(const ModeField& field) {
  const int n = field.lattice().n_modes();
  const int h = field.lattice().half_width();
  CenteredPlanes q{std::vector<double>(field.lattice().size()),
                   std::vector<double>(field.lattice().size())};
  field.lattice().for_each([&](Wavevector k) {
    if (k.is_zero()) return;
    const Complex v = field[-k] / static_cast<double>(k.norm2());
    const std::size_t c = static_cast<std::size_t>(k.m1 + h) * n + (k.m2 + h);
    q.re[c] = v.real();
    q.im[c] = v.imag();
  });
  return q;
}

CenteredPlanes centered(const ModeField& field) {
  const int n = field.lattice().n_modes();
  const int h = field.lattice().half_width();
  CenteredPlanes w{std::vector<double>(field.lattice().size()),
                   std::vector<double>(field.lattice().size())};
  field.lattice().for_each([&](Wavevector k) {
    const std::size_t c = static_cast<std::size_t>(k.m1 + h) * n + (k.m2 + h);
    w.re[c] = field[k].real();
    w.im[c] = field[k].imag();
  });
  return w;
}

}  // namespace

std::string_view to_string(SchemeKind scheme) {
  switch (scheme) {
    case SchemeKind::Galerkin:
      return "galerkin";
    case SchemeKind::SineBracket:
      return "sine";
  }
  return "unknown";
}

SchemeKind parse_scheme(std::string_view name) {
  if (name == "galerkin") return SchemeKind::Galerkin;
  if (name == "sine" || name == "sine_bracket") return SchemeKind::SineBracket;
  throw std::invalid_argument("unknown scheme '" + std::string(name) +
                              "' (expected galerkin or sine)");
}

Epsilon Epsilon::for_modes(int n_modes) { return {2.0 * std::numbers::pi / n_modes}; }

double structure_constant_sdiff(Wavevector n, Wavevector m) { return cross_product(n, m); }

double structure_constant_suN(Wavevector n, Wavevector m, int n_modes) {
  const double scale = n_modes / (2.0 * std::numbers::pi);
  return scale * std::sin(2.0 * std::numbers::pi * cross_product(n, m) / n_modes);
}

ModeField galerkin_rhs(const ModeField& field) {
  const ModeLattice& lattice = field.lattice();
  const int n = lattice.n_modes();
  const int h = lattice.half_width();
  const CenteredPlanes w = centered(field);
  const CenteredPlanes q = weighted_reflection(field);
  ModeField out(lattice);

  parallel_for(static_cast<std::size_t>(n), [&](std::size_t row) {
    const int m1 = static_cast<int>(row) - h;
    const int lo1 = std::max(-h, -h - m1);
    const int hi1 = std::min(h, h - m1);
    for (int m2 = -h; m2 <= h; ++m2) {
      if (m1 == 0 && m2 == 0) continue;
      const int lo2 = std::max(-h, -h - m2);
      const int len = std::min(h, h - m2) - lo2 + 1;
      double acc_re = 0.0;
      double acc_im = 0.0;
      for (int k1 = lo1; k1 <= hi1; ++k1) {
        const std::size_t wc = static_cast<std::size_t>(m1 + k1 + h) * n + (m2 + lo2 + h);
        const std::size_t qc = static_cast<std::size_t>(k1 + h) * n + (lo2 + h);
        const double* wr = &w.re[wc];
        const double* wi = &w.im[wc];
        const double* qr = &q.re[qc];
        const double* qi = &q.im[qc];
        double cross = static_cast<double>(m1 * lo2 - m2 * k1);
        for (int i = 0; i < len; ++i) {
          const double pr = qr[i] * wr[i] - qi[i] * wi[i];
          const double pi = qr[i] * wi[i] + qi[i] * wr[i];
          acc_re += cross * pr;
          acc_im += cross * pi;
          cross += m1;
        }
      }
      out[Wavevector{m1, m2}] = {acc_re, acc_im};
    }
  });
  return out;
}

ModeField sine_bracket_rhs(const ModeField& field) {
  const ModeLattice& lattice = field.lattice();
  const int n = lattice.n_modes();
  const int h = lattice.half_width();
  const double eps = Epsilon::for_lattice(lattice).value;

  // sin(2π r / N) / ε indexed by r = (m × k) mod N; built antisymmetric in r.
  std::vector<double> coeff(static_cast<std::size_t>(n), 0.0);
  for (int r = 1; r <= h; ++r) {
    coeff[r] = std::sin(eps * r) / eps;
    coeff[n - r] = -coeff[r];
  }

  // Storage order of ModeField is already the wrapped layout.
  std::vector<double> wr(lattice.size());
  std::vector<double> wi(lattice.size());
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    wr[i] = field.coeffs()[i].real();
    wi[i] = field.coeffs()[i].imag();
  }
  const CenteredPlanes q = weighted_reflection(field);
  auto slot = [n](int c) {
    const int r = c % n;
    return r < 0 ? r + n : r;
  };

  ModeField out(lattice);
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t row) {
    const int m1 = static_cast<int>(row) - h;
    const int step_r = slot(m1);
    for (int m2 = -h; m2 <= h; ++m2) {
      if (m1 == 0 && m2 == 0) continue;
      double acc_re = 0.0;
      double acc_im = 0.0;
      for (int k1 = -h; k1 <= h; ++k1) {
        const std::size_t arow = static_cast<std::size_t>(slot(m1 + k1)) * n;
        const std::size_t qc = static_cast<std::size_t>(k1 + h) * n;
        int b = slot(m2 - h);
        int r = slot(-m1 * h - m2 * k1);
        for (int i = 0; i < n; ++i) {
          const double s = coeff[r];
          const double w_re = wr[arow + b];
          const double w_im = wi[arow + b];
          const double q_re = q.re[qc + i];
          const double q_im = q.im[qc + i];
          acc_re += s * (q_re * w_re - q_im * w_im);
          acc_im += s * (q_re * w_im + q_im * w_re);
          if (++b == n) b = 0;
          r += step_r;
          if (r >= n) r -= n;
        }
      }
      out[Wavevector{m1, m2}] = {acc_re, acc_im};
    }
  });
  return out;
}

ModeField scheme_rhs(SchemeKind scheme, const ModeField& field) {
  switch (scheme) {
    case SchemeKind::Galerkin:
      return galerkin_rhs(field);
    case SchemeKind::SineBracket:
      return sine_bracket_rhs(field);
  }
  throw std::invalid_argument("unknown scheme");
}

double residual_coefficient(Wavevector m, Wavevector k, Epsilon eps) {
  if (k.is_zero()) throw std::invalid_argument("residual_coefficient requires k != 0");
  const int x = cross_product(m, k);
  if (x == 0) return 0.0;
  const double z = eps.value * x;
  // 1 - sin z / z loses all digits to cancellation for small z.
  const double one_minus_sinc =
      std::abs(z) < 1e-4 ? z * z / 6.0 - z * z * z * z / 120.0 : 1.0 - std::sin(z) / z;
  return static_cast<double>(x) / k.norm2() * one_minus_sinc;
}

double residual_sum(const ModeField& field, Epsilon eps) {
  const ModeLattice& lattice = field.lattice();
  const int h = lattice.half_width();
  double total = 0.0;
  for (int m1 = -2 * h; m1 <= 2 * h; ++m1) {
    for (int m2 = -2 * h; m2 <= 2 * h; ++m2) {
      const Wavevector m{m1, m2};
      Complex a{};
      lattice.for_each([&](Wavevector k) {
        if (k.is_zero() || !lattice.contains(m + k)) return;
        a += residual_coefficient(m, k, eps) * field[m + k] * field[-k];
      });
      total += std::norm(a);
    }
  }
  return total;
}

}  // namespace zeitlin
