#include "liewave/fourier.hpp"

#include <cmath>

#include "liewave/error.hpp"
#include "liewave/numeric.hpp"

namespace liewave {

namespace {

// Phase table e^{sign * i * (two_m / 2) * angle} for two_m = -limit..limit.
std::vector<Complex> phase_table(int limit, const std::vector<double>& angles, double sign) {
  const std::size_t nm = static_cast<std::size_t>(2 * limit + 1);
  std::vector<Complex> t(nm * angles.size());
  for (std::size_t i = 0; i < nm; ++i) {
    const double m = 0.5 * (static_cast<double>(i) - limit);
    for (std::size_t a = 0; a < angles.size(); ++a) t[i * angles.size() + a] = std::polar(1.0, sign * m * angles[a]);
  }
  return t;
}

void check_grid(const QuadratureGrid& grid, const Band& band) {
  if (grid.band.group != band.group)
    fail(ErrorCode::invalid_argument, "quadrature grid and band belong to different groups");
  if (grid.band.limit < band.limit || (band.group == GroupKind::torus && grid.band.torus_dim != band.torus_dim))
    fail(ErrorCode::invalid_argument, "quadrature grid is not exact for the requested band limit");
}

FourierCoefficients forward_su2(const FunctionSamples& f, const Band& band, int workers) {
  const QuadratureGrid& q = *f.grid;
  const int lim = band.limit;
  const std::size_t nm = static_cast<std::size_t>(2 * lim + 1);
  const std::size_t nphi = q.phis.size(), npsi = q.psis.size(), nth = q.thetas.size();
  const auto ephi = phase_table(lim, q.phis, +1.0);
  const auto epsi = phase_table(lim, q.psis, +1.0);
  const double norm = 1.0 / (2.0 * static_cast<double>(nphi * npsi));

  std::vector<Complex> gphi(nth * npsi * nm);
  parallel_for(nth, workers, [&](std::size_t k) {
    for (std::size_t b = 0; b < npsi; ++b) {
      const Complex* row = &f.values[(k * npsi + b) * nphi];
      for (std::size_t t = 0; t < nm; ++t) {
        const Complex* e = &ephi[t * nphi];
        Complex s = 0;
        for (std::size_t a = 0; a < nphi; ++a) s += row[a] * e[a];
        gphi[(k * npsi + b) * nm + t] = s;
      }
    }
  });
  std::vector<Complex> g(nth * nm * nm);
  parallel_for(nth, workers, [&](std::size_t k) {
    const double w = q.theta_weights[k] * norm;
    for (std::size_t t1 = 0; t1 < nm; ++t1)
      for (std::size_t t2 = 0; t2 < nm; ++t2) {
        const Complex* e = &epsi[t2 * npsi];
        Complex s = 0;
        for (std::size_t b = 0; b < npsi; ++b) s += gphi[(k * npsi + b) * nm + t1] * e[b];
        g[(k * nm + t1) * nm + t2] = w * s;
      }
  });

  const auto reps = band.reps();
  std::vector<CMatrix> blocks(reps.size());
  parallel_for(reps.size(), workers, [&](std::size_t r) {
    const RepIndex& rep = reps[r];
    const int d = rep.dim();
    const su2::SmallD& sd = su2::small_d(rep.two_ell);
    CMatrix out = CMatrix::Zero(d, d);
    for (std::size_t k = 0; k < nth; ++k) {
      const Eigen::MatrixXd dk = sd.at(q.thetas[k]);
      for (int i = 0; i < d; ++i) {
        const std::size_t ti = static_cast<std::size_t>(-rep.two_ell + 2 * i + lim);
        for (int j = 0; j < d; ++j) {
          const std::size_t tj = static_cast<std::size_t>(-rep.two_ell + 2 * j + lim);
          out(i, j) += dk(j, i) * g[(k * nm + tj) * nm + ti];
        }
      }
    }
    blocks[r] = std::move(out);
  });
  FourierCoefficients c(band);
  for (std::size_t r = 0; r < reps.size(); ++r) c.set(reps[r], std::move(blocks[r]));
  return c;
}

FourierCoefficients forward_torus(const FunctionSamples& f, const Band& band, int workers) {
  const QuadratureGrid& q = *f.grid;
  const auto reps = band.reps();
  std::vector<Complex> vals(reps.size());
  parallel_for(reps.size(), workers, [&](std::size_t r) {
    Complex s = 0;
    for (std::size_t n = 0; n < q.size(); ++n)
      s += q.weights[n] * f.values[n] * std::conj(torus_character(reps[r], q.torus_nodes[n]));
    vals[r] = s;
  });
  FourierCoefficients c(band);
  for (std::size_t r = 0; r < reps.size(); ++r) c.set(reps[r], CMatrix::Constant(1, 1, vals[r]));
  return c;
}

}  // namespace

FourierCoefficients forward_transform(const FunctionSamples& f, const Band& band, int workers) {
  if (!f.grid) fail(ErrorCode::invalid_argument, "function samples carry no grid");
  check_grid(*f.grid, band);
  if (f.values.size() != f.grid->size())
    fail(ErrorCode::invalid_argument, "sample count does not match the grid");
  return band.group == GroupKind::su2 ? forward_su2(f, band, workers) : forward_torus(f, band, workers);
}

std::vector<Complex> inverse_transform(const FourierCoefficients& coeffs,
                                       const std::vector<EulerAngles>& points) {
  std::vector<Complex> out(points.size(), Complex(0.0));
  for (std::size_t p = 0; p < points.size(); ++p) {
    Complex s = 0;
    for (const auto& [rep, block] : coeffs.blocks()) {
      const CMatrix xi = su2::wigner_matrix(rep, points[p]);
      s += static_cast<double>(rep.dim()) * (xi.cwiseProduct(block.transpose())).sum();
    }
    out[p] = s;
  }
  return out;
}

std::vector<Complex> inverse_transform(const FourierCoefficients& coeffs,
                                       const std::vector<std::vector<double>>& points) {
  std::vector<Complex> out(points.size(), Complex(0.0));
  for (std::size_t p = 0; p < points.size(); ++p)
    for (const auto& [rep, block] : coeffs.blocks()) out[p] += torus_character(rep, points[p]) * block(0, 0);
  return out;
}

FunctionSamples synthesize(const FourierCoefficients& coeffs, std::shared_ptr<const QuadratureGrid> grid) {
  if (!grid) fail(ErrorCode::invalid_argument, "synthesize needs a grid");
  check_grid(*grid, coeffs.band());
  FunctionSamples out{grid, {}};
  if (grid->band.group == GroupKind::torus) {
    out.values = inverse_transform(coeffs, grid->torus_nodes);
    return out;
  }
  const QuadratureGrid& q = *grid;
  const int lim = coeffs.band().limit;
  const std::size_t nm = static_cast<std::size_t>(2 * lim + 1);
  const std::size_t nphi = q.phis.size(), npsi = q.psis.size(), nth = q.thetas.size();
  const auto ephi = phase_table(lim, q.phis, -1.0);
  const auto epsi = phase_table(lim, q.psis, -1.0);

  std::vector<Complex> h(nth * nm * nm, Complex(0.0));
  for (const auto& [rep, block] : coeffs.blocks()) {
    const int d = rep.dim();
    const su2::SmallD& sd = su2::small_d(rep.two_ell);
    for (std::size_t k = 0; k < nth; ++k) {
      const Eigen::MatrixXd dk = sd.at(q.thetas[k]);
      for (int i = 0; i < d; ++i) {
        const std::size_t ti = static_cast<std::size_t>(-rep.two_ell + 2 * i + lim);
        for (int j = 0; j < d; ++j) {
          const std::size_t tj = static_cast<std::size_t>(-rep.two_ell + 2 * j + lim);
          h[(k * nm + ti) * nm + tj] += static_cast<double>(d) * dk(i, j) * block(j, i);
        }
      }
    }
  }
  std::vector<Complex> hpsi(nth * nm * npsi, Complex(0.0));
  for (std::size_t k = 0; k < nth; ++k)
    for (std::size_t ti = 0; ti < nm; ++ti)
      for (std::size_t b = 0; b < npsi; ++b) {
        Complex s = 0;
        for (std::size_t tj = 0; tj < nm; ++tj) s += h[(k * nm + ti) * nm + tj] * epsi[tj * npsi + b];
        hpsi[(k * nm + ti) * npsi + b] = s;
      }
  out.values.assign(q.size(), Complex(0.0));
  for (std::size_t k = 0; k < nth; ++k)
    for (std::size_t b = 0; b < npsi; ++b)
      for (std::size_t a = 0; a < nphi; ++a) {
        Complex s = 0;
        for (std::size_t ti = 0; ti < nm; ++ti) s += hpsi[(k * nm + ti) * npsi + b] * ephi[ti * nphi + a];
        out.values[(k * npsi + b) * nphi + a] = s;
      }
  return out;
}

double plancherel_norm(const FourierCoefficients& coeffs) {
  CompensatedSum acc;
  for (const auto& [rep, block] : coeffs.blocks()) acc.add(rep.dim() * block.squaredNorm());
  return std::sqrt(acc.value());
}

double quadrature_l2_norm(const FunctionSamples& f) {
  CompensatedSum acc;
  for (std::size_t n = 0; n < f.values.size(); ++n) acc.add(f.grid->weights[n] * std::norm(f.values[n]));
  return std::sqrt(acc.value());
}

}  // namespace liewave
