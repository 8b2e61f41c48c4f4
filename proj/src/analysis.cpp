#include "sqc/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sqc/fft.hpp"

namespace sqc::analysis {

namespace {

std::size_t cycles_per_tau(double tau, double ramsey_t) {
  const double ratio = tau / ramsey_t;
  const auto m = static_cast<std::size_t>(std::llround(ratio));
  if (m < 1 || std::abs(ratio - static_cast<double>(m)) > 1e-9 * ratio)
    throw std::invalid_argument("tau must be a positive multiple of the Ramsey time");
  return m;
}

}  // namespace

AllanPartial allan_reduce_trace(const clockloop::ClockTrace& trace,
                                const std::vector<double>& taus) {
  const double t = trace.ramsey_t;
  AllanPartial part;
  part.sum_sq.assign(taus.size(), 0.0);
  part.count.assign(taus.size(), 0);
  for (std::size_t i = 0; i < taus.size(); ++i) {
    if (i > 0 && taus[i] <= taus[i - 1])
      throw std::invalid_argument("taus must be strictly increasing");
    const std::size_t m = cycles_per_tau(taus[i], t);
    if (m > trace.n_cycles()) continue;
    const std::size_t nseg = trace.n_cycles() / m;
    for (std::size_t s = 0; s < nseg; ++s) {
      double acc = 0.0;
      for (std::size_t k = s * m; k < (s + 1) * m; ++k)
        acc += trace.phase[k] + t * trace.correction[k];
      const double mean_offset = acc / taus[i];
      part.sum_sq[i] += mean_offset * mean_offset;
      ++part.count[i];
    }
  }
  return part;
}

StabilityCurve allan_combine(const std::vector<AllanPartial>& partials,
                             const std::vector<double>& taus, double omega) {
  StabilityCurve curve;
  curve.points.reserve(taus.size());
  for (std::size_t i = 0; i < taus.size(); ++i) {
    double sum_sq = 0.0;
    std::size_t samples = 0;
    for (const auto& part : partials) {
      sum_sq += part.sum_sq[i];
      samples += part.count[i];
    }
    if (samples < 2)
      throw std::invalid_argument(
          "insufficient segments: need >= 2 samples per tau");
    StabilityPoint p;
    p.tau = taus[i];
    p.sigma_y = std::sqrt(sum_sq / static_cast<double>(samples)) / omega;
    p.stderr_ = p.sigma_y / std::sqrt(2.0 * static_cast<double>(samples));
    p.samples = samples;
    curve.points.push_back(p);
  }
  return curve;
}

StabilityCurve allan_deviation(const std::vector<clockloop::ClockTrace>& traces,
                               const std::vector<double>& taus, double omega) {
  if (traces.empty()) throw std::invalid_argument("no traces");
  std::vector<AllanPartial> partials;
  partials.reserve(traces.size());
  for (const auto& trace : traces)
    partials.push_back(allan_reduce_trace(trace, taus));
  return allan_combine(partials, taus, omega);
}

StabilityCurve allan_deviation_twosample(const lonoise::NoiseTrajectory& traj,
                                         const std::vector<double>& taus,
                                         double omega) {
  StabilityCurve curve;
  for (const double tau : taus) {
    const auto m = static_cast<std::size_t>(std::llround(tau / traj.dt));
    if (m < 1) throw std::invalid_argument("tau below sample spacing");
    const std::size_t nblk = traj.samples.size() / m;
    if (nblk < 2) throw std::invalid_argument("need >= 2 blocks per tau");
    std::vector<double> means(nblk);
    for (std::size_t b = 0; b < nblk; ++b) {
      double acc = 0.0;
      for (std::size_t i = b * m; i < (b + 1) * m; ++i) acc += traj.samples[i];
      means[b] = acc / static_cast<double>(m);
    }
    double sum_sq = 0.0;
    for (std::size_t b = 0; b + 1 < nblk; ++b) {
      const double d = means[b + 1] - means[b];
      sum_sq += 0.5 * d * d;
    }
    StabilityPoint p;
    p.tau = tau;
    p.samples = nblk - 1;
    p.sigma_y = std::sqrt(sum_sq / static_cast<double>(nblk - 1)) / omega;
    p.stderr_ = p.sigma_y / std::sqrt(2.0 * static_cast<double>(nblk - 1));
    curve.points.push_back(p);
  }
  return curve;
}

std::vector<double> tau_grid(double ramsey_t, std::size_t n_cycles,
                             std::size_t min_segments) {
  std::vector<double> taus;
  for (std::size_t m = 1; m * std::max<std::size_t>(min_segments, 1) <= n_cycles;
       m *= 2)
    taus.push_back(static_cast<double>(m) * ramsey_t);
  return taus;
}

double fit_floor(StabilityCurve& curve, double tau_min) {
  std::vector<const StabilityPoint*> pts;
  for (const auto& p : curve.points)
    if (p.tau >= tau_min * (1.0 - 1e-12)) pts.push_back(&p);
  if (pts.size() < 4)
    throw std::invalid_argument("fit_floor needs >= 4 points with tau >= tau_min");

  double sxy = 0.0, sxx = 0.0;
  for (const auto* p : pts) {
    const double w = p->stderr_ > 0.0 ? 1.0 / (p->stderr_ * p->stderr_) : 1.0;
    const double x = 1.0 / std::sqrt(p->tau);
    sxy += w * x * p->sigma_y;
    sxx += w * x * x;
  }
  curve.floor_coeff = sxy / sxx;
  curve.floor_stderr = 1.0 / std::sqrt(sxx);
  curve.fit_tau_min = pts.front()->tau;
  curve.fit_tau_max = pts.back()->tau;

  // Slope sanity: the fitted region must actually look like 1/sqrt(tau).
  std::vector<std::pair<double, double>> lg;
  lg.reserve(pts.size());
  for (const auto* p : pts) lg.emplace_back(p->tau, p->sigma_y);
  const ScalingFit slope = loglog_slope(lg);
  curve.flagged =
      std::abs(slope.exponent + 0.5) > 3.0 * std::max(slope.stderr_, 1e-12);
  return curve.floor_coeff;
}

PsdEstimate psd_welch(const lonoise::NoiseTrajectory& traj,
                      std::size_t segment_len, double overlap_fraction) {
  const std::size_t n = traj.samples.size();
  if (n == 0) throw std::invalid_argument("empty trajectory");
  if (segment_len < 2 || segment_len > n)
    throw std::invalid_argument("segment_len must lie in [2, sample count]");
  if (overlap_fraction < 0.0 || overlap_fraction > 0.9)
    throw std::invalid_argument("overlap_fraction must lie in [0, 0.9]");

  const std::size_t l = segment_len;
  const auto hop = std::max<std::size_t>(
      1, static_cast<std::size_t>(
             std::llround(static_cast<double>(l) * (1.0 - overlap_fraction))));

  std::vector<double> window(l);
  double wsum2 = 0.0;
  for (std::size_t i = 0; i < l; ++i) {
    window[i] = 0.5 * (1.0 - std::cos(2.0 * std::numbers::pi *
                                      static_cast<double>(i) /
                                      static_cast<double>(l)));
    wsum2 += window[i] * window[i];
  }

  const std::size_t half = l / 2;
  std::vector<double> acc(half, 0.0);
  std::size_t segments = 0;
  std::vector<double> buf(l);
  for (std::size_t start = 0; start + l <= n; start += hop) {
    for (std::size_t i = 0; i < l; ++i)
      buf[i] = window[i] * traj.samples[start + i];
    const auto spec = fft::rfft(buf);
    for (std::size_t j = 1; j <= half; ++j)
      acc[j - 1] += std::norm(spec[j]);
    ++segments;
  }

  PsdEstimate est;
  est.segment_count = segments;
  est.freqs.resize(half);
  est.psd.resize(half);
  const double df_scale = traj.dt / wsum2;
  for (std::size_t j = 1; j <= half; ++j) {
    est.freqs[j - 1] = static_cast<double>(j) /
                       (static_cast<double>(l) * traj.dt);
    const double one_sided = (j == half ? 1.0 : 2.0);
    est.psd[j - 1] =
        one_sided * df_scale * acc[j - 1] / static_cast<double>(segments);
  }
  return est;
}

PsdEstimate psd_mean(const std::vector<PsdEstimate>& estimates) {
  if (estimates.empty()) throw std::invalid_argument("no estimates");
  PsdEstimate out = estimates.front();
  for (std::size_t e = 1; e < estimates.size(); ++e) {
    if (estimates[e].psd.size() != out.psd.size())
      throw std::invalid_argument("estimates have mismatched grids");
    for (std::size_t j = 0; j < out.psd.size(); ++j)
      out.psd[j] += estimates[e].psd[j];
    out.segment_count += estimates[e].segment_count;
  }
  const double inv = 1.0 / static_cast<double>(estimates.size());
  for (auto& v : out.psd) v *= inv;
  return out;
}

ScalingFit loglog_slope(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 2) throw std::invalid_argument("need >= 2 points");
  double sx = 0.0, sy = 0.0;
  for (const auto& [x, y] : points) {
    if (!(x > 0.0) || !(y > 0.0))
      throw std::invalid_argument("log-log fit needs positive coordinates");
    sx += std::log(x);
    sy += std::log(y);
  }
  const double n = static_cast<double>(points.size());
  const double mx = sx / n, my = sy / n;
  double sxx = 0.0, sxy = 0.0, ss = 0.0;
  for (const auto& [x, y] : points) {
    const double dx = std::log(x) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(y) - my);
  }
  ScalingFit fit;
  fit.exponent = sxy / sxx;
  for (const auto& [x, y] : points) {
    const double r = (std::log(y) - my) - fit.exponent * (std::log(x) - mx);
    ss += r * r;
  }
  fit.stderr_ = points.size() > 2
                    ? std::sqrt(ss / (n - 2.0) / sxx)
                    : 0.0;
  return fit;
}

ScalingFit fit_scaling(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 4) throw std::invalid_argument("fit_scaling needs >= 4 points");
  double nmin = points.front().first, nmax = points.front().first;
  for (const auto& [x, v] : points) {
    if (!(v > 0.0)) throw std::invalid_argument("fit_scaling needs positive values");
    nmin = std::min(nmin, x);
    nmax = std::max(nmax, x);
  }
  if (nmax < 100.0 * nmin)
    throw std::invalid_argument("fit_scaling needs >= 2 decades of N");
  return loglog_slope(points);
}

}  // namespace sqc::analysis
