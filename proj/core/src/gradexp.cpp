#include "cnull/gradexp.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <memory>

#include "cnull/error.hpp"
#include "cnull/json_io.hpp"
#include "cnull/proper_map.hpp"
#include "cnull/random.hpp"
#include "cnull/variety.hpp"

namespace cnull {

namespace {

constexpr int kProfileDraws = 3;
constexpr long kGenericHeight = 100;

}  // namespace

std::vector<MPoly> gradient(const MPoly& f) {
  std::vector<MPoly> out;
  for (std::size_t i = 0; i < f.var_count(); ++i) out.push_back(f.derivative(i));
  return out;
}

GradProfile grad_profile(const MPoly& f, std::uint64_t seed, unsigned prec) {
  const std::size_t m = f.var_count();
  if (m < 1 || m > 2) throw Error(ErrorKind::Unsupported, "gradient profile needs m <= 2 variables");
  auto domain = std::make_shared<const Variety>(affine_space(indexed_names("x", m)));
  const CAMap grad = CAMap::polynomial(domain, gradient(f));
  const auto witness = properness_witness(grad);
  if (!witness.proper) throw Error(ErrorKind::NotProper, "gradient map is not proper: " + witness.evidence);

  GradProfile out;
  std::optional<std::size_t> common;
  for (int draw = 0; draw < kProfileDraws; ++draw) {
    Rng rng(seed, {stream::kFiberSample, 0x100u + static_cast<std::uint64_t>(draw)});
    std::vector<Rat> y;
    for (std::size_t i = 0; i < m; ++i) y.push_back(rng.rational(kGenericHeight));
    std::size_t total = 0;
    for (const auto& lm : local_multiplicities(grad, y, seed, prec)) total += static_cast<std::size_t>(lm.multiplicity);
    if (common && *common != total) throw Error(ErrorKind::PrecisionExhausted, "gradient fibre counts are unstable");
    common = total;
  }
  out.mu = *common;
  if (out.mu == 0) throw Error(ErrorKind::NotProper, "generic gradient fibre is empty");
  out.D = graph_degree(grad, seed, prec);
  return out;
}

Rat theta(long d, long D, long mu) {
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "d must be at least 1");
  if (mu < 1 || D < mu) throw Error(ErrorKind::InvalidArgument, "need D >= mu >= 1");
  Rat r(1, d * (D - mu + 1));
  r.canonicalize();
  return r;
}

ShellValidation validate_inequality(const MPoly& f, const Rat& theta_value, const std::vector<double>& shells,
                                    int samples_per_shell, std::uint64_t seed) {
  if (theta_value <= 0 || theta_value > 1) throw Error(ErrorKind::InvalidArgument, "theta must lie in (0, 1]");
  if (samples_per_shell < 1) throw Error(ErrorKind::InvalidArgument, "need at least one sample per shell");
  if (shells.size() < 2) throw Error(ErrorKind::InvalidArgument, "need at least two shells");
  const std::size_t m = f.var_count();
  const auto grad = gradient(f);
  const double th = theta_value.get_d();

  ShellValidation out;
  for (std::size_t s = 0; s < shells.size(); ++s) {
    Rng rng(seed, {stream::kShells, static_cast<std::uint64_t>(s)});
    ShellResult shell{shells[s], 0.0};
    int accepted = 0;
    int drawn = 0;
    while (accepted < samples_per_shell) {
      if (++drawn > 10 * samples_per_shell) {
        throw Error(ErrorKind::DivisionByZeroGradient, "gradient vanished on too many samples");
      }
      std::vector<std::complex<double>> x(m);
      double norm = 0.0;
      for (auto& v : x) {
        v = rng.normal();
        norm += std::norm(v);
      }
      if (norm == 0.0) continue;
      norm = std::sqrt(norm);
      for (auto& v : x) v *= shells[s] / norm;
      double grad_norm = 0.0;
      for (const auto& g : grad) grad_norm += std::norm(g.evaluate(std::span<const std::complex<double>>(x)));
      grad_norm = std::sqrt(grad_norm);
      if (grad_norm == 0.0) continue;
      const double value = std::abs(f.evaluate(std::span<const std::complex<double>>(x)));
      shell.max_ratio = std::max(shell.max_ratio, std::pow(value, th) / grad_norm);
      ++accepted;
    }
    out.c = std::max(out.c, shell.max_ratio);
    out.shells.push_back(shell);
  }
  const double top = out.shells.back().max_ratio;
  const double prev = out.shells[out.shells.size() - 2].max_ratio;
  out.validated = top <= 2.0 * prev;
  return out;
}

GradExpReport gradexp_report(const MPoly& f, std::uint64_t seed, unsigned prec, const std::vector<double>& shells,
                             int samples_per_shell) {
  GradExpReport r;
  const auto deg = f.total_degree();
  if (!deg || *deg < 1) throw Error(ErrorKind::NotProper, "constant polynomial has a constant gradient");
  r.d = *deg;
  r.profile = grad_profile(f, seed, prec);
  r.theta = theta(r.d, static_cast<long>(r.profile.D), static_cast<long>(r.profile.mu));
  r.validation = validate_inequality(f, r.theta, shells, samples_per_shell, seed);
  return r;
}

nlohmann::json gradexp_to_json(const GradExpReport& r) {
  nlohmann::json shells = nlohmann::json::array();
  for (const auto& s : r.validation.shells) shells.push_back({{"norm", s.norm}, {"max_ratio", s.max_ratio}});
  return {{"d", r.d},
          {"mu", r.profile.mu},
          {"D", r.profile.D},
          {"theta", format_rat(r.theta)},
          {"theta_float", r.theta.get_d()},
          {"validated", r.validation.validated},
          {"max_ratio_C", r.validation.c},
          {"shells", shells}};
}

}  // namespace cnull
