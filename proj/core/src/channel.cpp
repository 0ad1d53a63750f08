#include "lensarray/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "lensarray/response.hpp"
#include "lensarray/rng.hpp"

namespace lens {

UserChannel build_channel(const LensDesign& design, const ArrayGeometry& geom,
                          const std::vector<PathParams>& paths) {
  if (paths.empty()) throw std::invalid_argument("build_channel: paths must be nonempty");
  UserChannel ch;
  ch.paths = paths;
  ch.h = Eigen::VectorXcd::Zero(geom.n_antennas);
  for (const PathParams& p : paths) {
    const SourcePoint src{p.d, p.phi};
    if (geom.kind == ArrayKind::kLensFocalArc) {
      ch.h += p.gain * response_vector(design, geom, src);
    } else {
      ch.h += p.gain * ula_response_vector(geom, src);
    }
  }
  return ch;
}

Eigen::VectorXcd synthesize_received(const Eigen::VectorXcd& h, double noise_var,
                                     std::uint64_t seed) {
  if (noise_var < 0.0)
    throw std::invalid_argument("synthesize_received: noise_var must be >= 0");
  if (noise_var == 0.0) return h;
  return h + sample_complex_gaussian(static_cast<int>(h.size()), noise_var, seed);
}

double receive_snr_db(const Eigen::VectorXcd& h, double noise_var) {
  if (!(noise_var > 0.0))
    throw std::invalid_argument("receive_snr_db: noise_var must be > 0");
  return 10.0 * std::log10(h.squaredNorm() / (static_cast<double>(h.size()) * noise_var));
}

double noise_var_for_target_snr(const Eigen::VectorXcd& h, double snr_db) {
  const double energy = h.squaredNorm();
  if (!(energy > 0.0))
    throw std::invalid_argument("noise_var_for_target_snr: channel is zero");
  return energy / (static_cast<double>(h.size()) * std::pow(10.0, snr_db / 10.0));
}

Eigen::VectorXcd multiuser_received(const std::vector<UserChannel>& channels,
                                    const std::vector<double>& powers,
                                    const std::vector<std::complex<double>>& symbols,
                                    double noise_var, std::uint64_t seed) {
  if (channels.size() != powers.size() || channels.size() != symbols.size())
    throw std::invalid_argument("multiuser_received: channels/powers/symbols length mismatch");
  if (channels.empty())
    throw std::invalid_argument("multiuser_received: needs at least one user");
  const Eigen::Index n = channels.front().h.size();
  Eigen::VectorXcd r = Eigen::VectorXcd::Zero(n);
  for (std::size_t k = 0; k < channels.size(); ++k) {
    if (channels[k].h.size() != n)
      throw std::invalid_argument("multiuser_received: channel length mismatch");
    if (powers[k] < 0.0)
      throw std::invalid_argument("multiuser_received: powers must be >= 0");
    r += std::sqrt(powers[k]) * symbols[k] * channels[k].h;
  }
  if (noise_var > 0.0)
    r += sample_complex_gaussian(static_cast<int>(n), noise_var, seed);
  return r;
}

}  // namespace lens
