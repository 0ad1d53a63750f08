#include "lensarray/geometry.hpp"

#include <stdexcept>

namespace lens {

LensDesign LensDesign::design1(double aperture, double focal_radius, double wavelength) {
  LensDesign d;
  d.variant = LensVariant::kDesign1;
  d.aperture = aperture;
  d.focal_radius = focal_radius;
  d.left_focal = 0.0;
  d.wavelength = wavelength;
  d.validate();
  return d;
}

LensDesign LensDesign::design2(double aperture, double focal_radius, double left_focal,
                               double wavelength) {
  LensDesign d;
  d.variant = LensVariant::kDesign2;
  d.aperture = aperture;
  d.focal_radius = focal_radius;
  d.left_focal = left_focal;
  d.wavelength = wavelength;
  d.validate();
  return d;
}

void LensDesign::validate() const {
  if (!(aperture > 0.0)) throw std::invalid_argument("LensDesign: aperture must be > 0");
  if (!(focal_radius > 0.0))
    throw std::invalid_argument("LensDesign: focal_radius must be > 0");
  if (!(wavelength > 0.0))
    throw std::invalid_argument("LensDesign: wavelength must be > 0");
  if (variant == LensVariant::kDesign2 && !(left_focal > 0.0))
    throw std::invalid_argument("LensDesign: left_focal must be > 0 for Design 2");
  if (electrical_aperture() < 1.0)
    throw std::invalid_argument("LensDesign: electrical aperture D_y/lambda must be >= 1");
}

ArrayGeometry ArrayGeometry::lens_focal_arc(const LensDesign& design) {
  design.validate();
  ArrayGeometry g;
  g.kind = ArrayKind::kLensFocalArc;
  const int half = static_cast<int>(std::floor(design.electrical_aperture()));
  g.n_antennas = 2 * half + 1;
  g.spacing = 0.0;
  g.wavelength = design.wavelength;
  return g;
}

ArrayGeometry ArrayGeometry::ula_half_wavelength(double wavelength, int n_antennas) {
  if (!(wavelength > 0.0))
    throw std::invalid_argument("ArrayGeometry: wavelength must be > 0");
  if (n_antennas < 1 || n_antennas % 2 == 0)
    throw std::invalid_argument("ArrayGeometry: n_antennas must be odd and positive");
  ArrayGeometry g;
  g.kind = ArrayKind::kUlaHalfWavelength;
  g.n_antennas = n_antennas;
  g.spacing = 0.5 * wavelength;
  g.wavelength = wavelength;
  return g;
}

void SourcePoint::validate() const {
  if (!(d > 0.0)) throw std::invalid_argument("SourcePoint: d must be > 0");
  if (!(std::abs(phi) < M_PI / 2.0))
    throw std::invalid_argument("SourcePoint: phi must lie in (-pi/2, pi/2)");
}

double lens_phase_profile(const LensDesign& design, double y) {
  if (std::abs(y) > design.aperture / 2.0)
    throw std::invalid_argument("lens_phase_profile: position outside the aperture");
  const double k0 = design.wavenumber();
  const double arc_leg = std::hypot(design.focal_radius, y);
  if (design.variant == LensVariant::kDesign1) {
    return 2.0 * M_PI - k0 * arc_leg;
  }
  const double feed_leg = std::hypot(design.left_focal, y);
  const double phi0 = 2.0 * M_PI + k0 * design.left_focal;
  return phi0 - k0 * (feed_leg + arc_leg);
}

double alpha(const LensDesign& design, double sin_theta, const SourcePoint& source) {
  if (std::abs(sin_theta) > 1.0)
    throw std::invalid_argument("alpha: |sin_theta| must be <= 1");
  const double c = std::cos(source.phi);
  double a = M_PI * sin_theta * sin_theta / (design.wavelength * design.focal_radius) -
             M_PI * c * c / (design.wavelength * source.d);
  if (design.variant == LensVariant::kDesign2)
    a += M_PI / (design.wavelength * design.left_focal);
  return a;
}

double beta(double sin_theta, double phi, double wavelength) {
  if (std::abs(sin_theta) > 1.0)
    throw std::invalid_argument("beta: |sin_theta| must be <= 1");
  return (sin_theta - std::sin(phi)) / wavelength;
}

double rayleigh_distance(double aperture, double wavelength) {
  if (!(aperture > 0.0) || !(wavelength > 0.0))
    throw std::invalid_argument("rayleigh_distance: aperture and wavelength must be > 0");
  return 2.0 * aperture * aperture / wavelength;
}

}  // namespace lens
