#pragma once

#include <cmath>

namespace lens {

enum class LensVariant { kDesign1, kDesign2 };

/// EM lens description: aperture on the y-axis, antennas on the focal arc.
/// Design 1 focuses a perpendicular plane wave onto [F, 0]; Design 2 focuses a
/// spherical wave launched from the left focal point at distance F0.
struct LensDesign {
  LensVariant variant = LensVariant::kDesign2;
  double aperture = 1.0;      // D_y, m
  double focal_radius = 5.0;  // F, m
  double left_focal = 5.0;    // F0, m (Design 2 only)
  double wavelength = 0.01;   // m

  static LensDesign design1(double aperture, double focal_radius, double wavelength);
  static LensDesign design2(double aperture, double focal_radius, double left_focal,
                            double wavelength);

  double electrical_aperture() const { return aperture / wavelength; }
  double wavenumber() const { return 2.0 * M_PI / wavelength; }
  void validate() const;
};

enum class ArrayKind { kLensFocalArc, kUlaHalfWavelength };

/// Antenna placement. Lens focal-arc sampling follows sin(theta_n) = n/N with
/// N_a = 2 floor(D_y/lambda) + 1; the ULA uses half-wavelength spacing along y.
struct ArrayGeometry {
  ArrayKind kind = ArrayKind::kLensFocalArc;
  int n_antennas = 0;     // odd
  double spacing = 0.0;   // ULA element pitch, m
  double wavelength = 0.0;

  static ArrayGeometry lens_focal_arc(const LensDesign& design);
  static ArrayGeometry ula_half_wavelength(double wavelength, int n_antennas);

  int half_count() const { return (n_antennas - 1) / 2; }
  /// Beamspace coordinate of antenna n (n in [-N, N], lens arrays only).
  double sin_theta(int n) const { return static_cast<double>(n) / half_count(); }
};

/// Point source in front of the lens at polar coordinates (d, phi).
struct SourcePoint {
  double d = 0.0;    // m
  double phi = 0.0;  // rad, in (-pi/2, pi/2)

  void validate() const;
  double x() const { return -d * std::cos(phi); }
  double y() const { return d * std::sin(phi); }
};

/// Energy-focusing window in sin(theta) units: exact erf-zero edges plus the
/// closed-form center/width approximations.
struct WindowDescriptor {
  double v1 = 0.0;  // zero of the first erf term
  double v2 = 0.0;  // zero of the second erf term
  double center = 0.0;
  double width = 0.0;
  double center_approx = 0.0;  // sin(phi)
  double width_approx = 0.0;
};

/// Fixed phase shift applied by the lens at aperture position y, normalized so
/// the reference phase at the focus is 2*pi.
double lens_phase_profile(const LensDesign& design, double y);

/// Quadratic phase-curvature coefficient across the aperture (1/m).
double alpha(const LensDesign& design, double sin_theta, const SourcePoint& source);

/// Linear phase-slope coefficient (sin(theta) - sin(phi)) / lambda (1/m).
double beta(double sin_theta, double phi, double wavelength);

/// Near/far-field boundary 2 D^2 / lambda.
double rayleigh_distance(double aperture, double wavelength);

}  // namespace lens
