#pragma once

#include <string>
#include <vector>

namespace dfsbary {

enum class SphereGridKind { EQ, SEQ, GL };
enum class DiskGridKind { CH1, CH2, GLRadial };

/// Tensor-product latitude-longitude grid on the unit sphere.
/// Longitudes are always the 2m equally spaced points phi_k = pi*k/m.
/// Colatitudes are strictly increasing in [0, pi]:
///   EQ  : theta_j = pi*j/(n-1), poles included (requires n >= 2)
///   SEQ : theta_j = pi*(j+1/2)/n, no pole is a node
///   GL  : theta_j = arccos(z_j) with z_j the degree-n Legendre roots
struct SphereGrid {
  SphereGridKind kind = SphereGridKind::EQ;
  int m = 0;  // half the longitude count
  int n = 0;  // latitude count
  std::vector<double> phi;
  std::vector<double> theta;
};

SphereGrid make_sphere_grid(SphereGridKind kind, int m, int n);

/// Tensor-product polar grid on the unit disk.  Angles are the 2m points
/// pi*k/m; the n+1 radii are strictly decreasing in [0, 1]:
///   CH1      : rho_j = cos((j+1/2)*pi/(ell+1))
///   CH2      : rho_j = cos(j*pi/ell)
///   GLRadial : nonnegative roots of the degree-(ell+1) Legendre polynomial
/// with ell = 2n when the origin is included (rho_n = 0) and ell = 2n+1
/// otherwise.
struct DiskGrid {
  DiskGridKind kind = DiskGridKind::CH2;
  int m = 0;
  int n = 0;
  bool include_origin = true;
  int ell = 0;
  std::vector<double> phi;
  std::vector<double> rho;
};

DiskGrid make_disk_grid(DiskGridKind kind, int m, int n, bool include_origin);

std::string to_string(SphereGridKind kind);
std::string to_string(DiskGridKind kind);

/// Parses the CLI grid names: eq | seq | gl and ch1 | ch2 | glr.
/// Returns false if the name does not denote a grid of that geometry.
bool parse_sphere_grid_kind(const std::string& name, SphereGridKind& out);
bool parse_disk_grid_kind(const std::string& name, DiskGridKind& out);

}  // namespace dfsbary
