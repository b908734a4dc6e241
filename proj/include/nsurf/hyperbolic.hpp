#pragma once

namespace nsurf {

// Hyperbolic trigonometry for the rotation of the regular 4g-gon with
// vertex angle 2*pi/4g, g >= 2.  All angles in radians.

// Circumradius R of the polygon: cosh(R) = cot^2(pi/4g).
double circumradius(long long g);

// Visual angle subtended at the center by a geodesic at distance L >= 0:
// theta = 2 asin(1 / cosh(L)); theta(0) = pi, strictly decreasing.
double visual_angle(double L);

// Certificate that any geodesic within R/2 of the center subtends more
// than the rotation angle 2*pi/4g, hence meets its rotated image.
struct RotationCertificate {
    long long g = 0;
    double circumradius = 0;     // R
    double theta_at_half_r = 0;  // visual angle at distance R/2
    double threshold = 0;        // rotation angle 2*pi/4g
    double margin = 0;           // theta_at_half_r - threshold
    bool pass = false;
};

RotationCertificate verify_rotation_bound(long long g);

}  // namespace nsurf
