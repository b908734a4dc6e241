#include "nsurf/hyperbolic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nsurf {

double circumradius(long long g) {
    if (g < 2) throw std::domain_error("genus must be at least 2");
    double a = std::numbers::pi / (4.0 * static_cast<double>(g));
    double cot = std::cos(a) / std::sin(a);
    return std::acosh(cot * cot);
}

double visual_angle(double L) {
    if (L < 0) throw std::domain_error("distance must be nonnegative");
    return 2.0 * std::asin(1.0 / std::cosh(L));
}

RotationCertificate verify_rotation_bound(long long g) {
    RotationCertificate cert;
    cert.g = g;
    cert.circumradius = circumradius(g);
    cert.theta_at_half_r = visual_angle(cert.circumradius / 2.0);
    cert.threshold = 2.0 * std::numbers::pi / (4.0 * static_cast<double>(g));
    cert.margin = cert.theta_at_half_r - cert.threshold;
    // The visual angle decreases in the distance, so a margin at R/2
    // certifies every geodesic within R/2 of the center.
    cert.pass = cert.margin > 0;
    return cert;
}

}  // namespace nsurf
