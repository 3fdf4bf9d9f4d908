#pragma once
#include <array>
#include <string>

namespace elastica {

/// Initial state (beta, c, r) of the generalized pendulum; indexes extremals.
struct Covector {
    double beta = 0.0;  ///< pendulum angle, normalized to (-pi, pi]
    double c = 0.0;     ///< angular velocity (curvature of the elastica)
    double r = 0.0;     ///< pendulum constant, r >= 0
};

enum class Stratum { N1, N2plus, N2minus, N3plus, N3minus, N4, N5, N6plus, N6minus, N7 };

std::string to_string(Stratum s);
Stratum stratum_from_string(const std::string& s);

inline bool is_N2(Stratum s) { return s == Stratum::N2plus || s == Stratum::N2minus; }
inline bool is_N3(Stratum s) { return s == Stratum::N3plus || s == Stratum::N3minus; }
inline bool is_N6(Stratum s) { return s == Stratum::N6plus || s == Stratum::N6minus; }
inline bool is_line(Stratum s) { return s == Stratum::N4 || s == Stratum::N5 || s == Stratum::N7; }

/// Rectifying coordinates. In N2 `phi` holds psi = phi / k.
struct EllipticCoords {
    Stratum stratum = Stratum::N1;
    double k = 0.0;
    double phi = 0.0;
    double r = 0.0;
};

constexpr double kDefaultStratTol = 1e-9;

/// Angle wrapped to (-pi, pi].
double wrap_angle(double a);

double energy(const Covector& lam);
Stratum stratify(const Covector& lam, double tol = kDefaultStratTol);

/// Coordinates with phi reduced to [0, period). Throws UnsupportedStratum
/// outside N1, N2, N3.
EllipticCoords to_elliptic(const Covector& lam, double tol = kDefaultStratTol);
Covector from_elliptic(const EllipticCoords& ec);

/// Period of the pendulum motion in time t; +inf on N3.
double period(const EllipticCoords& ec);
double period(const Covector& lam, double tol = kDefaultStratTol);

Covector flow_vertical(const Covector& lam, double t, double tol = kDefaultStratTol);

/// (h1, h2, h3) = (-r cos beta, c, -r sin beta).
std::array<double, 3> to_h(const Covector& lam);

} // namespace elastica
