#pragma once

namespace elastica {

/// Values of the Jacobi functions at (u, k).
struct JacobiValues {
    double sn = 0.0;
    double cn = 1.0;
    double dn = 1.0;
    double am = 0.0;   ///< amplitude, continuous in u
    double eps = 0.0;  ///< Jacobi epsilon E(u) = int_0^u dn^2
};

struct JacobiDerivsK {
    double dsn_dk = 0.0;
    double dcn_dk = 0.0;
    double ddn_dk = 0.0;
    double deps_dk = 0.0;
};

/// sqrt(1 - k^2), computed as sqrt((1-k)(1+k)).
double kcomplement(double k);

/// Complete integral of the first kind. Throws DivergenceError at k = 1.
double ellint_K(double k);
/// Complete integral of the second kind, k in [0, 1].
double ellint_E(double k);

/// dK/dk and dE/dk on (0, 1).
double ellint_dK_dk(double k);
double ellint_dE_dk(double k);

/// Incomplete integrals F(phi, k), E(phi, k) for any real phi.
double ellint_F_inc(double phi, double k);
double ellint_E_inc(double phi, double k);

/// sn, cn, dn, am and eps at (u, k), k in [0, 1].
JacobiValues jacobi(double u, double k);

/// Map values at (w, k) to values at (k w, 1/k). Valid for any k > 0, so
/// applying it with k and then 1/k returns the input.
JacobiValues recip_transform(const JacobiValues& v, double w, double k);

/// Values of the functions of modulus 1/k at argument u, k in (0, 1].
JacobiValues jacobi_recip_modulus(double u, double k);

/// Values at u + v from the addition theorems.
JacobiValues jacobi_add(double u, double v, double k);

/// Partial derivatives in k of sn, cn, dn, eps at fixed u, k in (0, 1).
JacobiDerivsK jacobi_derivs_k(double u, double k);

} // namespace elastica
