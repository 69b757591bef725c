#pragma once

#include <array>

namespace tgrec {

/// Cubic reaction kinetics and the affine change of variables between the
/// physical transmembrane potential (mV) and the nondimensional one.
///
/// The cubic is f(u) = a2 * (u - u1) * (u - u2) * (u - u3) with
/// u1 < u2 < u3. In the rescaled variables the resting state is u1 and the
/// excited plateau is u3; both are roots, so they are exact equilibria of
/// the reaction step.
struct IonicParams {
    double a2 = 0.2;   // squared amplitude factor of the cubic
    double u1 = 0.0;   // resting value
    double u2 = 0.15;  // threshold
    double u3 = 1.0;   // plateau value

    // Membrane constants of the physical model. The solvers integrate the
    // rescaled equation directly, so these are carried only for reporting.
    double nu = 500.0;
    double cm = 0.1;

    // Rescaling u_adim = (alpha + u_mV) / beta, mapping [-85, 40] mV onto [0, 1].
    double alpha = 85.0;
    double beta = 125.0;

    void validate() const;  // throws std::invalid_argument
};

double ionic_f(const IonicParams& p, double u);
double ionic_f_prime(const IonicParams& p, double u);

/// Locations of the local extrema of the cubic (roots of f'), ascending.
std::array<double, 2> ionic_extrema(const IonicParams& p);

double rescale_to_adim(const IonicParams& p, double u_mV);
double rescale_to_mV(const IonicParams& p, double u_adim);

}  // namespace tgrec
