#pragma once

namespace taylormeans {

// Every numeric knob in one place so the CLI, the tests and the demos all
// pin identical values.
struct Tolerances {
    // Relative backward error |p(z)| / sum_i |c_i||z|^i accepted from the
    // root solver.  Scale-free: an absolute |p(z)| threshold would mean
    // nothing across coefficient magnitudes spanning 1e-2 .. 1e20.
    double root_residual = 1e-9;

    // |Im z| below pairing * max(1, |z|) snaps a root to the real axis; the
    // same relative radius is used when matching conjugate partners.
    double pairing = 1e-9;

    // Accepted normalized intersection residual for a reported mean: the
    // defining integral divided by the integral of the absolute integrand.
    double mean_residual = 1e-8;

    // Relative slack for identity cross-checks (closed form vs root solve,
    // average of real parts vs center of mass, ...).
    double identity_rel = 1e-9;

    // Agreement demanded between two independent float constructions of the
    // same polynomial.
    double dual_route_rel = 1e-10;

    // Adaptive quadrature targets; hitting max_depth raises QuadratureError
    // rather than returning a silent low-quality value.
    double quadrature_abs = 1e-12;
    double quadrature_rel = 1e-14;
    int quadrature_max_depth = 52;

    // Dead band (relative to max(1,|a|,|b|)) when classifying a root as
    // strictly inside (a,b): a root sitting on the boundary up to solver
    // noise must classify as "outside" deterministically.
    double interval_band = 1e-12;
};

}  // namespace taylormeans
