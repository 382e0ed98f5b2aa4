#pragma once

namespace qduality {

// Central numerical tolerance record. Every validity check and inequality
// verdict in the library draws its threshold from here.
struct Tolerances {
    // Hermiticity defect, trace deviation, eigenvalue floor and 2x2
    // principal-submatrix allowance used when validating states.
    double validation = 1e-10;
    // Slack floor for inequalities evaluated in closed form.
    double exact = 1e-10;
    // Slack floor for anything that passes through the iterative eigensolver.
    double spectral = 1e-8;
    // Largest imaginary residue tolerated on coefficients that must be real.
    double component_imag = 1e-12;
    // Eigensolver convergence: off-diagonal Frobenius norm threshold.
    double jacobi_off = 1e-12;
};

}  // namespace qduality
