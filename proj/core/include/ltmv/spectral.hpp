#pragma once

// Quadratic lambda-matrix C l^2 - B l - A of the Euler-Lagrange equation,
// its latent roots and vectors, and the two real solvents built from them.

#include <array>

#include "ltmv/types.hpp"
#include "ltmv/variational.hpp"

namespace ltmv {

enum class Branch { RealDistinct, ComplexConjugate };

const char* to_string(Branch b) noexcept;

struct LambdaMatrixCoeffs {
    Mat2 A;
    Mat2 B;
    Mat2 C;
    double gamma_r2{};
    double gamma_S2{};
    double a_nu{};
    double b_nu{};
    double rho{};

    static LambdaMatrixCoeffs from(const ElCoefficients& el);
};

/// det(C l^2 - B l - A) = c4 l^4 - c2 l^2 + c0 (odd powers vanish).
struct EvenQuartic {
    double c4{};
    double c2{};
    double c0{};
};

EvenQuartic det_quartic(const LambdaMatrixCoeffs& k);

struct LatentRoots {
    double D{};
    std::array<Complex, 2> lambda_sq;  ///< ordered so that lambda_sq[0] uses -sqrt(D)
    Branch branch{};
};

struct SpectralSolution {
    double D{};
    std::array<Complex, 2> lambda_sq;
    CMat2 Lambda;  ///< diag of principal roots
    CMat2 Q1, Q2;
    CMat2 Q1_inv, Q2_inv;
    Mat2 S1, S2;
    Branch branch{};
    double imag_residue{};  ///< largest |Im| of Q diag Q^-1 before truncation

    const CMat2& Q(int which) const { return which == 1 ? Q1 : Q2; }
    const CMat2& Q_inv(int which) const { return which == 1 ? Q1_inv : Q2_inv; }
    const Mat2& S(int which) const { return which == 1 ? S1 : S2; }
    /// Eigenvalues of S_which: (l1, l2) for which = 1, (-l1, -l2) for which = 2.
    CVec2 eigenvalues(int which) const;
};

CMat2 lambda_matrix(const LambdaMatrixCoeffs& k, Complex lambda);

/// Throws DegenerateDiscriminant when |D| < 1e-14 (gamma_r^2 + gamma_S^2)^2.
double discriminant(const LambdaMatrixCoeffs& k);

LatentRoots latent_roots(const LambdaMatrixCoeffs& k);

/// Unit right latent vector of lambda: the larger of the two row null vectors.
CVec2 latent_vector(const LambdaMatrixCoeffs& k, Complex lambda);

SpectralSolution solvents(const LambdaMatrixCoeffs& k);

/// ||C S^2 - B S - A||_F
double solvent_residual(const LambdaMatrixCoeffs& k, const Mat2& S);
/// ||A|| + ||B|| ||S|| + ||C|| ||S||^2 (Frobenius)
double solvent_scale(const LambdaMatrixCoeffs& k, const Mat2& S);

/// exp(S_which tau) from the spectral factors.
Mat2 expm_solvent(const SpectralSolution& sol, int which, double tau);

}  // namespace ltmv
