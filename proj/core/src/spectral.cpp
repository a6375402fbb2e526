#include "ltmv/spectral.hpp"

#include <cmath>
#include <sstream>

#include "ltmv/errors.hpp"

namespace ltmv {

namespace {

constexpr double kDegenerateD = 1e-14;
constexpr double kMaxCondition = 1e12;
constexpr double kImagTol = 1e-10;

double condition_2x2(const CMat2& m) {
    Eigen::JacobiSVD<CMat2> svd(m);
    const auto& sv = svd.singularValues();
    if (sv[1] == 0.0) return std::numeric_limits<double>::infinity();
    return sv[0] / sv[1];
}

void check_condition(const CMat2& Q, const char* which) {
    const double cond = condition_2x2(Q);
    if (!(cond <= kMaxCondition)) {
        std::ostringstream os;
        os << "latent vectors of " << which << " are nearly parallel (condition " << cond << ")";
        fail(ErrorKind::LatentVectorDegeneracy, os.str());
    }
}

double max_abs_imag(const CMat2& m) { return m.imag().cwiseAbs().maxCoeff(); }

// S = Q diag(l, conj l) Q^-1 with Q = [r, conj r], written out in real arithmetic.
Mat2 conjugate_pair_solvent(Complex l, const CVec2& r) {
    const Complex r1 = r[0];
    const Complex r2 = r[1];
    const Complex r12 = r1 * std::conj(r2);
    const double den = r12.imag();
    require(std::abs(den) > 0.0, ErrorKind::LatentVectorDegeneracy,
            "complex latent vector has linearly dependent real and imaginary parts");
    Mat2 S;
    S(0, 0) = (l * r12).imag();
    S(0, 1) = std::conj(l).imag() * std::norm(r1);
    S(1, 0) = l.imag() * std::norm(r2);
    S(1, 1) = (std::conj(l) * r12).imag();
    return S / den;
}

}  // namespace

const char* to_string(Branch b) noexcept {
    return b == Branch::RealDistinct ? "RealDistinct" : "ComplexConjugate";
}

LambdaMatrixCoeffs LambdaMatrixCoeffs::from(const ElCoefficients& el) {
    return {el.A, el.B, el.C, el.gamma_r2, el.gamma_S2, el.a_nu, el.b_nu, el.rho};
}

EvenQuartic det_quartic(const LambdaMatrixCoeffs& k) {
    const double r2 = k.rho * k.rho;
    return {1.0 - r2, k.gamma_r2 + k.gamma_S2 - r2 * (2.0 * k.a_nu + k.b_nu * k.b_nu),
            k.gamma_r2 * k.gamma_S2 - r2 * k.a_nu * k.a_nu};
}

CVec2 SpectralSolution::eigenvalues(int which) const {
    const CVec2 d = Lambda.diagonal();
    return which == 1 ? d : CVec2(-d);
}

CMat2 lambda_matrix(const LambdaMatrixCoeffs& k, Complex lambda) {
    return k.C.cast<Complex>() * (lambda * lambda) - k.B.cast<Complex>() * lambda -
           k.A.cast<Complex>();
}

double discriminant(const LambdaMatrixCoeffs& k) {
    const double r2 = k.rho * k.rho;
    const double gd = k.gamma_r2 - k.gamma_S2;
    const double gs = k.gamma_r2 + k.gamma_S2;
    const double bb = k.b_nu * k.b_nu;
    const double mid = gs - (2.0 * k.a_nu + bb);
    const double D = (1.0 - r2) * gd * gd + r2 * mid * mid - r2 * (1.0 - r2) * (4.0 * k.a_nu + bb) * bb;
    const double scale = gs * gs;
    if (!(std::abs(D) >= kDegenerateD * scale)) {
        std::ostringstream os;
        os << "D = " << D << " (scale " << scale << ")";
        fail(ErrorKind::DegenerateDiscriminant, os.str());
    }
    return D;
}

LatentRoots latent_roots(const LambdaMatrixCoeffs& k) {
    LatentRoots out;
    out.D = discriminant(k);
    const EvenQuartic q = det_quartic(k);
    const double den = 2.0 * q.c4;
    if (out.D > 0.0) {
        const double sd = std::sqrt(out.D);
        out.branch = Branch::RealDistinct;
        out.lambda_sq = {Complex((q.c2 - sd) / den, 0.0), Complex((q.c2 + sd) / den, 0.0)};
    } else {
        const double sd = std::sqrt(-out.D);
        out.branch = Branch::ComplexConjugate;
        out.lambda_sq = {Complex(q.c2 / den, -sd / den), Complex(q.c2 / den, sd / den)};
    }
    return out;
}

CVec2 latent_vector(const LambdaMatrixCoeffs& k, Complex lambda) {
    const Complex l2 = lambda * lambda;
    const CVec2 upper(k.rho * (l2 - k.a_nu - k.b_nu * lambda), k.gamma_r2 - l2);
    const CVec2 lower(k.gamma_S2 - l2, k.rho * (l2 - k.a_nu + k.b_nu * lambda));
    const double nu = upper.norm();
    const double nl = lower.norm();
    const bool tie = std::abs(nu - nl) <= 1e-12 * std::max(nu, nl);
    const CVec2& r = (tie || nu >= nl) ? upper : lower;
    const double n = r.norm();
    require(n > 0.0, ErrorKind::LatentVectorDegeneracy, "latent vector vanishes");
    return r / n;
}

SpectralSolution solvents(const LambdaMatrixCoeffs& k) {
    const LatentRoots roots = latent_roots(k);
    SpectralSolution sol;
    sol.D = roots.D;
    sol.branch = roots.branch;
    sol.lambda_sq = roots.lambda_sq;

    const Complex l1 = std::sqrt(roots.lambda_sq[0]);
    const Complex l2 = std::sqrt(roots.lambda_sq[1]);
    sol.Lambda = CMat2::Zero();
    sol.Lambda(0, 0) = l1;
    sol.Lambda(1, 1) = l2;

    sol.Q1.col(0) = latent_vector(k, l1);
    sol.Q2.col(0) = latent_vector(k, -l1);
    if (roots.branch == Branch::RealDistinct) {
        sol.Q1.col(1) = latent_vector(k, l2);
        sol.Q2.col(1) = latent_vector(k, -l2);
    } else {
        sol.Q1.col(1) = sol.Q1.col(0).conjugate();
        sol.Q2.col(1) = sol.Q2.col(0).conjugate();
    }
    check_condition(sol.Q1, "S1");
    check_condition(sol.Q2, "S2");
    sol.Q1_inv = sol.Q1.inverse();
    sol.Q2_inv = sol.Q2.inverse();

    const CMat2 S1c = sol.Q1 * sol.Lambda * sol.Q1_inv;
    const CMat2 S2c = sol.Q2 * (-sol.Lambda) * sol.Q2_inv;
    sol.imag_residue = std::max(max_abs_imag(S1c), max_abs_imag(S2c));

    if (roots.branch == Branch::RealDistinct) {
        sol.S1 = S1c.real();
        sol.S2 = S2c.real();
    } else {
        sol.S1 = conjugate_pair_solvent(l1, sol.Q1.col(0));
        sol.S2 = conjugate_pair_solvent(-l1, sol.Q2.col(0));
    }
    const double size = std::max(S1c.norm(), S2c.norm());
    if (!(sol.imag_residue <= kImagTol * std::max(size, 1.0))) {
        std::ostringstream os;
        os << "solvent construction left an imaginary residue of " << sol.imag_residue;
        fail(ErrorKind::InternalConsistency, os.str());
    }
    return sol;
}

double solvent_residual(const LambdaMatrixCoeffs& k, const Mat2& S) {
    return (k.C * S * S - k.B * S - k.A).norm();
}

double solvent_scale(const LambdaMatrixCoeffs& k, const Mat2& S) {
    const double ns = S.norm();
    return k.A.norm() + k.B.norm() * ns + k.C.norm() * ns * ns;
}

Mat2 expm_solvent(const SpectralSolution& sol, int which, double tau) {
    require(which == 1 || which == 2, ErrorKind::DomainError, "solvent index must be 1 or 2");
    if (tau == 0.0) return Mat2::Identity();
    const CVec2 ev = sol.eigenvalues(which);
    CMat2 E = CMat2::Zero();
    E(0, 0) = std::exp(ev[0] * tau);
    E(1, 1) = std::exp(ev[1] * tau);
    const CMat2 M = sol.Q(which) * E * sol.Q_inv(which);
    const double re = M.real().norm();
    if (!(max_abs_imag(M) <= kImagTol * std::max(re, 1e-300))) {
        std::ostringstream os;
        os << "solvent exponential has imaginary residue " << max_abs_imag(M);
        fail(ErrorKind::InternalConsistency, os.str());
    }
    if (sol.branch == Branch::ComplexConjugate) {
        return conjugate_pair_solvent(E(0, 0), sol.Q(which).col(0));
    }
    return M.real();
}

}  // namespace ltmv
