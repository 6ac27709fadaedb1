#pragma once

// Spectral exterior calculus on the flat torus R^4 / (2 pi Z)^4, truncated to
// frequencies |n_i| <= N. Forms use the coordinate basis dx^I with I sorted;
// on the flat torus this basis is orthonormal and the orientation is
// dx1^dx2^dx3^dx4.

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace sfk::asdcalc {

using Complex = std::complex<double>;
using Mode = std::array<int, 4>;

/// Number of components of a degree-p form in four dimensions.
int componentCount(int degree);
/// Bitmask (bit i for dx^{i+1}) of component c of a degree-p form.
unsigned componentMask(int degree, int c);

class FourierForm {
 public:
  FourierForm(int degree, int truncation);

  static FourierForm random(int degree, int truncation, std::mt19937_64& rng, bool real = false);

  int degree() const { return degree_; }
  int truncation() const { return N_; }
  int modeCount() const { return modes_; }
  int components() const { return comps_; }
  Mode mode(int index) const;
  int modeIndex(const Mode& n) const;  // -1 outside the truncation

  Complex& at(int mode, int comp) { return c_[static_cast<size_t>(mode * comps_ + comp)]; }
  Complex at(int mode, int comp) const { return c_[static_cast<size_t>(mode * comps_ + comp)]; }
  std::vector<Complex>& data() { return c_; }
  const std::vector<Complex>& data() const { return c_; }

  FourierForm operator+(const FourierForm& o) const;
  FourierForm operator-(const FourierForm& o) const;
  FourierForm operator*(Complex s) const;
  double maxAbs() const;
  /// Coefficient at -n equals the conjugate of the coefficient at n.
  bool isReal(double tol = 1e-14) const;

 private:
  int degree_, N_, modes_, comps_;
  std::vector<Complex> c_;
};

/// L^2 pairing normalized by the torus volume: sum over modes and components of conj(a) b.
Complex inner(const FourierForm& a, const FourierForm& b);

/// Throws InvalidArgument for degree 4.
FourierForm exteriorD(const FourierForm& f);
FourierForm hodgeStar(const FourierForm& f);
/// -* d *; throws InvalidArgument for degree 0.
FourierForm codifferential(const FourierForm& f);

struct SdSplit {
  FourierForm plus;
  FourierForm minus;
};
/// (1 +- *) / 2. Throws InvalidArgument unless degree 2.
SdSplit sdProject(const FourierForm& f);

/// Orthonormal bases of Lambda^+ and Lambda^- as 6-vectors in the dx^I basis.
const std::array<std::array<double, 6>, 3>& selfDualBasis();
const std::array<std::array<double, 6>, 3>& antiSelfDualBasis();

/// Constant-coefficient curvature terms of S(a) = d+ delta a + Phi a - (rho, a) omega / 2.
/// Both vanish on the flat torus.
struct CurvatureHooks {
  Eigen::Matrix3d phi = Eigen::Matrix3d::Zero();    // Lambda^- -> Lambda^+ in the bases above
  std::array<double, 6> rho{0, 0, 0, 0, 0, 0};      // constant 2-form
};

/// Block diagonal operator, one block per frequency, in the order of
/// FourierForm mode indices.
class OperatorMatrix {
 public:
  OperatorMatrix(int truncation, std::vector<Eigen::MatrixXcd> blocks);

  int truncation() const { return N_; }
  const std::vector<Eigen::MatrixXcd>& blocks() const { return blocks_; }
  Eigen::Index rows() const;
  Eigen::Index cols() const;
  Eigen::MatrixXcd dense() const;

  /// Sorted descending, concatenated over blocks.
  std::vector<double> singularValues() const;
  int rank(double threshold = 1e-10) const;
  int kernelDimension(double threshold = 1e-10) const;
  int cokernelDimension(double threshold = 1e-10) const;

 private:
  int N_;
  std::vector<Eigen::MatrixXcd> blocks_;
};

/// S = d+ delta on ASD forms, in ASD / SD basis coordinates. Throws InvalidArgument for N < 1.
OperatorMatrix operatorS(int truncation, const CurvatureHooks& hooks = {});
/// S* = d- delta on SD forms, assembled independently of operatorS.
OperatorMatrix operatorSAdjoint(int truncation, const CurvatureHooks& hooks = {});

/// S applied to a 2-form through the FourierForm operations (its ASD part is used).
FourierForm applyS(const FourierForm& alpha, const CurvatureHooks& hooks = {});
FourierForm applySAdjoint(const FourierForm& psi, const CurvatureHooks& hooks = {});

/// max entry of |S* - S^H| over blocks.
double adjointResidual(const OperatorMatrix& s, const OperatorMatrix& sAdjoint);

/// max |sv_global - sv_blocks| with the global matrix decomposed densely.
double globalVersusBlockSingularValues(const OperatorMatrix& op);

struct SubspaceComparison {
  int dimFirst = 0;
  int dimSecond = 0;
  double containmentResidual = 0.0;
  bool equal = false;
};
/// ker d+ versus ker d on 1-forms.
SubspaceComparison dPlusKernelEqualsClosed(int truncation);

/// dim ker Delta^2 on functions, on mean-zero functions unless includeConstants.
int lichnerowiczKernel(int truncation, bool includeConstants = false);

struct KernelCorrespondence {
  int kernelSPrime = 0;  // on closed real (1,1)-forms with mean-zero trace
  int kernelS = 0;
  bool injective = false;
  double imageResidual = 0.0;  // max |S phi_0| over the image basis
};
KernelCorrespondence kernelCorrespondence(int truncation);

struct AsdIndexReport {
  int truncation = 0;
  int kernel = 0;
  int cokernel = 0;
  int index = 0;
  int kernelAdjoint = 0;
  double adjointMatrixResidual = 0.0;
  double adjointPairingResidual = 0.0;
  double codifferentialPairingResidual = 0.0;
  double smallestNonzeroSingularValue = 0.0;
  SubspaceComparison closedVersusDPlus;
  KernelCorrespondence correspondence;
  int lichnerowicz = 0;
};
/// Every check of this module at one truncation; random pairs use the given seed.
AsdIndexReport asdIndex(int truncation, std::uint64_t seed = 1);

}  // namespace sfk::asdcalc
