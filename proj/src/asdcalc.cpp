#include "sfk/asdcalc.hpp"

#include "sfk/error.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace sfk::asdcalc {

namespace {

const std::vector<unsigned>& masks(int degree) {
  static const std::array<std::vector<unsigned>, 5> table = [] {
    std::array<std::vector<unsigned>, 5> t;
    // Lexicographic order of the sorted index tuples.
    std::vector<std::vector<int>> tuples{{}};
    for (int p = 0; p <= 4; ++p) {
      std::vector<std::vector<int>> next;
      for (const auto& tup : tuples) {
        unsigned m = 0;
        for (int i : tup) m |= 1u << i;
        t[static_cast<size_t>(p)].push_back(m);
        for (int i = tup.empty() ? 0 : tup.back() + 1; i < 4; ++i) {
          auto more = tup;
          more.push_back(i);
          next.push_back(more);
        }
      }
      tuples = next;
    }
    return t;
  }();
  return table[static_cast<size_t>(degree)];
}

int compOf(int degree, unsigned mask) {
  const auto& m = masks(degree);
  return static_cast<int>(std::find(m.begin(), m.end(), mask) - m.begin());
}

void requireDegree(int degree) {
  if (degree < 0 || degree > 4) fail(ErrorCode::InvalidArgument, "form degree must lie in 0..4");
}

// Sign of the permutation that sorts (I, complement of I).
int starSign(unsigned mask) {
  std::vector<int> seq;
  for (int i = 0; i < 4; ++i)
    if (mask & (1u << i)) seq.push_back(i);
  for (int i = 0; i < 4; ++i)
    if (!(mask & (1u << i))) seq.push_back(i);
  int inversions = 0;
  for (size_t a = 0; a < seq.size(); ++a)
    for (size_t b = a + 1; b < seq.size(); ++b)
      if (seq[a] > seq[b]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

// Matrix of d on a single mode, degree p -> p + 1.
Eigen::MatrixXcd dBlock(const Mode& n, int p) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(componentCount(p + 1), componentCount(p));
  for (int c = 0; c < componentCount(p); ++c) {
    const unsigned J = componentMask(p, c);
    for (int k = 0; k < 4; ++k) {
      if (J & (1u << k)) continue;
      const int sign = std::popcount(J & ((1u << k) - 1)) % 2 ? -1 : 1;
      m(compOf(p + 1, J | (1u << k)), c) += Complex(0.0, sign * n[static_cast<size_t>(k)]);
    }
  }
  return m;
}

Eigen::MatrixXcd starBlock(int p) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(componentCount(4 - p), componentCount(p));
  for (int c = 0; c < componentCount(p); ++c) {
    const unsigned I = componentMask(p, c);
    m(compOf(4 - p, 15u ^ I), c) = static_cast<double>(starSign(I));
  }
  return m;
}

// delta = -* d * on p-forms at one mode.
Eigen::MatrixXcd deltaBlock(const Mode& n, int p) { return -starBlock(5 - p) * dBlock(n, 4 - p) * starBlock(p); }

Eigen::MatrixXcd basisMatrix(const std::array<std::array<double, 6>, 3>& basis) {
  Eigen::MatrixXcd m(6, 3);
  for (int a = 0; a < 3; ++a)
    for (int c = 0; c < 6; ++c) m(c, a) = basis[static_cast<size_t>(a)][static_cast<size_t>(c)];
  return m;
}

const Eigen::MatrixXcd& sdMatrix() {
  static const Eigen::MatrixXcd m = basisMatrix(selfDualBasis());
  return m;
}
const Eigen::MatrixXcd& asdMatrix() {
  static const Eigen::MatrixXcd m = basisMatrix(antiSelfDualBasis());
  return m;
}

Eigen::VectorXcd omegaVector() {
  Eigen::VectorXcd w = Eigen::VectorXcd::Zero(6);
  w(compOf(2, 0b0011)) = 1.0;
  w(compOf(2, 0b1100)) = 1.0;
  return w;
}

Eigen::VectorXcd rhoVector(const CurvatureHooks& hooks) {
  Eigen::VectorXcd r(6);
  for (int c = 0; c < 6; ++c) r(c) = hooks.rho[static_cast<size_t>(c)];
  return r;
}

// Constant-coefficient curvature part of S, ASD -> SD coordinates.
Eigen::MatrixXcd hookBlock(const CurvatureHooks& hooks) {
  const Eigen::VectorXcd omegaSd = sdMatrix().adjoint() * omegaVector();
  const Eigen::VectorXcd rhoAsd = asdMatrix().adjoint() * rhoVector(hooks);
  return hooks.phi.cast<Complex>() - 0.5 * omegaSd * rhoAsd.transpose();
}

Eigen::MatrixXcd hookAdjointBlock(const CurvatureHooks& hooks) {
  const Eigen::VectorXcd omegaSd = sdMatrix().adjoint() * omegaVector();
  const Eigen::VectorXcd rhoAsd = asdMatrix().adjoint() * rhoVector(hooks);
  return hooks.phi.transpose().cast<Complex>() - 0.5 * rhoAsd * omegaSd.transpose();
}

Eigen::MatrixXcd nullSpace(const Eigen::MatrixXcd& m, double tol) {
  if (m.rows() == 0) return Eigen::MatrixXcd::Identity(m.cols(), m.cols());
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > tol) ++rank;
  return svd.matrixV().rightCols(m.cols() - rank);
}

int rankOf(const Eigen::MatrixXcd& m, double tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  int r = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > tol) ++r;
  return r;
}

void requireTruncation(int N) {
  if (N < 1) fail(ErrorCode::InvalidArgument, "truncation N must be >= 1");
  if (N > 8) fail(ErrorCode::InvalidArgument, "truncation N is limited to 8");
}

// Applies a per-mode matrix to every mode of f.
template <class BlockFn>
FourierForm applyBlocks(const FourierForm& f, int outDegree, BlockFn&& block) {
  FourierForm out(outDegree, f.truncation());
  Eigen::VectorXcd in(f.components());
  for (int m = 0; m < f.modeCount(); ++m) {
    for (int c = 0; c < f.components(); ++c) in(c) = f.at(m, c);
    const Eigen::VectorXcd r = block(f.mode(m)) * in;
    for (int c = 0; c < out.components(); ++c) out.at(m, c) = r(c);
  }
  return out;
}

}  // namespace

int componentCount(int degree) {
  requireDegree(degree);
  static constexpr int counts[5] = {1, 4, 6, 4, 1};
  return counts[degree];
}

unsigned componentMask(int degree, int c) {
  requireDegree(degree);
  const auto& m = masks(degree);
  if (c < 0 || c >= static_cast<int>(m.size())) fail(ErrorCode::InvalidArgument, "component index out of range");
  return m[static_cast<size_t>(c)];
}

FourierForm::FourierForm(int degree, int truncation) : degree_(degree), N_(truncation) {
  requireDegree(degree);
  if (truncation < 0) fail(ErrorCode::InvalidArgument, "truncation must be >= 0");
  const int side = 2 * truncation + 1;
  modes_ = side * side * side * side;
  comps_ = componentCount(degree);
  c_.assign(static_cast<size_t>(modes_ * comps_), Complex(0.0, 0.0));
}

FourierForm FourierForm::random(int degree, int truncation, std::mt19937_64& rng, bool real) {
  FourierForm f(degree, truncation);
  std::normal_distribution<double> normal;
  for (auto& c : f.c_) c = Complex(normal(rng), normal(rng));
  if (real) {
    FourierForm g = f;
    for (int m = 0; m < f.modes_; ++m) {
      Mode n = f.mode(m);
      for (auto& x : n) x = -x;
      const int mm = f.modeIndex(n);
      for (int c = 0; c < f.comps_; ++c) g.at(m, c) = 0.5 * (f.at(m, c) + std::conj(f.at(mm, c)));
    }
    return g;
  }
  return f;
}

Mode FourierForm::mode(int index) const {
  const int side = 2 * N_ + 1;
  Mode n{};
  for (int k = 3; k >= 0; --k) {
    n[static_cast<size_t>(k)] = index % side - N_;
    index /= side;
  }
  return n;
}

int FourierForm::modeIndex(const Mode& n) const {
  const int side = 2 * N_ + 1;
  int index = 0;
  for (int k = 0; k < 4; ++k) {
    if (std::abs(n[static_cast<size_t>(k)]) > N_) return -1;
    index = index * side + n[static_cast<size_t>(k)] + N_;
  }
  return index;
}

FourierForm FourierForm::operator+(const FourierForm& o) const {
  if (o.degree_ != degree_ || o.N_ != N_) fail(ErrorCode::DimensionMismatch, "adding forms of different shape");
  FourierForm r = *this;
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

FourierForm FourierForm::operator-(const FourierForm& o) const { return *this + o * Complex(-1.0, 0.0); }

FourierForm FourierForm::operator*(Complex s) const {
  FourierForm r = *this;
  for (auto& c : r.c_) c *= s;
  return r;
}

double FourierForm::maxAbs() const {
  double m = 0.0;
  for (const auto& c : c_) m = std::max(m, std::abs(c));
  return m;
}

bool FourierForm::isReal(double tol) const {
  for (int m = 0; m < modes_; ++m) {
    Mode n = mode(m);
    for (auto& x : n) x = -x;
    const int mm = modeIndex(n);
    for (int c = 0; c < comps_; ++c)
      if (std::abs(at(m, c) - std::conj(at(mm, c))) > tol) return false;
  }
  return true;
}

Complex inner(const FourierForm& a, const FourierForm& b) {
  if (a.degree() != b.degree() || a.truncation() != b.truncation())
    fail(ErrorCode::DimensionMismatch, "pairing forms of different shape");
  Complex s = 0.0;
  for (size_t i = 0; i < a.data().size(); ++i) s += std::conj(a.data()[i]) * b.data()[i];
  return s;
}

FourierForm exteriorD(const FourierForm& f) {
  if (f.degree() == 4) fail(ErrorCode::InvalidArgument, "exterior derivative of a 4-form");
  const int p = f.degree();
  return applyBlocks(f, p + 1, [p](const Mode& n) { return dBlock(n, p); });
}

FourierForm hodgeStar(const FourierForm& f) {
  const Eigen::MatrixXcd s = starBlock(f.degree());
  return applyBlocks(f, 4 - f.degree(), [&](const Mode&) { return s; });
}

FourierForm codifferential(const FourierForm& f) {
  if (f.degree() == 0) fail(ErrorCode::InvalidArgument, "codifferential of a function");
  return hodgeStar(exteriorD(hodgeStar(f))) * Complex(-1.0, 0.0);
}

SdSplit sdProject(const FourierForm& f) {
  if (f.degree() != 2) fail(ErrorCode::InvalidArgument, "self-dual splitting needs a 2-form");
  const FourierForm s = hodgeStar(f);
  return {(f + s) * Complex(0.5, 0.0), (f - s) * Complex(0.5, 0.0)};
}

const std::array<std::array<double, 6>, 3>& selfDualBasis() {
  static const double r = 1.0 / std::sqrt(2.0);
  // e12 + e34, e13 - e24, e14 + e23; components ordered 12 13 14 23 24 34.
  static const std::array<std::array<double, 6>, 3> b{{{r, 0, 0, 0, 0, r}, {0, r, 0, 0, -r, 0}, {0, 0, r, r, 0, 0}}};
  return b;
}

const std::array<std::array<double, 6>, 3>& antiSelfDualBasis() {
  static const double r = 1.0 / std::sqrt(2.0);
  static const std::array<std::array<double, 6>, 3> b{{{r, 0, 0, 0, 0, -r}, {0, r, 0, 0, r, 0}, {0, 0, r, -r, 0, 0}}};
  return b;
}

OperatorMatrix::OperatorMatrix(int truncation, std::vector<Eigen::MatrixXcd> blocks)
    : N_(truncation), blocks_(std::move(blocks)) {}

Eigen::Index OperatorMatrix::rows() const {
  Eigen::Index r = 0;
  for (const auto& b : blocks_) r += b.rows();
  return r;
}

Eigen::Index OperatorMatrix::cols() const {
  Eigen::Index c = 0;
  for (const auto& b : blocks_) c += b.cols();
  return c;
}

Eigen::MatrixXcd OperatorMatrix::dense() const {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(rows(), cols());
  Eigen::Index r = 0, c = 0;
  for (const auto& b : blocks_) {
    m.block(r, c, b.rows(), b.cols()) = b;
    r += b.rows();
    c += b.cols();
  }
  return m;
}

std::vector<double> OperatorMatrix::singularValues() const {
  std::vector<double> out;
  for (const auto& b : blocks_) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(b);
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) out.push_back(svd.singularValues()(i));
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

int OperatorMatrix::rank(double threshold) const {
  int r = 0;
  for (double s : singularValues())
    if (s > threshold) ++r;
  return r;
}

int OperatorMatrix::kernelDimension(double threshold) const { return static_cast<int>(cols()) - rank(threshold); }
int OperatorMatrix::cokernelDimension(double threshold) const { return static_cast<int>(rows()) - rank(threshold); }

OperatorMatrix operatorS(int truncation, const CurvatureHooks& hooks) {
  requireTruncation(truncation);
  const FourierForm shape(0, truncation);
  const Eigen::MatrixXcd hook = hookBlock(hooks);
  std::vector<Eigen::MatrixXcd> blocks;
  blocks.reserve(static_cast<size_t>(shape.modeCount()));
  for (int m = 0; m < shape.modeCount(); ++m) {
    const Mode n = shape.mode(m);
    blocks.push_back(sdMatrix().adjoint() * dBlock(n, 1) * deltaBlock(n, 2) * asdMatrix() + hook);
  }
  return OperatorMatrix(truncation, std::move(blocks));
}

OperatorMatrix operatorSAdjoint(int truncation, const CurvatureHooks& hooks) {
  requireTruncation(truncation);
  const FourierForm shape(0, truncation);
  const Eigen::MatrixXcd hook = hookAdjointBlock(hooks);
  std::vector<Eigen::MatrixXcd> blocks;
  blocks.reserve(static_cast<size_t>(shape.modeCount()));
  for (int m = 0; m < shape.modeCount(); ++m) {
    const Mode n = shape.mode(m);
    blocks.push_back(asdMatrix().adjoint() * dBlock(n, 1) * deltaBlock(n, 2) * sdMatrix() + hook);
  }
  return OperatorMatrix(truncation, std::move(blocks));
}

FourierForm applyS(const FourierForm& alpha, const CurvatureHooks& hooks) {
  const FourierForm a = sdProject(alpha).minus;
  FourierForm out = sdProject(exteriorD(codifferential(a))).plus;
  const Eigen::MatrixXcd h = sdMatrix() * hookBlock(hooks) * asdMatrix().adjoint();
  return out + applyBlocks(a, 2, [&](const Mode&) { return h; });
}

FourierForm applySAdjoint(const FourierForm& psi, const CurvatureHooks& hooks) {
  const FourierForm p = sdProject(psi).plus;
  FourierForm out = sdProject(exteriorD(codifferential(p))).minus;
  const Eigen::MatrixXcd h = asdMatrix() * hookAdjointBlock(hooks) * sdMatrix().adjoint();
  return out + applyBlocks(p, 2, [&](const Mode&) { return h; });
}

double adjointResidual(const OperatorMatrix& s, const OperatorMatrix& sAdjoint) {
  if (s.blocks().size() != sAdjoint.blocks().size())
    fail(ErrorCode::DimensionMismatch, "operators have different truncations");
  double r = 0.0;
  for (size_t i = 0; i < s.blocks().size(); ++i)
    r = std::max(r, (sAdjoint.blocks()[i] - s.blocks()[i].adjoint()).cwiseAbs().maxCoeff());
  return r;
}

double globalVersusBlockSingularValues(const OperatorMatrix& op) {
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(op.dense());
  const auto blocks = op.singularValues();
  const auto& global = svd.singularValues();
  if (static_cast<size_t>(global.size()) != blocks.size()) return std::numeric_limits<double>::infinity();
  double d = 0.0;
  for (size_t i = 0; i < blocks.size(); ++i) d = std::max(d, std::abs(global(static_cast<Eigen::Index>(i)) - blocks[i]));
  return d;
}

SubspaceComparison dPlusKernelEqualsClosed(int truncation) {
  requireTruncation(truncation);
  constexpr double tol = 1e-10;
  const FourierForm shape(0, truncation);
  SubspaceComparison out;
  for (int m = 0; m < shape.modeCount(); ++m) {
    const Mode n = shape.mode(m);
    const Eigen::MatrixXcd d = dBlock(n, 1);
    const Eigen::MatrixXcd dPlus = sdMatrix().adjoint() * d;
    const Eigen::MatrixXcd kPlus = nullSpace(dPlus, tol);
    const Eigen::MatrixXcd kClosed = nullSpace(d, tol);
    out.dimFirst += static_cast<int>(kPlus.cols());
    out.dimSecond += static_cast<int>(kClosed.cols());
    if (kPlus.cols() > 0) out.containmentResidual = std::max(out.containmentResidual, (d * kPlus).cwiseAbs().maxCoeff());
  }
  out.equal = out.dimFirst == out.dimSecond && out.containmentResidual < tol;
  return out;
}

int lichnerowiczKernel(int truncation, bool includeConstants) {
  requireTruncation(truncation);
  const FourierForm shape(0, truncation);
  int dim = 0;
  for (int m = 0; m < shape.modeCount(); ++m) {
    const Mode n = shape.mode(m);
    if (!includeConstants && n == Mode{0, 0, 0, 0}) continue;
    // Delta = delta d on functions.
    const Complex lap = (deltaBlock(n, 1) * dBlock(n, 0))(0, 0);
    if (std::abs(lap * lap) < 1e-10) ++dim;
  }
  return dim;
}

KernelCorrespondence kernelCorrespondence(int truncation) {
  requireTruncation(truncation);
  constexpr double tol = 1e-10;
  const FourierForm shape(0, truncation);
  const OperatorMatrix S = operatorS(truncation);
  // Real (1,1)-forms: f omega + alpha with alpha anti-self-dual.
  Eigen::MatrixXcd param(6, 4);
  param.col(0) = omegaVector();
  param.rightCols(3) = asdMatrix();
  const Eigen::RowVectorXcd trace = omegaVector().adjoint() * param;  // Lambda phi = (phi, omega)

  KernelCorrespondence out;
  out.injective = true;
  for (int m = 0; m < shape.modeCount(); ++m) {
    const Mode n = shape.mode(m);
    const bool constant = n == Mode{0, 0, 0, 0};
    Eigen::MatrixXcd constraints(constant ? 5 : 4, 4);
    constraints.topRows(4) = dBlock(n, 2) * param;
    if (constant) constraints.row(4) = trace;  // mean-zero trace
    const Eigen::MatrixXcd K = nullSpace(constraints, tol);
    const Eigen::MatrixXcd& Sn = S.blocks()[static_cast<size_t>(m)];
    out.kernelS += static_cast<int>(nullSpace(Sn, tol).cols());
    if (K.cols() == 0) continue;
    // s'(phi) = Delta(Lambda phi) = |n|^2 Lambda phi.
    const double n2 = n[0] * n[0] + n[1] * n[1] + n[2] * n[2] + n[3] * n[3];
    const Eigen::MatrixXcd sPrime = n2 * trace * K;
    const Eigen::MatrixXcd kernel = K * nullSpace(sPrime, tol);
    out.kernelSPrime += static_cast<int>(kernel.cols());
    if (kernel.cols() == 0) continue;
    const Eigen::MatrixXcd primitive = kernel.bottomRows(3);
    if (rankOf(primitive, tol) != kernel.cols()) out.injective = false;
    out.imageResidual = std::max(out.imageResidual, (Sn * primitive).cwiseAbs().maxCoeff());
  }
  out.injective = out.injective && out.imageResidual < tol && out.kernelSPrime == out.kernelS;
  return out;
}

AsdIndexReport asdIndex(int truncation, std::uint64_t seed) {
  requireTruncation(truncation);
  AsdIndexReport r;
  r.truncation = truncation;
  const OperatorMatrix S = operatorS(truncation), Sa = operatorSAdjoint(truncation);
  r.kernel = S.kernelDimension();
  r.cokernel = S.cokernelDimension();
  r.index = r.kernel - r.cokernel;
  r.kernelAdjoint = Sa.kernelDimension();
  r.adjointMatrixResidual = adjointResidual(S, Sa);
  r.smallestNonzeroSingularValue = 0.0;
  for (double s : S.singularValues())
    if (s > 1e-10) r.smallestNonzeroSingularValue = s;

  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 100; ++trial) {
    const FourierForm a = FourierForm::random(2, truncation, rng), p = FourierForm::random(2, truncation, rng);
    const FourierForm sa = applyS(a), sp = applySAdjoint(p);
    const double scale = std::sqrt(std::abs(inner(sa, sa)) * std::abs(inner(p, p))) +
                         std::sqrt(std::abs(inner(a, a)) * std::abs(inner(sp, sp)));
    r.adjointPairingResidual =
        std::max(r.adjointPairingResidual, std::abs(inner(sa, sdProject(p).plus) - inner(sdProject(a).minus, sp)) / scale);
    const int degree = trial % 4;
    const FourierForm f = FourierForm::random(degree, truncation, rng), g = FourierForm::random(degree + 1, truncation, rng);
    const FourierForm df = exteriorD(f), dg = codifferential(g);
    const double scale2 = std::sqrt(std::abs(inner(df, df)) * std::abs(inner(g, g))) +
                          std::sqrt(std::abs(inner(f, f)) * std::abs(inner(dg, dg)));
    r.codifferentialPairingResidual =
        std::max(r.codifferentialPairingResidual, std::abs(inner(df, g) - inner(f, dg)) / scale2);
  }
  r.closedVersusDPlus = dPlusKernelEqualsClosed(truncation);
  r.correspondence = kernelCorrespondence(truncation);
  r.lichnerowicz = lichnerowiczKernel(truncation);
  return r;
}

}  // namespace sfk::asdcalc
