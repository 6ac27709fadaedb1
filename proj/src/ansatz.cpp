#include "sfk/ansatz.hpp"

#include "sfk/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace sfk::ansatz {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string pointText(double x, double y, double t) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "(x, y, t) = (%.6g, %.6g, %.6g)", x, y, t);
  return buf;
}

}  // namespace

MonopoleConfig::MonopoleConfig(FuchsianGroup group, std::vector<ChargePoint> points)
    : group_(std::move(group)), points_(std::move(points)) {
  for (auto& p : points_) p.t.canonicalize();
  for (size_t j = 0; j < points_.size(); ++j) {
    const auto& p = points_[j];
    const std::string who = "charge " + std::to_string(j + 1);
    if (!(p.z.imag() > 0.0)) fail(ErrorCode::InvalidArgument, who + " must have y > 0");
    if (!(abs(p.t) < 1)) fail(ErrorCode::InvalidArgument, who + " must have |t| < 1");
  }
  if (points_.size() < 2) return;
  // Charges with equal t are equivalent iff their base points are.
  const auto ball = hyperbolic::groupBall(group_, 3);
  for (size_t i = 0; i < points_.size(); ++i)
    for (size_t j = i + 1; j < points_.size(); ++j) {
      if (points_[i].t != points_[j].t) continue;
      for (const auto& g : ball.elements)
        if (hyperbolic::h2Distance(g.apply(points_[i].z), points_[j].z) < 1e-9)
          fail(ErrorCode::InvalidArgument, "charges " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                               " are related by a group element");
    }
}

std::vector<Rational> MonopoleConfig::weights() const {
  std::vector<Rational> w;
  w.reserve(points_.size());
  for (const auto& p : points_) w.push_back(p.weight());
  return w;
}

Rational MonopoleConfig::weightSum() const { return sum(weights()); }

bool MonopoleConfig::quantized() const { return isInteger(weightSum()); }

void MonopoleConfig::requireQuantized() const {
  if (!quantized())
    fail(ErrorCode::Precondition,
         "quantization: weight sum " + formatRational(weightSum()) + " is not an integer");
}

Potential::Potential(const MonopoleConfig& config, int maxWordLength) : maxWordLength_(maxWordLength) {
  const auto ball = hyperbolic::groupBall(config.group(), maxWordLength);
  for (const auto& charge : config.points()) {
    const HalfSpacePoint q = charge.image();
    for (size_t i = 0; i < ball.size(); ++i) {
      images_.push_back(ball.elements[i].apply(q));
      outerShell_.push_back(maxWordLength > 0 && ball.wordLength[i] == maxWordLength);
    }
  }
}

Potential::Eval Potential::evaluate(const HalfSpacePoint& p) const {
  Eval e;
  double sum = 0.0, tail = 0.0;
  double nearest = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < images_.size(); ++i) {
    const double delta = hyperbolic::h3CoshDistanceMinusOne(p, images_[i]);
    nearest = std::min(nearest, delta);
    const double g = hyperbolic::greenFromCoshMinusOne(delta);
    sum += g;
    if (outerShell_[i]) tail += g;
  }
  e.value = 1.0 + sum;
  e.tail = tail;
  e.nearestDelta = nearest;
  return e;
}

double Potential::valueAt(double x, double y, double t) const {
  if (std::abs(t) == 1.0) {
    if (!(y > 0.0)) fail(ErrorCode::InvalidArgument, "chart point needs y > 0");
    return 1.0;
  }
  return value(hyperbolic::h2ToH3(x, y, t));
}

std::array<double, 3> Potential::gradient(const HalfSpacePoint& p) const {
  std::array<double, 3> grad{0.0, 0.0, 0.0};
  for (const auto& q : images_) {
    const double delta = hyperbolic::h3CoshDistanceMinusOne(p, q);
    const double dg = hyperbolic::greenDerivativeInCosh(delta);
    const double zz = p.z * q.z;
    grad[0] += dg * (p.x - q.x) / zz;
    grad[1] += dg * (p.u - q.u) / zz;
    grad[2] += dg * ((p.z - q.z) / zz - delta / p.z);
  }
  return grad;
}

Potential::Eval Potential::dVdt(double x, double y, double t) const {
  const HalfSpacePoint p = hyperbolic::h2ToH3(x, y, t);
  const double du = y, dz = -y * t / std::sqrt((1.0 - t) * (1.0 + t));
  Eval e;
  e.value = 0.0;
  double nearest = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < images_.size(); ++i) {
    const auto& q = images_[i];
    const double delta = hyperbolic::h3CoshDistanceMinusOne(p, q);
    nearest = std::min(nearest, delta);
    const double dg = hyperbolic::greenDerivativeInCosh(delta);
    const double zz = p.z * q.z;
    const double d = dg * (du * (p.u - q.u) / zz + dz * ((p.z - q.z) / zz - delta / p.z));
    e.value += d;
    if (outerShell_[i]) e.tail += d;
  }
  e.nearestDelta = nearest;
  return e;
}

namespace {

std::vector<double> axis(double lo, double hi, int n, bool logScale, const char* name) {
  if (n < 1) fail(ErrorCode::InvalidArgument, std::string("grid needs at least one point along ") + name);
  if (n == 1 && lo != hi) fail(ErrorCode::InvalidArgument, std::string("a single ") + name + " point needs lo == hi");
  if (n > 1 && !(lo < hi)) fail(ErrorCode::InvalidArgument, std::string("grid range for ") + name + " needs lo < hi");
  const double a = logScale ? std::log(lo) : lo, b = logScale ? std::log(hi) : hi;
  std::vector<double> out(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double s = n == 1 ? a : a + (b - a) * i / (n - 1);
    out[static_cast<size_t>(i)] = logScale ? std::exp(s) : s;
  }
  if (logScale) {
    out.front() = lo;
    out.back() = hi;
  }
  return out;
}

void fillVFields(GridSample& s) {
  const size_t n = s.size();
  s.v.assign(n, kNaN);
  s.w.assign(n, kNaN);
  s.vw.assign(n, kNaN);
  for (int i = 0; i < s.nx; ++i)
    for (int j = 0; j < s.ny; ++j)
      for (int k = 0; k < s.nt; ++k) {
        const size_t id = s.index(i, j, k);
        const double y = s.ys[static_cast<size_t>(j)], t = s.ts[static_cast<size_t>(k)];
        const double oneMinus = (1.0 - t) * (1.0 + t);
        s.v[id] = oneMinus / (y * y);
        s.w[id] = oneMinus > 0 ? s.V[id] / oneMinus : std::numeric_limits<double>::infinity();
        s.vw[id] = s.V[id] / (y * y);
      }
}

}  // namespace

GridSample potential(const MonopoleConfig& config, const GridSpec& grid, int maxWordLength) {
  return potential(Potential(config, maxWordLength), config, grid);
}

GridSample potential(const Potential& field, const MonopoleConfig& config, const GridSpec& grid) {
  if (!(grid.y[0] > 0.0)) fail(ErrorCode::InvalidArgument, "grid needs y > 0");
  if (grid.t[0] < -1.0 || grid.t[1] > 1.0) fail(ErrorCode::InvalidArgument, "grid t range must lie in [-1, 1]");
  GridSample s;
  s.nx = grid.nx;
  s.ny = grid.ny;
  s.nt = grid.nt;
  s.xs = axis(grid.x[0], grid.x[1], grid.nx, false, "x");
  s.ys = axis(grid.y[0], grid.y[1], grid.ny, true, "y");
  s.ts = axis(grid.t[0], grid.t[1], grid.nt, false, "t");
  s.hx = grid.nx > 1 ? (grid.x[1] - grid.x[0]) / (grid.nx - 1) : 0.0;
  s.hs = grid.ny > 1 ? (std::log(grid.y[1]) - std::log(grid.y[0])) / (grid.ny - 1) : 0.0;
  s.ht = grid.nt > 1 ? (grid.t[1] - grid.t[0]) / (grid.nt - 1) : 0.0;

  if (grid.exclusionRadius) {
    if (!(*grid.exclusionRadius >= 0.0)) fail(ErrorCode::InvalidArgument, "exclusion radius must be >= 0");
    s.exclusionRadius = *grid.exclusionRadius;
  } else {
    for (const auto& c : config.points()) {
      const double t = c.tValue(), y = c.z.imag();
      const double root = std::sqrt((1.0 - t) * (1.0 + t));
      const double h = std::max({s.hx / (y * root), s.hs / root, s.ht / (root * root)});
      s.exclusionRadius = std::max(s.exclusionRadius, 3.0 * h);
    }
  }
  const double deltaExcl = std::cosh(s.exclusionRadius) - 1.0;

  s.V.assign(static_cast<size_t>(s.nx) * static_cast<size_t>(s.ny) * static_cast<size_t>(s.nt), kNaN);
  for (int i = 0; i < s.nx; ++i)
    for (int j = 0; j < s.ny; ++j)
      for (int k = 0; k < s.nt; ++k) {
        const double x = s.xs[static_cast<size_t>(i)], y = s.ys[static_cast<size_t>(j)],
                     t = s.ts[static_cast<size_t>(k)];
        const size_t id = s.index(i, j, k);
        if (std::abs(t) == 1.0) {
          s.V[id] = 1.0;
          continue;
        }
        const auto e = field.evaluate(hyperbolic::h2ToH3(x, y, t));
        if (!config.points().empty() && e.nearestDelta <= deltaExcl) {
          if (grid.policy == ExclusionPolicy::Reject)
            fail(ErrorCode::InvalidArgument, "grid point " + pointText(x, y, t) +
                                                 " lies inside the exclusion ball of radius " +
                                                 std::to_string(s.exclusionRadius) + " around a charge image");
          ++s.excludedCount;
          continue;
        }
        s.V[id] = e.value;
        s.tail = std::max(s.tail, e.tail);
      }
  fillVFields(s);
  return s;
}

GridSample withV(const GridSample& sample, const std::function<double(double, double, double)>& v) {
  GridSample s = sample;
  for (int i = 0; i < s.nx; ++i)
    for (int j = 0; j < s.ny; ++j)
      for (int k = 0; k < s.nt; ++k) {
        const size_t id = s.index(i, j, k);
        const double x = s.xs[static_cast<size_t>(i)], y = s.ys[static_cast<size_t>(j)],
                     t = s.ts[static_cast<size_t>(k)];
        s.v[id] = v(x, y, t);
        s.vw[id] = s.v[id] * s.w[id];
      }
  return s;
}

GridSample withPerturbedV(const GridSample& sample, double amplitude) {
  return withV(sample, [&](double x, double y, double t) {
    return (1.0 - t) * (1.0 + t) / (y * y) * (1.0 + amplitude * x * x);
  });
}

namespace {

// Centered differences with step m cells; NaN outside the grid or when a
// stencil value is missing.
class Stencil {
 public:
  Stencil(const GridSample& s, const std::vector<double>& f, int m) : s_(s), f_(f), m_(m) {}

  double at(int i, int j, int k) const {
    if (i < 0 || j < 0 || k < 0 || i >= s_.nx || j >= s_.ny || k >= s_.nt) return kNaN;
    return f_[s_.index(i, j, k)];
  }
  double dx(int i, int j, int k) const { return (at(i + m_, j, k) - at(i - m_, j, k)) / (2 * m_ * s_.hx); }
  double dxx(int i, int j, int k) const {
    const double h = m_ * s_.hx;
    return (at(i + m_, j, k) - 2 * at(i, j, k) + at(i - m_, j, k)) / (h * h);
  }
  double ds(int i, int j, int k) const { return (at(i, j + m_, k) - at(i, j - m_, k)) / (2 * m_ * s_.hs); }
  double dss(int i, int j, int k) const {
    const double h = m_ * s_.hs;
    return (at(i, j + m_, k) - 2 * at(i, j, k) + at(i, j - m_, k)) / (h * h);
  }
  double dy(int i, int j, int k) const { return ds(i, j, k) / y(j); }
  double dyy(int i, int j, int k) const { return (dss(i, j, k) - ds(i, j, k)) / (y(j) * y(j)); }
  double dt(int i, int j, int k) const { return (at(i, j, k + m_) - at(i, j, k - m_)) / (2 * m_ * s_.ht); }
  double dtt(int i, int j, int k) const {
    const double h = m_ * s_.ht;
    return (at(i, j, k + m_) - 2 * at(i, j, k) + at(i, j, k - m_)) / (h * h);
  }
  double dxt(int i, int j, int k) const {
    return (at(i + m_, j, k + m_) - at(i + m_, j, k - m_) - at(i - m_, j, k + m_) + at(i - m_, j, k - m_)) /
           (4.0 * m_ * m_ * s_.hx * s_.ht);
  }
  double dyt(int i, int j, int k) const {
    return (at(i, j + m_, k + m_) - at(i, j + m_, k - m_) - at(i, j - m_, k + m_) + at(i, j - m_, k - m_)) /
           (4.0 * m_ * m_ * s_.hs * s_.ht * y(j));
  }

 private:
  double y(int j) const { return s_.ys[static_cast<size_t>(j)]; }
  const GridSample& s_;
  const std::vector<double>& f_;
  int m_;
};

// Differences of u = log f taken as logs of ratios of f, which avoids the
// cancellation of subtracting nearly equal logarithms.
class LogStencil {
 public:
  LogStencil(const GridSample& s, const std::vector<double>& f, int m) : s_(s), f_(f), m_(m) {}

  double dxx(int i, int j, int k) const { return second(i, j, k, m_, 0, 0) / sq(m_ * s_.hx); }
  double dyy(int i, int j, int k) const {
    return (second(i, j, k, 0, m_, 0) / sq(m_ * s_.hs) - ds(i, j, k)) / sq(y(j));
  }
  double ds(int i, int j, int k) const { return ratio(at(i, j + m_, k), at(i, j - m_, k)) / (2 * m_ * s_.hs); }
  double dt(int i, int j, int k) const { return ratio(at(i, j, k + m_), at(i, j, k - m_)) / (2 * m_ * s_.ht); }
  double dxt(int i, int j, int k) const {
    return ratio(at(i + m_, j, k + m_) * at(i - m_, j, k - m_), at(i + m_, j, k - m_) * at(i - m_, j, k + m_)) /
           (4.0 * m_ * m_ * s_.hx * s_.ht);
  }
  double dyt(int i, int j, int k) const {
    return ratio(at(i, j + m_, k + m_) * at(i, j - m_, k - m_), at(i, j + m_, k - m_) * at(i, j - m_, k + m_)) /
           (4.0 * m_ * m_ * s_.hs * s_.ht * y(j));
  }

 private:
  static double sq(double a) { return a * a; }
  static double ratio(double a, double b) { return a > 0 && b > 0 ? std::log(a / b) : kNaN; }
  double second(int i, int j, int k, int di, int dj, int dk) const {
    const double c = at(i, j, k);
    return ratio(at(i + di, j + dj, k + dk), c) + ratio(at(i - di, j - dj, k - dk), c);
  }
  double at(int i, int j, int k) const {
    if (i < 0 || j < 0 || k < 0 || i >= s_.nx || j >= s_.ny || k >= s_.nt) return kNaN;
    return f_[s_.index(i, j, k)];
  }
  double y(int j) const { return s_.ys[static_cast<size_t>(j)]; }
  const GridSample& s_;
  const std::vector<double>& f_;
  int m_;
};

void requireResolution(const GridSample& s, const char* what) {
  if (s.nx < 5 || s.ny < 5 || s.nt < 5)
    fail(ErrorCode::InvalidArgument, std::string(what) + " needs at least 5 grid points per axis");
}

void requireStride(int stride) {
  if (stride < 1) fail(ErrorCode::InvalidArgument, "stride must be >= 1");
}

// Accumulates sup norms of a combination and of its terms.
struct SupAccumulator {
  double combination = 0.0;
  double scale = 0.0;
  size_t points = 0;

  void add(double combo, std::initializer_list<double> terms) {
    combination = std::max(combination, std::abs(combo));
    for (double t : terms) scale = std::max(scale, std::abs(t));
    ++points;
  }
  Residual finish() const {
    Residual r;
    r.supCombination = combination;
    r.scale = scale;
    r.points = points;
    r.value = scale > 0 ? combination / scale : 0.0;
    return r;
  }
};

bool finite(std::initializer_list<double> xs) {
  for (double x : xs)
    if (!std::isfinite(x)) return false;
  return true;
}

// Harmonicity terms w_xx, w_yy, (vw)_tt. These are also the components of
// d(d theta), so this doubles as the closedness check on the curvature.
bool harmonicTerms(const GridSample& s, int m, int i, int j, int k, double out[3]) {
  const Stencil w(s, s.w, m), vw(s, s.vw, m);
  out[0] = w.dxx(i, j, k);
  out[1] = w.dyy(i, j, k);
  out[2] = vw.dtt(i, j, k);
  return finite({out[0], out[1], out[2]});
}

bool curvatureTerms(const GridSample& s, int m, int i, int j, int k, double out[3]) {
  const LogStencil su(s, s.v, m);
  const Stencil sv(s, s.v, m);
  out[0] = su.dxx(i, j, k);
  out[1] = su.dyy(i, j, k);
  out[2] = sv.dtt(i, j, k);
  return finite({out[0], out[1], out[2]});
}

}  // namespace

Residual harmonicityResidual(const GridSample& s, int stride, int supportStride) {
  requireResolution(s, "harmonicity residual");
  requireStride(stride);
  if (supportStride <= 0) supportStride = stride;
  SupAccumulator acc;
  double terms[3], support[3];
  for (int i = 0; i < s.nx; ++i)
    for (int j = 0; j < s.ny; ++j)
      for (int k = 0; k < s.nt; ++k) {
        if (!harmonicTerms(s, stride, i, j, k, terms)) continue;
        if (supportStride != stride && !harmonicTerms(s, supportStride, i, j, k, support)) continue;
        acc.add(terms[0] + terms[1] + terms[2], {terms[0], terms[1], terms[2]});
      }
  return acc.finish();
}

ScalarCurvature scalarCurvature(const GridSample& s, int stride, int supportStride) {
  requireResolution(s, "scalar curvature");
  requireStride(stride);
  if (supportStride <= 0) supportStride = stride;
  ScalarCurvature out;
  out.s.assign(s.size(), kNaN);
  SupAccumulator acc;
  double terms[3], support[3];
  for (int i = 0; i < s.nx; ++i)
    for (int j = 0; j < s.ny; ++j)
      for (int k = 0; k < s.nt; ++k) {
        if (!curvatureTerms(s, stride, i, j, k, terms)) continue;
        if (supportStride != stride && !curvatureTerms(s, supportStride, i, j, k, support)) continue;
        const double numerator = terms[0] + terms[1] + terms[2];
        const size_t id = s.index(i, j, k);
        out.s[id] = numerator / s.vw[id];
        acc.add(numerator, {terms[0], terms[1], terms[2]});
      }
  out.residual = acc.finish();
  return out;
}

RicciCheck ricciAsdCheck(const GridSample& s) {
  requireResolution(s, "Ricci check");
  const size_t n = s.size();
  // Curvature of theta: Theta_yt = w_x, Theta_tx = w_y, Theta_xy = (V / y^2)_t.
  std::vector<double> vOverY2(n);
  for (int i = 0; i < s.nx; ++i)
    for (int j = 0; j < s.ny; ++j)
      for (int k = 0; k < s.nt; ++k) {
        const double y = s.ys[static_cast<size_t>(j)];
        vOverY2[s.index(i, j, k)] = s.V[s.index(i, j, k)] / (y * y);
      }
  const LogStencil su(s, s.v, 1);
  const Stencil sw(s, s.w, 1), sq(s, vOverY2, 1);

  // Coordinate components of rho = -(1/2) dd^c log v in the frame
  // (dx, dy, dt, theta), and P = u_t / w.
  std::vector<double> P(n, kNaN), rxy(n, kNaN), rxt(n, kNaN), ryt(n, kNaN);
  std::vector<double> wx(n, kNaN), wy(n, kNaN), thxy(n, kNaN);
  for (int i = 0; i < s.nx; ++i)
    for (int j = 0; j < s.ny; ++j)
      for (int k = 0; k < s.nt; ++k) {
        const size_t id = s.index(i, j, k);
        const double w = s.w[id];
        if (!std::isfinite(w) || !(s.v[id] > 0)) continue;
        const double p = su.dt(i, j, k) / w;
        P[id] = p;
        wx[id] = sw.dx(i, j, k);
        wy[id] = sw.dy(i, j, k);
        thxy[id] = sq.dt(i, j, k);
        rxy[id] = -0.5 * (su.dxx(i, j, k) + su.dyy(i, j, k) + p * thxy[id]);
        rxt[id] = -0.5 * (su.dyt(i, j, k) - p * wy[id]);
        ryt[id] = -0.5 * (-su.dxt(i, j, k) + p * wx[id]);
      }
  const Stencil sp(s, P, 1);
  std::vector<double> fxy(n, kNaN);
  for (size_t id = 0; id < n; ++id) fxy[id] = rxy[id] + 0.25 * s.vw[id];
  const Stencil sfxy(s, fxy, 1), sfxt(s, rxt, 1), sfyt(s, ryt, 1);

  SupAccumulator pairing, selfDual, maxwell;
  double supRho = 0.0;
  for (int i = 0; i < s.nx; ++i)
    for (int j = 0; j < s.ny; ++j)
      for (int k = 0; k < s.nt; ++k) {
        const size_t id = s.index(i, j, k);
        const double rxth = -0.5 * sp.dx(i, j, k), ryth = -0.5 * sp.dy(i, j, k), rtth = -0.5 * sp.dt(i, j, k);
        if (!finite({rxy[id], rxt[id], ryt[id], rxth, ryth, rtth})) continue;
        const double v = s.v[id], w = s.w[id], vw = s.vw[id];
        const double sv = std::sqrt(v);
        const double r12 = rxy[id] / vw, r13 = rxt[id] / (w * sv), r23 = ryt[id] / (w * sv);
        const double r14 = rxth / sv, r24 = ryth / sv, r34 = rtth;
        const double allSup = std::max({std::abs(r12), std::abs(r13), std::abs(r23), std::abs(r14), std::abs(r24),
                                        std::abs(r34)});
        supRho = std::max(supRho, allSup);
        pairing.add(r12 + r34, {r12, r34});
        selfDual.add(std::max({std::abs(r12 + r34), std::abs(r13 - r24), std::abs(r14 + r23)}),
                     {r12, r13, r23, r14, r24, r34});

        // (dF)_{xyt} for F = rho + omega / 4, omega = vw dx^dy + dt^theta.
        const double a = sfxy.dt(i, j, k), b = -sfxt.dy(i, j, k), c = sfyt.dx(i, j, k);
        const double e = -rxth * wx[id], f = -ryth * wy[id], g = -(rtth + 0.25) * thxy[id];
        if (!finite({a, b, c, e, f, g})) continue;
        maxwell.add(a + b + c + e + f + g, {a, b, c, e, f, g});
      }
  RicciCheck out;
  out.omegaPairing = pairing.finish();
  out.selfDualPart = selfDual.finish();
  out.maxwellClosure = maxwell.finish();
  out.supRho = supRho;
  return out;
}

namespace {

ConvergenceStudy study(double coarse, double fine, double minRatio, double floor) {
  ConvergenceStudy c;
  c.coarse = coarse;
  c.fine = fine;
  c.ratio = fine > 0 ? coarse / fine : std::numeric_limits<double>::infinity();
  c.floor = floor;
  c.converging = c.ratio >= minRatio || fine <= floor;
  return c;
}

}  // namespace

double roundoffFloor(const GridSample& sample) {
  double h = std::numeric_limits<double>::infinity();
  for (double step : {sample.hx, sample.hs, sample.ht})
    if (step > 0) h = std::min(h, step);
  if (!std::isfinite(h)) return kRoundoffFloor;
  return std::max(kRoundoffFloor, 16.0 * std::numeric_limits<double>::epsilon() / (h * h));
}

ConvergenceStudy harmonicityConvergence(const GridSample& sample, double minRatio) {
  return study(harmonicityResidual(sample, 2, 1).value, harmonicityResidual(sample, 1, 2).value, minRatio,
               roundoffFloor(sample));
}

ConvergenceStudy scalarCurvatureConvergence(const GridSample& sample, double minRatio) {
  return study(scalarCurvature(sample, 2, 1).residual.value, scalarCurvature(sample, 1, 2).residual.value, minRatio,
               roundoffFloor(sample));
}

namespace {

struct FluxQuadrature {
  double value = 0.0;
  double tail = 0.0;
};

FluxQuadrature integrateFlux(const Potential& field, const hyperbolic::DirichletDomain& domain, double t,
                             int pieces, int phiOrder, int rhoOrder) {
  std::vector<double> pn, pw, rn, rw;
  hyperbolic::gaussLegendre(phiOrder, pn, pw);
  hyperbolic::gaussLegendre(rhoOrder, rn, rw);
  std::vector<double> cuts = domain.vertexAngles();
  if (cuts.empty()) cuts.push_back(0.0);
  FluxQuadrature q;
  for (size_t side = 0; side < cuts.size(); ++side) {
    const double lo = cuts[side];
    const double hi = side + 1 < cuts.size() ? cuts[side + 1] : cuts[0] + 2.0 * std::numbers::pi;
    for (int p = 0; p < pieces; ++p) {
      const double a = lo + (hi - lo) * p / pieces, b = lo + (hi - lo) * (p + 1) / pieces;
      for (size_t ip = 0; ip < pn.size(); ++ip) {
        const double phi = 0.5 * (a + b) + 0.5 * (b - a) * pn[ip];
        const double wphi = 0.5 * (b - a) * pw[ip];
        const double rmax = domain.boundaryRadius(phi);
        for (size_t ir = 0; ir < rn.size(); ++ir) {
          const double rho = 0.5 * rmax * (1.0 + rn[ir]);
          const double weight = wphi * 0.5 * rmax * rw[ir] * std::sinh(rho);
          const Complex z = domain.pointAt(rho, phi);
          const auto e = field.dVdt(z.real(), z.imag(), t);
          q.value += weight * e.value;
          q.tail += weight * e.tail;
        }
      }
    }
  }
  q.value /= 2.0 * std::numbers::pi;
  q.tail /= 2.0 * std::numbers::pi;
  return q;
}

}  // namespace

BoundaryFlux boundaryFlux(const MonopoleConfig& config, double epsilon, const QuadratureOptions& options) {
  if (!(epsilon > 0.0)) fail(ErrorCode::InvalidArgument, "boundary flux needs epsilon > 0");
  const double t = 1.0 - epsilon;
  if (!(t > -1.0)) fail(ErrorCode::InvalidArgument, "boundary flux needs 1 - epsilon > -1");
  for (size_t j = 0; j < config.points().size(); ++j)
    if (!(t > config.points()[j].tValue()))
      fail(ErrorCode::InvalidArgument, "epsilon too large: 1 - epsilon must exceed t of charge " +
                                           std::to_string(j + 1));
  if (options.phiOrder < 2 || options.rhoOrder < 2 || options.piecesPerSide < 1)
    fail(ErrorCode::InvalidArgument, "quadrature orders must be >= 2");

  BoundaryFlux out;
  out.expected = -config.weightSum();
  if (config.points().empty()) return out;

  const Potential field(config, options.wordLength);
  const hyperbolic::DirichletDomain domain(config.group(), {0.0, 1.0}, options.constraintWordLength);
  const auto high = integrateFlux(field, domain, t, options.piecesPerSide, options.phiOrder, options.rhoOrder);
  const auto low = integrateFlux(field, domain, t, options.piecesPerSide, std::max(2, options.phiOrder / 2),
                                 std::max(2, options.rhoOrder / 2));
  out.value = high.value;
  out.tail = std::abs(high.tail);
  out.quadratureError = std::abs(high.value - low.value);
  return out;
}

double smallSphereFlux(const MonopoleConfig& config, int maxWordLength, size_t charge, double radius, int order) {
  if (charge >= config.points().size()) fail(ErrorCode::InvalidArgument, "no such charge");
  if (!(radius > 0.0)) fail(ErrorCode::InvalidArgument, "sphere radius must be > 0");
  if (order < 2) fail(ErrorCode::InvalidArgument, "quadrature order must be >= 2");
  const Potential field(config, maxWordLength);
  const HalfSpacePoint q = config.points()[charge].image();
  // A geodesic sphere is a Euclidean sphere with a raised center.
  const double cz = q.z * std::cosh(radius), R = q.z * std::sinh(radius);
  const double h = 1e-5 * R;
  std::vector<double> nodes, weights;
  hyperbolic::gaussLegendre(order, nodes, weights);
  const int nPhi = 2 * order;
  double total = 0.0;
  for (size_t a = 0; a < nodes.size(); ++a) {
    const double ct = nodes[a], st = std::sqrt(1.0 - ct * ct);
    for (int b = 0; b < nPhi; ++b) {
      const double phi = 2.0 * std::numbers::pi * b / nPhi;
      const double n[3] = {st * std::cos(phi), st * std::sin(phi), ct};
      const HalfSpacePoint p{q.x + R * n[0], q.u + R * n[1], cz + R * n[2]};
      double dn = 0.0;
      for (int c = 0; c < 3; ++c) {
        HalfSpacePoint plus = p, minus = p;
        (c == 0 ? plus.x : c == 1 ? plus.u : plus.z) += h;
        (c == 0 ? minus.x : c == 1 ? minus.u : minus.z) -= h;
        dn += n[c] * (field.value(plus) - field.value(minus)) / (2.0 * h);
      }
      // Hyperbolic normal derivative times hyperbolic area: (1/Z) dV/dn dA.
      total += weights[a] * (2.0 * std::numbers::pi / nPhi) * R * R * dn / p.z;
    }
  }
  return total / (2.0 * std::numbers::pi);
}

GeometricAreas geometricAreas(const MonopoleConfig& config) {
  GeometricAreas out;
  // Fiber: integral of dt ^ theta is 2 pi dt over t in [-1, 1].
  out.fiberArea = {Rational(2) * (Rational(1) - Rational(-1)), 1};
  for (const auto& p : config.points()) out.exceptionalAreas.push_back({Rational(2) * (p.t + 1), 1});
  return out;
}

BoundaryBehavior boundaryBehavior(const GridSample& s) {
  if (s.nt < 3) fail(ErrorCode::InvalidArgument, "boundary slopes need at least 3 points in t");
  BoundaryBehavior out;
  out.tMin = s.ts.front();
  out.tMax = s.ts.back();
  if (!(out.tMin <= -0.99 && out.tMax >= 0.99))
    fail(ErrorCode::InvalidArgument, "boundary slopes need the t axis to reach |t| >= 0.99 on both sides");
  const int n = s.nt;
  bool any = false;
  double worstMinus = -1.0, worstPlus = -1.0;
  for (int i = 0; i < s.nx; ++i)
    for (int j = 0; j < s.ny; ++j) {
      auto ell = [&](int k) {
        const double t = s.ts[static_cast<size_t>(k)];
        return (1.0 - t) * (1.0 + t) / s.V[s.index(i, j, k)];
      };
      const double l0 = ell(0), l1 = ell(1), l2 = ell(2);
      const double m0 = ell(n - 1), m1 = ell(n - 2), m2 = ell(n - 3);
      if (!finite({l0, l1, l2, m0, m1, m2})) continue;
      const double minus = (-3 * l0 + 4 * l1 - l2) / (2 * s.ht);
      const double plus = (3 * m0 - 4 * m1 + m2) / (2 * s.ht);
      if (std::abs(minus - 2.0) > worstMinus) {
        worstMinus = std::abs(minus - 2.0);
        out.slopeAtMinus1 = minus;
      }
      if (std::abs(plus + 2.0) > worstPlus) {
        worstPlus = std::abs(plus + 2.0);
        out.slopeAtPlus1 = plus;
      }
      out.maxEllAtEnds = std::max({out.maxEllAtEnds, std::abs(l0), std::abs(m0)});
      any = true;
    }
  if (!any) fail(ErrorCode::InvalidArgument, "no grid column has valid values near both ends of the t axis");
  return out;
}

Equivariance equivarianceDefect(const Potential& field, const FuchsianGroup& group,
                                const std::vector<hyperbolic::ChartPoint>& points) {
  Equivariance out;
  std::vector<hyperbolic::Mobius> maps;
  for (const auto& g : group.generators()) {
    maps.push_back(g);
    maps.push_back(g.inverse());
  }
  for (const auto& cp : points) {
    const HalfSpacePoint p = hyperbolic::h2ToH3(cp);
    const auto base = field.evaluate(p);
    for (const auto& g : maps) {
      const auto moved = field.evaluate(g.apply(p));
      out.maxDefect = std::max(out.maxDefect, std::abs(moved.value - base.value));
      out.maxTail = std::max({out.maxTail, base.tail, moved.tail});
    }
  }
  return out;
}

}  // namespace sfk::ansatz
