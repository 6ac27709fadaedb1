#include "sfk/hyperbolic.hpp"

#include "sfk/error.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>
#include <unordered_map>

namespace sfk::hyperbolic {

HalfSpacePoint Mobius::apply(const HalfSpacePoint& p) const {
  const Complex w{p.x, p.u};
  const Complex cw = c * w + d;
  const double denom = std::norm(cw) + c * c * p.z * p.z;
  const Complex top = (a * w + b) * std::conj(cw) + a * c * p.z * p.z;
  return {top.real() / denom, top.imag() / denom, p.z / denom};
}

double Mobius::projectiveDistance(const Mobius& o) const {
  auto dist = [&](double s) {
    return std::max({std::abs(a - s * o.a), std::abs(b - s * o.b), std::abs(c - s * o.c), std::abs(d - s * o.d)});
  };
  return std::min(dist(1.0), dist(-1.0));
}

HalfSpacePoint h2ToH3(double x, double y, double t) {
  if (!(y > 0.0)) fail(ErrorCode::InvalidArgument, "h2ToH3 needs y > 0, got " + std::to_string(y));
  if (!(std::abs(t) < 1.0)) fail(ErrorCode::InvalidArgument, "h2ToH3 needs |t| < 1, got " + std::to_string(t));
  return {x, y * t, y * std::sqrt((1.0 - t) * (1.0 + t))};
}

double h3CoshDistanceMinusOne(const HalfSpacePoint& p, const HalfSpacePoint& q) {
  const double dx = p.x - q.x, du = p.u - q.u, dz = p.z - q.z;
  return (dx * dx + du * du + dz * dz) / (2.0 * p.z * q.z);
}

double h3Distance(const HalfSpacePoint& p, const HalfSpacePoint& q) {
  const double delta = h3CoshDistanceMinusOne(p, q);
  return std::log1p(delta + std::sqrt(delta * (delta + 2.0)));
}

double h3Green(double r) {
  if (!(r > 0.0)) fail(ErrorCode::InvalidArgument, "Green's function needs r > 0, got " + std::to_string(r));
  return 0.5 * (1.0 / std::tanh(r) - 1.0);
}

double h2Distance(Complex z, Complex w) {
  const double delta = std::norm(z - w) / (2.0 * z.imag() * w.imag());
  return std::log1p(delta + std::sqrt(delta * (delta + 2.0)));
}

FuchsianGroup::FuchsianGroup(std::vector<Mobius> generators) : generators_(std::move(generators)) {
  if (generators_.size() < 4 || generators_.size() % 2 != 0)
    fail(ErrorCode::InvalidArgument, "a surface group of genus >= 2 needs an even number (>= 4) of generators");
  for (size_t i = 0; i < generators_.size(); ++i) {
    const auto& g = generators_[i];
    if (std::abs(g.determinant() - 1.0) > 1e-9)
      fail(ErrorCode::InvalidArgument, "generator " + std::to_string(i + 1) + " does not have determinant 1");
    if (!(std::abs(g.trace()) > 2.0))
      fail(ErrorCode::InvalidArgument, "generator " + std::to_string(i + 1) + " is not hyperbolic (|trace| <= 2)");
  }
}

FuchsianGroup FuchsianGroup::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Io, "cannot open group file '" + path + "'");
  std::vector<Mobius> gens;
  std::string line;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ss(line);
    Mobius m;
    std::string extra;
    if (!(ss >> m.a >> m.b >> m.c >> m.d) || (ss >> extra))
      fail(ErrorCode::Parse, path + ":" + std::to_string(lineNo) + ": expected four reals");
    gens.push_back(m);
  }
  FuchsianGroup group(std::move(gens));
  const double residual = group.relationResidual();
  if (!(residual < 1e-10))
    fail(ErrorCode::InvalidArgument, "group file '" + path + "' fails the surface relation (residual " +
                                         std::to_string(residual) + ")");
  return group;
}

FuchsianGroup FuchsianGroup::regularOctagon() {
  using std::numbers::pi;
  const double halfLength = std::acosh(1.0 + std::sqrt(2.0));  // inradius
  // SU(1,1) matrices acting on the disk.
  struct Su11 {
    Complex a, b, c, d;
    Su11 operator*(const Su11& o) const {
      return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
  };
  auto rot = [](double angle) {
    return Su11{std::polar(1.0, angle / 2), 0.0, 0.0, std::polar(1.0, -angle / 2)};
  };
  auto translate = [&](double angle) {
    Su11 t{std::cosh(halfLength), std::sinh(halfLength), std::sinh(halfLength), std::cosh(halfLength)};
    return rot(angle) * t * rot(-angle);
  };
  auto mid = [](int k) { return pi / 8 + k * pi / 4; };
  // Side i <- side j: rotate side j opposite side i, then translate across side i.
  auto pairing = [&](int i, int j) { return translate(mid(i)) * rot(mid(i) + pi - mid(j)); };
  // Conjugate to the upper half-plane: C^{-1} M C with C = [[1, -i], [1, i]].
  auto toHalfPlane = [](const Su11& m) {
    const Complex I{0.0, 1.0};
    const Su11 cayley{1.0, -I, 1.0, I};
    const Su11 inv{0.5, 0.5, 0.5 * I, -0.5 * I};
    Su11 r = inv * m * cayley;
    Complex scale = std::sqrt(r.a * r.d - r.b * r.c);
    r = {r.a / scale, r.b / scale, r.c / scale, r.d / scale};
    if (std::abs(r.a.imag()) + std::abs(r.b.imag()) > std::abs(r.a.real()) + std::abs(r.b.real()))
      r = {r.a * I, r.b * I, r.c * I, r.d * I};
    return Mobius{r.a.real(), r.b.real(), r.c.real(), r.d.real()};
  };
  return FuchsianGroup({toHalfPlane(pairing(0, 2)), toHalfPlane(pairing(3, 1)), toHalfPlane(pairing(4, 6)),
                        toHalfPlane(pairing(7, 5))});
}

double FuchsianGroup::relationResidual() const {
  Mobius r = Mobius::identity();
  for (size_t i = 0; i + 1 < generators_.size(); i += 2) {
    const Mobius& a = generators_[i];
    const Mobius& b = generators_[i + 1];
    r = r * a * b * a.inverse() * b.inverse();
  }
  return r.projectiveDistance(Mobius::identity());
}

namespace {

Mobius canonicalSign(const Mobius& m) {
  const double entries[4] = {m.a, m.b, m.c, m.d};
  double best = 0.0;
  for (double e : entries)
    if (std::abs(e) > std::abs(best)) best = e;
  return best < 0 ? Mobius{-m.a, -m.b, -m.c, -m.d} : m;
}

double scaleOf(const Mobius& m) {
  return std::max({1.0, std::abs(m.a), std::abs(m.b), std::abs(m.c), std::abs(m.d)});
}

}  // namespace

GroupBall groupBall(const FuchsianGroup& group, int maxWordLength) {
  if (maxWordLength < 0) fail(ErrorCode::InvalidArgument, "word length must be >= 0");
  const auto& gens = group.generators();
  const int n = static_cast<int>(gens.size());
  std::vector<Mobius> letters(gens);
  for (const auto& g : gens) letters.push_back(g.inverse());

  GroupBall ball;
  std::unordered_multimap<long long, size_t> index;
  constexpr double kBucket = 1e5;
  auto keyOf = [&](const Mobius& m) { return std::llround(canonicalSign(m).a * kBucket / scaleOf(m) * 1e3); };
  auto insert = [&](const Mobius& m, int length) {
    const Mobius cm = canonicalSign(m);
    const long long key = keyOf(cm);
    const double tol = 1e-9 * scaleOf(cm);
    for (long long k = key - 1; k <= key + 1; ++k) {
      auto [lo, hi] = index.equal_range(k);
      for (auto it = lo; it != hi; ++it)
        if (ball.elements[it->second].projectiveDistance(cm) < tol) return false;
    }
    index.emplace(key, ball.elements.size());
    ball.elements.push_back(cm);
    ball.wordLength.push_back(length);
    return true;
  };

  insert(Mobius::identity(), 0);
  struct Frontier {
    Mobius element;
    int lastLetter;
  };
  std::vector<Frontier> shell{{Mobius::identity(), -1}};
  for (int length = 1; length <= maxWordLength; ++length) {
    std::vector<Frontier> next;
    for (const auto& f : shell) {
      for (int l = 0; l < 2 * n; ++l) {
        if (f.lastLetter >= 0 && l == (f.lastLetter + n) % (2 * n)) continue;
        const Mobius m = f.element * letters[static_cast<size_t>(l)];
        if (insert(m, length)) next.push_back({m, l});
      }
    }
    shell = std::move(next);
  }
  return ball;
}

DirichletDomain::DirichletDomain(const FuchsianGroup& group, Complex center, int constraintWordLength)
    : center_(center) {
  if (!(center.imag() > 0.0)) fail(ErrorCode::InvalidArgument, "Dirichlet center must lie in the upper half-plane");
  const GroupBall ball = groupBall(group, constraintWordLength);
  for (size_t i = 1; i < ball.size(); ++i) {
    const Complex q = ball.elements[i].apply(center);
    const Complex w = (q - center) / (q - std::conj(center));
    const double rho = 2.0 * std::atanh(std::min(std::abs(w), 1.0 - 1e-16));
    if (rho < 1e-9) continue;  // stabilizes the center; no constraint
    sides_.push_back({rho, std::arg(w)});
    constraints_.push_back(ball.elements[i]);
  }
  if (sides_.empty()) fail(ErrorCode::InvalidArgument, "group ball produced no Dirichlet constraints");

  constexpr int kSamples = 4096;
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  int previous = activeSide(0.0);
  for (int s = 1; s <= kSamples; ++s) {
    const double phi = kTwoPi * s / kSamples;
    const int current = activeSide(phi);
    if (current != previous) {
      double lo = kTwoPi * (s - 1) / kSamples, hi = phi;
      const Side& a = sides_[static_cast<size_t>(previous)];
      const Side& b = sides_[static_cast<size_t>(current)];
      for (int it = 0; it < 80; ++it) {
        const double midPhi = 0.5 * (lo + hi);
        if (sideRadius(a, midPhi) <= sideRadius(b, midPhi)) lo = midPhi; else hi = midPhi;
      }
      vertexAngles_.push_back(std::fmod(0.5 * (lo + hi), kTwoPi));
      previous = current;
    }
  }
  // Several constraints tie at a vertex; keep one angle per vertex.
  std::sort(vertexAngles_.begin(), vertexAngles_.end());
  std::vector<double> merged;
  for (double a : vertexAngles_)
    if (merged.empty() || a - merged.back() > 1e-9) merged.push_back(a);
  if (merged.size() > 1 && merged.front() + kTwoPi - merged.back() < 1e-9) merged.pop_back();
  vertexAngles_ = std::move(merged);
}

double DirichletDomain::sideRadius(const Side& s, double phi) const {
  const double cosDelta = std::cos(phi - s.phiQ);
  const double threshold = std::tanh(0.5 * s.rhoQ);
  if (cosDelta <= threshold) return std::numeric_limits<double>::infinity();
  return std::atanh(threshold / cosDelta);
}

int DirichletDomain::activeSide(double phi) const {
  int best = -1;
  double bestRadius = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < sides_.size(); ++i) {
    const double r = sideRadius(sides_[i], phi);
    if (r < bestRadius) {
      bestRadius = r;
      best = static_cast<int>(i);
    }
  }
  if (best < 0) fail(ErrorCode::InvalidArgument, "Dirichlet domain is unbounded in direction " + std::to_string(phi));
  return best;
}

double DirichletDomain::boundaryRadius(double phi) const {
  return sideRadius(sides_[static_cast<size_t>(activeSide(phi))], phi);
}

Complex DirichletDomain::pointAt(double rho, double phi) const {
  const Complex w = std::polar(std::tanh(0.5 * rho), phi);
  return (center_ - std::conj(center_) * w) / (1.0 - w);
}

bool DirichletDomain::contains(Complex z, double slack) const {
  if (!(z.imag() > 0.0)) return false;
  const double toCenter = std::norm(z - center_) / center_.imag();
  for (const auto& g : constraints_) {
    const Complex q = g.apply(center_);
    if (toCenter > std::norm(z - q) / q.imag() * (1.0 + slack) + slack) return false;
  }
  return true;
}

double DirichletDomain::area() const {
  // Area = integral over phi of (cosh rho(phi) - 1).
  std::vector<double> nodes, weights;
  gaussLegendre(24, nodes, weights);
  std::vector<double> cuts = vertexAngles_;
  if (cuts.empty()) cuts.push_back(0.0);
  double total = 0.0;
  for (size_t i = 0; i < cuts.size(); ++i) {
    const double lo = cuts[i];
    const double hi = i + 1 < cuts.size() ? cuts[i + 1] : cuts[0] + 2.0 * std::numbers::pi;
    // The integrand steepens near vertices; split each side.
    constexpr int kPieces = 8;
    for (int p = 0; p < kPieces; ++p) {
      const double a = lo + (hi - lo) * p / kPieces, b = lo + (hi - lo) * (p + 1) / kPieces;
      for (size_t q = 0; q < nodes.size(); ++q) {
        const double phi = 0.5 * (a + b) + 0.5 * (b - a) * nodes[q];
        total += 0.5 * (b - a) * weights[q] * (std::cosh(boundaryRadius(phi)) - 1.0);
      }
    }
  }
  return total;
}

void gaussLegendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "Gauss-Legendre order must be >= 1");
  nodes.assign(static_cast<size_t>(n), 0.0);
  weights.assign(static_cast<size_t>(n), 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) { p1 = x; p0 = 1.0; }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nodes[static_cast<size_t>(i)] = -x;
    nodes[static_cast<size_t>(n - 1 - i)] = x;
    weights[static_cast<size_t>(i)] = w;
    weights[static_cast<size_t>(n - 1 - i)] = w;
  }
}

}  // namespace sfk::hyperbolic
