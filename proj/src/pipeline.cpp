#include "sfk/pipeline.hpp"

#include "sfk/ansatz.hpp"
#include "sfk/asdcalc.hpp"
#include "sfk/error.hpp"
#include "sfk/futaki.hpp"
#include "sfk/io.hpp"
#include "sfk/lattice.hpp"
#include "sfk/parabolic.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>

#ifndef SFK_DATA_DIR
#define SFK_DATA_DIR "data"
#endif

namespace sfk {

namespace {

using nlohmann::json;

// ---- value parsing; every failure is a configuration error ----

std::string where(const std::string& section, const std::string& key) { return section + "." + key; }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  for (auto& x : out) {
    const auto b = x.find_first_not_of(" \t"), e = x.find_last_not_of(" \t");
    x = b == std::string::npos ? std::string() : x.substr(b, e - b + 1);
  }
  return out;
}

long long toInt(const std::string& text, const std::string& name) {
  long long v = 0;
  const auto* end = text.data() + text.size();
  const auto r = std::from_chars(text.data(), end, v);
  if (text.empty() || r.ec != std::errc() || r.ptr != end) fail(ErrorCode::Parse, name + ": expected an integer, got '" + text + "'");
  return v;
}

double toDouble(const std::string& text, const std::string& name) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || !std::isfinite(v))
    fail(ErrorCode::Parse, name + ": expected a finite real number, got '" + text + "'");
  return v;
}

class Reader {
 public:
  explicit Reader(const RunConfig& c) : c_(c) {}

  std::optional<std::string> raw(const std::string& s, const std::string& k) const { return c_.get(s, k); }
  std::string required(const std::string& s, const std::string& k) const {
    auto v = c_.get(s, k);
    if (!v || v->empty()) fail(ErrorCode::InvalidArgument, "missing required key " + where(s, k));
    return *v;
  }
  long long integer(const std::string& s, const std::string& k, std::optional<long long> def = {}) const {
    auto v = c_.get(s, k);
    if (!v) {
      if (!def) fail(ErrorCode::InvalidArgument, "missing required key " + where(s, k));
      return *def;
    }
    return toInt(*v, where(s, k));
  }
  double real(const std::string& s, const std::string& k, double def) const {
    auto v = c_.get(s, k);
    return v ? toDouble(*v, where(s, k)) : def;
  }
  double positive(const std::string& s, const std::string& k, double def) const {
    const double v = real(s, k, def);
    if (!(v > 0)) fail(ErrorCode::InvalidArgument, where(s, k) + " must be > 0");
    return v;
  }
  bool flag(const std::string& s, const std::string& k, bool def) const {
    auto v = c_.get(s, k);
    if (!v) return def;
    if (*v == "true" || *v == "yes" || *v == "1") return true;
    if (*v == "false" || *v == "no" || *v == "0") return false;
    fail(ErrorCode::Parse, where(s, k) + ": expected true or false, got '" + *v + "'");
  }
  std::vector<double> reals(const std::string& s, const std::string& k, size_t count, std::vector<double> def) const {
    auto v = c_.get(s, k);
    if (!v) return def;
    const auto parts = split(*v, ',');
    if (parts.size() != count)
      fail(ErrorCode::Parse, where(s, k) + ": expected " + std::to_string(count) + " comma separated values");
    std::vector<double> out;
    for (const auto& p : parts) out.push_back(toDouble(p, where(s, k)));
    return out;
  }
  std::vector<Rational> rationals(const std::string& s, const std::string& k) const {
    auto v = c_.get(s, k);
    if (!v) return {};
    try {
      return parseRationalList(*v);
    } catch (const Error& e) {
      fail(e.code(), where(s, k) + ": " + e.what());
    }
  }

 private:
  const RunConfig& c_;
};

// ---- checks ----

class Checks {
 public:
  void add(const std::string& name, bool pass, json detail = json::object()) {
    detail["name"] = name;
    detail["pass"] = pass;
    list_.push_back(std::move(detail));
    if (!pass && !firstFail_) firstFail_ = name;
  }
  bool allPass() const { return !firstFail_.has_value(); }
  const std::optional<std::string>& firstFail() const { return firstFail_; }
  json toJson() const { return list_; }

 private:
  json list_ = json::array();
  std::optional<std::string> firstFail_;
};

json rat(const Rational& r) { return formatRational(r); }

json ratList(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& r : v) a.push_back(formatRational(r));
  return a;
}

// ---- lattice / class construction ----

struct AreaInput {
  Rational coeff;
  std::string unit;  // "" or "pi"
};

AreaInput fiberAreaOf(const Reader& r) {
  std::string text = r.raw("class", "fiber_area").value_or("1");
  AreaInput a;
  if (text.size() > 2 && text.compare(text.size() - 2, 2, "pi") == 0) {
    a.unit = "pi";
    text = text.substr(0, text.size() - 2);
    while (!text.empty() && (text.back() == '*' || text.back() == ' ')) text.pop_back();
    if (text.empty()) text = "1";
  }
  try {
    a.coeff = parseRational(text);
  } catch (const Error& e) {
    fail(e.code(), std::string("class.fiber_area: ") + e.what());
  }
  return a;
}

std::string squaredUnit(const std::string& unit) { return unit.empty() ? "1" : unit + "^2"; }

struct ClassInput {
  lattice::RuledSurfaceModel model;
  lattice::KahlerClassParam cls;
  std::string unit;
  bool bGiven = false;
};

ClassInput classFromConfig(const Reader& r) {
  const auto weights = r.rationals("class", "weights");
  const long long genus = r.integer("surface", "genus");
  const long long degree = r.integer("surface", "degree");
  const long long blowups = r.integer("surface", "blowups", static_cast<long long>(weights.size()));
  if (blowups != static_cast<long long>(weights.size()))
    fail(ErrorCode::InvalidArgument, "surface.blowups = " + std::to_string(blowups) + " but class.weights has " +
                                         std::to_string(weights.size()) + " entries");
  lattice::RuledSurfaceModel model(static_cast<int>(genus), static_cast<int>(degree), static_cast<int>(blowups));
  const AreaInput area = fiberAreaOf(r);
  const auto bText = r.raw("class", "B");
  if (bText) {
    Rational b;
    try {
      b = parseRational(*bText);
    } catch (const Error& e) {
      fail(e.code(), std::string("class.B: ") + e.what());
    }
    return {model, lattice::KahlerClassParam(area.coeff, b, weights), area.unit, true};
  }
  return {model, lattice::KahlerClassParam::admissible(model, area.coeff, weights), area.unit, false};
}

json modelJson(const lattice::RuledSurfaceModel& m) {
  const auto in = lattice::inertia(lattice::intersectionMatrix(m));
  return {{"genus", m.genus()},
          {"degree", m.bundleDegree()},
          {"blowups", m.blowupCount()},
          {"signature", m.signature()},
          {"euler_characteristic", m.eulerChar()},
          {"c1_squared", m.c1Square()},
          {"two_chi_plus_three_tau", 2 * m.eulerChar() + 3 * m.signature()},
          {"inertia", {{"positive", in.positive}, {"negative", in.negative}, {"zero", in.zero}}}};
}

json classJson(const ClassInput& c) {
  return {{"fiber_area", rat(c.cls.fiberArea())},
          {"B", rat(c.cls.b())},
          {"B_source", c.bGiven ? "config" : "admissible"},
          {"weights", ratList(c.cls.weights())},
          {"weight_sum", rat(c.cls.weightSum())},
          {"area_unit", c.unit.empty() ? "1" : c.unit}};
}

json piJson(const lattice::PiMultiple& p, const std::string& baseUnit) {
  (void)baseUnit;
  return {{"coeff", rat(p.coeff)}, {"unit", p.power == 1 ? "pi" : "pi^" + std::to_string(p.power)}};
}

void admissibilityChecks(const ClassInput& c, Checks& checks, json& results) {
  const auto rep = lattice::isAdmissible(c.model, c.cls);
  json pairings = json::array();
  for (const auto& p : rep.pairings) pairings.push_back({{"curve", p.curve}, {"area", rat(p.area)}});
  results["admissibility"] = {{"admissible", rep.admissible},
                              {"c1_dot_omega", rat(rep.c1DotOmega)},
                              {"omega_squared", rat(rep.omegaSquared)},
                              {"conditions",
                               {{"(i) c1.omega = 0", rep.chernOrthogonal},
                                {"(ii) A > 0", rep.positiveFiberArea},
                                {"(iii) omega^2 > 0", rep.positiveSquare},
                                {"(iv) omega.C > 0", rep.positiveOnCurves}}},
                              {"pairings", pairings},
                              {"failed_condition", rep.failedCondition ? json(*rep.failedCondition) : json(nullptr)}};
  json detail;
  if (rep.failedCondition) detail["failed_condition"] = *rep.failedCondition;
  checks.add("admissibility", rep.admissible, detail);
}

void futakiChecks(const ClassInput& c, Checks& checks, json& results) {
  const std::string unit = squaredUnit(c.unit);
  json f;
  f["unit"] = unit;
  f["classification"] = futaki::toString(futaki::existenceClassification(c.model));
  f["matsushima_lichnerowicz_vanishes"] = futaki::matsushimaLichnerowiczVanishes(c.model);
  try {
    const Rational viaWeights = futaki::futakiViaWeights(c.model, c.cls);
    const Rational viaBoundary = futaki::futakiViaBoundary(c.model, c.cls);
    f["via_weights"] = rat(viaWeights);
    f["via_boundary"] = rat(viaBoundary);
    f["value"] = rat(viaWeights);
    checks.add("futaki_formulas_agree", viaWeights == viaBoundary);
    checks.add("futaki_zero", viaWeights == 0, {{"value", rat(viaWeights)}, {"unit", unit}});
    f["scalar_flat_existence"] = futaki::scalarFlatExistence(c.model, c.cls);
    if (viaWeights == 0 && lattice::isAdmissible(c.model, c.cls).admissible)
      f["gradient"] = ratList(futaki::restrictedFutakiGradient(c.model, c.cls));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Precondition) throw;
    checks.add("futaki_precondition", false, {{"message", e.what()}});
  }
  results["futaki"] = f;
}

void stabilityChecks(const lattice::RuledSurfaceModel& model, const std::vector<Rational>& weights,
                     const std::vector<Rational>& alpha, Checks& checks, json& results) {
  const auto bundle = parabolic::ParabolicBundle::fromWeights(model.bundleDegree(), weights, alpha);
  const auto verdict = parabolic::isQuasiStable(bundle);
  json s{{"quasi_stable", verdict.quasiStable},
         {"half_total_degree", rat(verdict.halfTotal)},
         {"total_degree", rat(parabolic::parabolicDegreeTotal(bundle))}};
  if (verdict.witness) {
    s["witness"] = verdict.witness->describe();
    s["witness_degree"] = rat(verdict.witnessDegree);
  }
  if (weights.size() <= 12) {
    const auto exhaustive = parabolic::isQuasiStableExhaustive(bundle);
    s["exhaustive_agrees"] = exhaustive.quasiStable == verdict.quasiStable;
    checks.add("stability_exhaustive_agrees", exhaustive.quasiStable == verdict.quasiStable);
  }
  const bool futakiZero = sum(weights) == model.bundleDegree();
  s["futaki_zero"] = futakiZero;
  checks.add("stability_matches_futaki", futakiZero == verdict.quasiStable);
  json detail;
  if (verdict.witness) detail["witness"] = verdict.witness->describe();
  checks.add("quasi_stability", verdict.quasiStable, detail);
  results["stability"] = s;
}

// ---- monopole / ansatz ----

hyperbolic::FuchsianGroup groupFromConfig(const Reader& r) {
  const std::string name = r.raw("monopole", "group").value_or("default");
  if (name == "builtin") return hyperbolic::FuchsianGroup::regularOctagon();
  if (name == "default") {
    const char* env = std::getenv("SFK_DATA_DIR");
    return hyperbolic::FuchsianGroup::load(std::string(env ? env : SFK_DATA_DIR) + "/genus2_octagon.txt");
  }
  return hyperbolic::FuchsianGroup::load(name);
}

std::vector<ansatz::ChargePoint> pointsFromConfig(const Reader& r) {
  std::vector<ansatz::ChargePoint> out;
  const auto text = r.raw("monopole", "points");
  if (!text || text->find_first_not_of(" \t") == std::string::npos) return out;
  for (const auto& item : split(*text, ';')) {
    if (item.empty()) continue;
    const auto xyz = split(item, ',');
    if (xyz.size() != 3) fail(ErrorCode::Parse, "monopole.points: expected x,y,t in '" + item + "'");
    ansatz::ChargePoint p;
    p.z = {toDouble(xyz[0], "monopole.points x"), toDouble(xyz[1], "monopole.points y")};
    try {
      p.t = parseRational(xyz[2]);
    } catch (const Error& e) {
      fail(e.code(), std::string("monopole.points t: ") + e.what());
    }
    out.push_back(p);
  }
  return out;
}

struct AnsatzKnobs {
  ansatz::GridSpec grid;
  int wordLength = 4;
  double epsilon = 0.5;
  ansatz::QuadratureOptions quadrature;
  int boundaryPoints = 201;
  double sphereRadius = 0.1;
  double sphereFluxTol = 1e-2;
  double slopeTol = 0.05;
  double ellTol = 1e-6;
  double convergenceRatio = 3.0;
};

AnsatzKnobs knobsFromConfig(const Reader& r) {
  AnsatzKnobs k;
  const auto grid = r.reals("numerics", "grid", 3, {25, 25, 25});
  for (double g : grid)
    if (g != std::floor(g) || g < 1 || g > 400) fail(ErrorCode::InvalidArgument, "numerics.grid entries must be integers in 1..400");
  k.grid.nx = static_cast<int>(grid[0]);
  k.grid.ny = static_cast<int>(grid[1]);
  k.grid.nt = static_cast<int>(grid[2]);
  const auto x = r.reals("numerics", "x_range", 2, {k.grid.x[0], k.grid.x[1]});
  const auto y = r.reals("numerics", "y_range", 2, {k.grid.y[0], k.grid.y[1]});
  const auto t = r.reals("numerics", "t_range", 2, {k.grid.t[0], k.grid.t[1]});
  k.grid.x = {x[0], x[1]};
  k.grid.y = {y[0], y[1]};
  k.grid.t = {t[0], t[1]};
  if (r.raw("numerics", "exclusion_radius")) k.grid.exclusionRadius = r.positive("numerics", "exclusion_radius", 1);
  k.wordLength = static_cast<int>(r.integer("numerics", "word_length", 4));
  if (k.wordLength < 0 || k.wordLength > 6) fail(ErrorCode::InvalidArgument, "numerics.word_length must lie in 0..6");
  k.quadrature.wordLength = k.wordLength;
  k.epsilon = r.positive("numerics", "epsilon", 0.5);
  k.quadrature.phiOrder = static_cast<int>(r.integer("numerics", "phi_order", 16));
  k.quadrature.rhoOrder = static_cast<int>(r.integer("numerics", "rho_order", 32));
  if (k.quadrature.phiOrder < 2 || k.quadrature.rhoOrder < 2 || k.quadrature.phiOrder > 200 || k.quadrature.rhoOrder > 200)
    fail(ErrorCode::InvalidArgument, "quadrature orders must lie in 2..200");
  k.boundaryPoints = static_cast<int>(r.integer("numerics", "boundary_points", 201));
  if (k.boundaryPoints < 5 || k.boundaryPoints > 100000)
    fail(ErrorCode::InvalidArgument, "numerics.boundary_points must lie in 5..100000");
  k.sphereRadius = r.positive("numerics", "sphere_radius", 0.1);
  k.sphereFluxTol = r.positive("numerics", "sphere_flux_tol", 1e-2);
  k.slopeTol = r.positive("numerics", "slope_tol", 0.05);
  k.ellTol = r.positive("numerics", "ell_tol", 1e-6);
  k.convergenceRatio = r.positive("numerics", "convergence_ratio", 3.0);
  return k;
}

json residualJson(const ansatz::Residual& r) {
  return {{"value", r.value}, {"sup", r.supCombination}, {"scale", r.scale}, {"points", r.points}};
}

json convergenceJson(const ansatz::ConvergenceStudy& c) {
  return {{"coarse", c.coarse}, {"fine", c.fine}, {"ratio", std::isfinite(c.ratio) ? json(c.ratio) : json("inf")},
          {"roundoff_floor", c.floor}, {"converging", c.converging}};
}

void ansatzChecks(const ansatz::MonopoleConfig& config, const AnsatzKnobs& k, const Reader& r, Checks& checks,
                  json& results) {
  json a;
  a["genus"] = config.group().genus();
  a["relation_residual"] = config.group().relationResidual();
  a["weights"] = ratList(config.weights());
  a["weight_sum"] = rat(config.weightSum());
  a["quantized"] = config.quantized();

  const ansatz::Potential field(config, k.wordLength);
  a["images"] = field.imageCount();
  const auto sample = ansatz::potential(field, config, k.grid);
  double minV = std::numeric_limits<double>::infinity();
  for (double v : sample.V)
    if (std::isfinite(v)) minV = std::min(minV, v);
  a["grid"] = {{"n", {sample.nx, sample.ny, sample.nt}},
               {"excluded", sample.excludedCount},
               {"exclusion_radius", sample.exclusionRadius},
               {"tail", sample.tail},
               {"min_V", minV}};
  checks.add("potential_at_least_one", minV >= 1.0, {{"min_V", minV}});

  const auto harm = ansatz::harmonicityConvergence(sample, k.convergenceRatio);
  const auto scal = ansatz::scalarCurvatureConvergence(sample, k.convergenceRatio);
  a["harmonicity"] = convergenceJson(harm);
  a["scalar_curvature"] = convergenceJson(scal);
  checks.add("harmonicity_convergence", harm.converging, convergenceJson(harm));
  checks.add("scalar_curvature_convergence", scal.converging, convergenceJson(scal));

  const auto ricci = ansatz::ricciAsdCheck(sample);
  a["ricci"] = {{"omega_pairing", residualJson(ricci.omegaPairing)},
                {"self_dual_part", residualJson(ricci.selfDualPart)},
                {"maxwell_closure", residualJson(ricci.maxwellClosure)},
                {"sup_rho", ricci.supRho}};

  json fluxes = json::array();
  double worstFlux = 0.0;
  for (size_t j = 0; j < config.points().size(); ++j) {
    const double f = ansatz::smallSphereFlux(config, k.wordLength, j, k.sphereRadius);
    fluxes.push_back(f);
    worstFlux = std::max(worstFlux, std::abs(f + 1.0));
  }
  a["small_sphere_flux"] = fluxes;
  checks.add("small_sphere_flux", worstFlux <= k.sphereFluxTol, {{"max_error", worstFlux}, {"tolerance", k.sphereFluxTol}});

  const auto bf = ansatz::boundaryFlux(config, k.epsilon, k.quadrature);
  const double bfError = std::abs(bf.value - bf.expected.get_d());
  a["boundary_flux"] = {{"epsilon", k.epsilon},  {"value", bf.value},           {"expected", rat(bf.expected)},
                        {"tail", bf.tail},       {"quadrature", bf.quadratureError}, {"tolerance", bf.tolerance()},
                        {"error", bfError}};
  checks.add("boundary_flux", bfError <= bf.tolerance(), {{"error", bfError}, {"tolerance", bf.tolerance()}});

  ansatz::GridSpec line = k.grid;
  line.nx = line.ny = 3;
  line.nt = k.boundaryPoints;
  line.t = {-1.0, 1.0};
  const auto edge = ansatz::potential(field, config, line);
  const auto bb = ansatz::boundaryBehavior(edge);
  const double slopeError = std::max(std::abs(bb.slopeAtMinus1 - 2.0), std::abs(bb.slopeAtPlus1 + 2.0)) / 2.0;
  a["boundary_behavior"] = {{"slope_at_minus_1", bb.slopeAtMinus1},
                            {"slope_at_plus_1", bb.slopeAtPlus1},
                            {"max_ell_at_ends", bb.maxEllAtEnds}};
  checks.add("boundary_slopes", slopeError <= k.slopeTol, {{"relative_error", slopeError}, {"tolerance", k.slopeTol}});
  checks.add("boundary_vanishing", bb.maxEllAtEnds <= k.ellTol, {{"max_ell", bb.maxEllAtEnds}});

  std::vector<hyperbolic::ChartPoint> probes;
  for (double fx : {0.25, 0.75})
    for (double ft : {0.2, 0.8})
      probes.push_back({k.grid.x[0] + fx * (k.grid.x[1] - k.grid.x[0]),
                        std::exp(std::log(k.grid.y[0]) + fx * (std::log(k.grid.y[1]) - std::log(k.grid.y[0]))),
                        std::clamp(k.grid.t[0] + ft * (k.grid.t[1] - k.grid.t[0]), -0.95, 0.95)});
  const auto eq = ansatz::equivarianceDefect(field, config.group(), probes);
  a["equivariance"] = {{"max_defect", eq.maxDefect}, {"max_tail", eq.maxTail}};
  checks.add("equivariance", eq.maxDefect <= 2.0 * eq.maxTail, {{"defect", eq.maxDefect}, {"tolerance", 2.0 * eq.maxTail}});

  const auto areas = ansatz::geometricAreas(config);
  json ex = json::array();
  for (const auto& e : areas.exceptionalAreas) ex.push_back(piJson(e, "pi"));
  a["areas"] = {{"fiber", piJson(areas.fiberArea, "pi")}, {"exceptional", ex}};

  if (auto csv = r.raw("output", "csv")) {
    ansatz::writeCsv(sample, *csv);
    a["csv"] = *csv;
  }
  if (auto svg = r.raw("output", "slice_svg")) {
    const double x = config.points().empty() ? 0.5 * (k.grid.x[0] + k.grid.x[1]) : config.points()[0].z.real();
    ansatz::writeSliceSvg(sample, x, *svg);
    a["slice_svg"] = *svg;
  }
  results["ansatz"] = a;
}

// ---- subcommands ----

void runAdmissible(const Reader& r, Checks& checks, json& results) {
  const auto c = classFromConfig(r);
  results["model"] = modelJson(c.model);
  results["class"] = classJson(c);
  results["total_scalar_curvature"] = piJson(lattice::totalScalarCurvature(c.model, c.cls), c.unit);
  const auto bounds = lattice::curvatureFunctionalBounds(c.model);
  results["curvature_bounds"] = {{"riemann", piJson(bounds.riemannBound, "")}, {"weyl", piJson(bounds.weylBound, "")}};
  admissibilityChecks(c, checks, results);
}

void runFutaki(const Reader& r, Checks& checks, json& results) {
  const auto c = classFromConfig(r);
  results["model"] = modelJson(c.model);
  results["class"] = classJson(c);
  futakiChecks(c, checks, results);
}

void runStability(const Reader& r, Checks& checks, json& results) {
  const auto weights = r.rationals("class", "weights");
  const long long degree = r.integer("surface", "degree");
  const long long genus = r.integer("surface", "genus", 2);
  lattice::RuledSurfaceModel model(static_cast<int>(genus), static_cast<int>(degree), static_cast<int>(weights.size()));
  results["model"] = modelJson(model);
  results["weights"] = ratList(weights);
  stabilityChecks(model, weights, r.rationals("class", "alpha"), checks, results);
}

void runAnsatz(const Reader& r, Checks& checks, json& results) {
  const ansatz::MonopoleConfig config(groupFromConfig(r), pointsFromConfig(r));
  const auto knobs = knobsFromConfig(r);
  if (r.flag("monopole", "compact", false)) {
    checks.add("quantization", config.quantized(), {{"weight_sum", rat(config.weightSum())}});
    if (!config.quantized()) return;
  }
  ansatzChecks(config, knobs, r, checks, results);
}

void runAsdIndex(const Reader& r, Checks& checks, json& results) {
  const long long n = r.integer("numerics", "truncation", 2);
  if (n < 1 || n > 8) fail(ErrorCode::InvalidArgument, "numerics.truncation must lie in 1..8");
  const auto seed = static_cast<std::uint64_t>(r.integer("numerics", "seed", 1));
  const auto rep = asdcalc::asdIndex(static_cast<int>(n), seed);
  constexpr int kMinusTau = 0;  // flat torus
  results["asd_index"] = {
      {"truncation", rep.truncation},
      {"kernel", rep.kernel},
      {"cokernel", rep.cokernel},
      {"index", rep.index},
      {"minus_signature", kMinusTau},
      {"kernel_adjoint", rep.kernelAdjoint},
      {"adjoint_matrix_residual", rep.adjointMatrixResidual},
      {"adjoint_pairing_residual", rep.adjointPairingResidual},
      {"codifferential_pairing_residual", rep.codifferentialPairingResidual},
      {"smallest_nonzero_singular_value", rep.smallestNonzeroSingularValue},
      {"dplus_kernel", rep.closedVersusDPlus.dimFirst},
      {"closed_kernel", rep.closedVersusDPlus.dimSecond},
      {"kernel_s_prime", rep.correspondence.kernelSPrime},
      {"kernel_s", rep.correspondence.kernelS},
      {"lichnerowicz_kernel", rep.lichnerowicz}};
  checks.add("kernel_dimension", rep.kernel == 3, {{"value", rep.kernel}});
  checks.add("cokernel_dimension", rep.cokernel == 3, {{"value", rep.cokernel}});
  checks.add("index_equals_minus_signature", rep.index == kMinusTau, {{"value", rep.index}});
  checks.add("adjoint_matrix", rep.adjointMatrixResidual < 1e-12, {{"residual", rep.adjointMatrixResidual}});
  checks.add("adjoint_pairing", rep.adjointPairingResidual < 1e-12, {{"residual", rep.adjointPairingResidual}});
  checks.add("codifferential_pairing", rep.codifferentialPairingResidual < 1e-12,
             {{"residual", rep.codifferentialPairingResidual}});
  checks.add("dplus_kernel_equals_closed", rep.closedVersusDPlus.equal);
  checks.add("kernel_correspondence",
             rep.correspondence.injective && rep.correspondence.kernelSPrime == 3 && rep.correspondence.kernelS == 3);
  checks.add("lichnerowicz_kernel", rep.lichnerowicz == 0, {{"value", rep.lichnerowicz}});
}

void runFull(const Reader& r, Checks& checks, json& results) {
  const ansatz::MonopoleConfig config(groupFromConfig(r), pointsFromConfig(r));
  const auto knobs = knobsFromConfig(r);
  results["weights"] = ratList(config.weights());
  results["weight_sum"] = rat(config.weightSum());
  checks.add("quantization", config.quantized(), {{"weight_sum", rat(config.weightSum())}});
  if (!config.quantized()) return;

  const int genus = config.group().genus();
  if (auto g = r.raw("surface", "genus"); g && toInt(*g, "surface.genus") != genus)
    fail(ErrorCode::InvalidArgument, "surface.genus disagrees with the genus of the monopole group");
  const Rational k = config.weightSum();
  const int degree = static_cast<int>(k.get_num().get_si());
  if (auto d = r.raw("surface", "degree"); d && toInt(*d, "surface.degree") != degree)
    fail(ErrorCode::InvalidArgument, "surface.degree disagrees with the weight sum of the charges");
  if (r.raw("class", "weights") && r.rationals("class", "weights") != config.weights())
    fail(ErrorCode::InvalidArgument, "class.weights disagrees with the weights (1 + t_j) / 2 of the charges");
  if (r.raw("class", "fiber_area")) {
    const auto area = fiberAreaOf(r);
    if (area.unit != "pi" || area.coeff != 4)
      fail(ErrorCode::InvalidArgument, "class.fiber_area must be 4pi for the monopole construction");
  }
  if (r.raw("class", "B")) fail(ErrorCode::InvalidArgument, "class.B is fixed by admissibility in the full pipeline");
  const lattice::RuledSurfaceModel model(genus, degree, static_cast<int>(config.points().size()));
  ClassInput c{model, lattice::KahlerClassParam::admissible(model, Rational(4), config.weights()), "pi", false};
  results["model"] = modelJson(model);
  results["class"] = classJson(c);

  admissibilityChecks(c, checks, results);
  futakiChecks(c, checks, results);
  stabilityChecks(model, config.weights(), r.rationals("class", "alpha"), checks, results);

  // The monopole areas must match the lattice pairings of the class.
  const auto areas = ansatz::geometricAreas(config);
  bool match = areas.fiberArea.coeff == lattice::integrate(c.cls, lattice::HomologyClass::fiber(model), model);
  for (size_t j = 0; j < areas.exceptionalAreas.size(); ++j)
    match = match && areas.exceptionalAreas[j].coeff ==
                         lattice::integrate(c.cls, lattice::HomologyClass::exceptional(model, static_cast<int>(j + 1)), model);
  checks.add("areas_match_class", match);

  ansatzChecks(config, knobs, r, checks, results);
}

}  // namespace

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names{"admissible", "futaki", "stability", "ansatz", "asd-index", "full"};
  return names;
}

RunReport runPipeline(const std::string& subcommand, const RunConfig& config) {
  const Reader r(config);
  Checks checks;
  json results = json::object();
  if (subcommand == "admissible") runAdmissible(r, checks, results);
  else if (subcommand == "futaki") runFutaki(r, checks, results);
  else if (subcommand == "stability") runStability(r, checks, results);
  else if (subcommand == "ansatz") runAnsatz(r, checks, results);
  else if (subcommand == "asd-index") runAsdIndex(r, checks, results);
  else if (subcommand == "full") runFull(r, checks, results);
  else fail(ErrorCode::InvalidArgument, "unknown subcommand '" + subcommand + "'");

  RunReport rep;
  rep.exitCode = checks.allPass() ? 0 : 1;
  rep.failedCheck = checks.firstFail();
  rep.json = {{"subcommand", subcommand},
              {"status", checks.allPass() ? "pass" : "fail"},
              {"exit_code", rep.exitCode},
              {"failed_check", rep.failedCheck ? json(*rep.failedCheck) : json(nullptr)},
              {"checks", checks.toJson()},
              {"results", results},
              {"config", config.toJson()},
              {"version", kVersion}};
  if (auto path = config.get("output", "report")) writeFileAtomic(*path, rep.json.dump(2) + "\n");
  return rep;
}

}  // namespace sfk
