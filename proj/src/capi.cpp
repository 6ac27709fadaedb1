#include "sfk/sfk.h"

#include "sfk/error.hpp"
#include "sfk/futaki.hpp"
#include "sfk/io.hpp"
#include "sfk/lattice.hpp"
#include "sfk/parabolic.hpp"
#include "sfk/pipeline.hpp"

#include <cstring>
#include <new>
#include <string>

struct sfk_config {
  sfk::RunConfig cfg;
};

struct sfk_report {
  sfk::RunReport rep;
};

struct sfk_model {
  sfk::lattice::RuledSurfaceModel model;
};

struct sfk_class {
  sfk::lattice::KahlerClassParam cls;
};

namespace {

thread_local std::string lastError;

sfk_status statusOf(sfk::ErrorCode code) {
  switch (code) {
    case sfk::ErrorCode::InvalidArgument: return SFK_INVALID_ARGUMENT;
    case sfk::ErrorCode::DimensionMismatch: return SFK_DIMENSION_MISMATCH;
    case sfk::ErrorCode::Precondition: return SFK_PRECONDITION;
    case sfk::ErrorCode::Parse: return SFK_PARSE;
    case sfk::ErrorCode::Io: return SFK_IO;
    case sfk::ErrorCode::Internal: return SFK_INTERNAL;
  }
  return SFK_INTERNAL;
}

template <class F>
sfk_status guarded(F&& f) {
  try {
    lastError.clear();
    f();
    return SFK_OK;
  } catch (const sfk::Error& e) {
    lastError = e.what();
    return statusOf(e.code());
  } catch (const std::bad_alloc&) {
    lastError = "out of memory";
    return SFK_INTERNAL;
  } catch (const std::exception& e) {
    lastError = e.what();
    return SFK_INTERNAL;
  }
}

void need(const void* p, const char* name) {
  if (!p) sfk::fail(sfk::ErrorCode::InvalidArgument, std::string(name) + " is null");
}

char* dupString(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* sfk_version(void) { return sfk::kVersion; }
const char* sfk_last_error(void) { return lastError.c_str(); }

const char* sfk_status_name(sfk_status status) {
  switch (status) {
    case SFK_OK: return "ok";
    case SFK_INVALID_ARGUMENT: return "invalid_argument";
    case SFK_DIMENSION_MISMATCH: return "dimension_mismatch";
    case SFK_PRECONDITION: return "precondition";
    case SFK_PARSE: return "parse";
    case SFK_IO: return "io";
    case SFK_CHECK_FAILED: return "check_failed";
    case SFK_INTERNAL: return "internal";
  }
  return "unknown";
}

void sfk_string_free(char* s) { delete[] s; }

sfk_status sfk_config_new(sfk_config** out) {
  return guarded([&] {
    need(out, "out");
    *out = new sfk_config{};
  });
}

sfk_status sfk_config_parse(const char* text, sfk_config** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    *out = new sfk_config{sfk::RunConfig::parse(text)};
  });
}

sfk_status sfk_config_load(const char* path, sfk_config** out) {
  return guarded([&] {
    need(path, "path");
    need(out, "out");
    *out = new sfk_config{sfk::RunConfig::load(path)};
  });
}

sfk_status sfk_config_set(sfk_config* cfg, const char* key, const char* value) {
  return guarded([&] {
    need(cfg, "cfg");
    need(key, "key");
    need(value, "value");
    cfg->cfg.set(key, value);
  });
}

sfk_status sfk_config_ini(const sfk_config* cfg, char** out) {
  return guarded([&] {
    need(cfg, "cfg");
    need(out, "out");
    *out = dupString(cfg->cfg.toIni());
  });
}

void sfk_config_free(sfk_config* cfg) { delete cfg; }

size_t sfk_subcommand_count(void) { return sfk::subcommands().size(); }

const char* sfk_subcommand_name(size_t index) {
  const auto& names = sfk::subcommands();
  return index < names.size() ? names[index].c_str() : nullptr;
}

sfk_status sfk_run(const char* subcommand, const sfk_config* cfg, sfk_report** out) {
  return guarded([&] {
    need(subcommand, "subcommand");
    need(cfg, "cfg");
    need(out, "out");
    *out = new sfk_report{sfk::runPipeline(subcommand, cfg->cfg)};
  });
}

int sfk_report_exit_code(const sfk_report* report) { return report ? report->rep.exitCode : 2; }

const char* sfk_report_failed_check(const sfk_report* report) {
  if (!report || !report->rep.failedCheck) return nullptr;
  return report->rep.failedCheck->c_str();
}

sfk_status sfk_report_json(const sfk_report* report, int indent, char** out) {
  return guarded([&] {
    need(report, "report");
    need(out, "out");
    *out = dupString(report->rep.json.dump(indent));
  });
}

sfk_status sfk_report_write(const sfk_report* report, const char* path) {
  return guarded([&] {
    need(report, "report");
    need(path, "path");
    sfk::writeFileAtomic(path, report->rep.json.dump(2) + "\n");
  });
}

void sfk_report_free(sfk_report* report) { delete report; }

sfk_status sfk_model_new(int genus, int degree, int blowups, sfk_model** out) {
  return guarded([&] {
    need(out, "out");
    *out = new sfk_model{sfk::lattice::RuledSurfaceModel(genus, degree, blowups)};
  });
}

int sfk_model_signature(const sfk_model* model) { return model ? model->model.signature() : 0; }
int sfk_model_euler_characteristic(const sfk_model* model) { return model ? model->model.eulerChar() : 0; }
int sfk_model_c1_squared(const sfk_model* model) { return model ? model->model.c1Square() : 0; }
void sfk_model_free(sfk_model* model) { delete model; }

sfk_status sfk_class_new(const sfk_model* model, const char* fiber_area, const char* b, const char* weights,
                         sfk_class** out) {
  return guarded([&] {
    need(model, "model");
    need(fiber_area, "fiber_area");
    need(out, "out");
    auto w = sfk::parseRationalList(weights ? weights : "");
    const auto area = sfk::parseRational(fiber_area);
    if (b)
      *out = new sfk_class{sfk::lattice::KahlerClassParam(area, sfk::parseRational(b), std::move(w))};
    else
      *out = new sfk_class{sfk::lattice::KahlerClassParam::admissible(model->model, area, std::move(w))};
  });
}

sfk_status sfk_class_b(const sfk_class* cls, char** out) {
  return guarded([&] {
    need(cls, "cls");
    need(out, "out");
    *out = dupString(sfk::formatRational(cls->cls.b()));
  });
}

sfk_status sfk_class_admissible(const sfk_model* model, const sfk_class* cls, int* admissible) {
  return guarded([&] {
    need(model, "model");
    need(cls, "cls");
    need(admissible, "admissible");
    *admissible = sfk::lattice::isAdmissible(model->model, cls->cls).admissible ? 1 : 0;
  });
}

void sfk_class_free(sfk_class* cls) { delete cls; }

sfk_status sfk_futaki_via_weights(const sfk_model* model, const sfk_class* cls, char** out) {
  return guarded([&] {
    need(model, "model");
    need(cls, "cls");
    need(out, "out");
    *out = dupString(sfk::formatRational(sfk::futaki::futakiViaWeights(model->model, cls->cls)));
  });
}

sfk_status sfk_futaki_via_boundary(const sfk_model* model, const sfk_class* cls, char** out) {
  return guarded([&] {
    need(model, "model");
    need(cls, "cls");
    need(out, "out");
    *out = dupString(sfk::formatRational(sfk::futaki::futakiViaBoundary(model->model, cls->cls)));
  });
}

sfk_status sfk_futaki_zero_class_exists(const sfk_model* model, int* exists) {
  return guarded([&] {
    need(model, "model");
    need(exists, "exists");
    *exists = sfk::futaki::existenceClassification(model->model) ==
                      sfk::futaki::Existence::AdmissibleFutakiZeroExists
                  ? 1
                  : 0;
  });
}

sfk_status sfk_quasi_stable(int degree, const char* weights, const char* alpha, int* stable) {
  return guarded([&] {
    need(weights, "weights");
    need(stable, "stable");
    const auto bundle = sfk::parabolic::ParabolicBundle::fromWeights(degree, sfk::parseRationalList(weights),
                                                                     sfk::parseRationalList(alpha ? alpha : ""));
    *stable = sfk::parabolic::isQuasiStable(bundle).quasiStable ? 1 : 0;
  });
}

}  // extern "C"
