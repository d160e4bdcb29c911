#include "monopole_spectra.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "monopole/model.hpp"
#include "monopole/qalgebra.hpp"
#include "monopole/reports.hpp"
#include "monopole/spectrum.hpp"
#include "monopole/sturm.hpp"
#include "monopole/version.hpp"

using monopole::ModelParams;
using monopole::Sector;

struct ms_params {
  ModelParams p;
};

namespace {

// Exceptions never cross the C boundary; they map onto status codes.
template <typename Fn>
ms_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const std::invalid_argument&) {
    return MS_ERR_INVALID_ARGUMENT;
  } catch (const std::domain_error&) {
    return MS_ERR_DOMAIN;
  } catch (const std::bad_alloc&) {
    return MS_ERR_INTERNAL;
  } catch (...) {
    return MS_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ms_status fill_level(const std::optional<monopole::spectrum::EnergyLevel>& lvl,
                     ms_level* out) {
  if (!lvl) return MS_ERR_NO_BOUND_STATE;
  out->energy = lvl->energy;
  out->t = lvl->t;
  out->epsilon = lvl->epsilon;
  out->level_number = lvl->level_number;
  return MS_OK;
}

}  // namespace

extern "C" {

ms_status ms_params_create(const double couplings[8], ms_params** out) {
  if (!couplings || !out) return MS_ERR_INVALID_ARGUMENT;
  auto* h = new (std::nothrow) ms_params;
  if (!h) return MS_ERR_INTERNAL;
  h->p.a = couplings[0];
  h->p.b = couplings[1];
  h->p.c0 = couplings[2];
  h->p.c1 = couplings[3];
  h->p.c2 = couplings[4];
  h->p.c3 = couplings[5];
  h->p.c4 = couplings[6];
  h->p.d = couplings[7];
  *out = h;
  return MS_OK;
}

ms_status ms_params_preset(const char* name, ms_params** out) {
  if (!name || !out) return MS_ERR_INVALID_ARGUMENT;
  try {
    auto* h = new ms_params{monopole::preset(name)};
    *out = h;
    return MS_OK;
  } catch (const std::invalid_argument&) {
    return MS_ERR_UNKNOWN_PRESET;
  } catch (...) {
    return MS_ERR_INTERNAL;
  }
}

void ms_params_destroy(ms_params* p) { delete p; }

ms_status ms_params_get(const ms_params* p, double couplings[8]) {
  if (!p || !couplings) return MS_ERR_INVALID_ARGUMENT;
  couplings[0] = p->p.a;
  couplings[1] = p->p.b;
  couplings[2] = p->p.c0;
  couplings[3] = p->p.c1;
  couplings[4] = p->p.c2;
  couplings[5] = p->p.c3;
  couplings[6] = p->p.c4;
  couplings[7] = p->p.d;
  return MS_OK;
}

ms_status ms_params_set(ms_params* p, const char* key, double value) {
  if (!p || !key) return MS_ERR_INVALID_ARGUMENT;
  const std::string k = key;
  double* slot = nullptr;
  if (k == "a") slot = &p->p.a;
  else if (k == "b") slot = &p->p.b;
  else if (k == "c0") slot = &p->p.c0;
  else if (k == "c1") slot = &p->p.c1;
  else if (k == "c2") slot = &p->p.c2;
  else if (k == "c3") slot = &p->p.c3;
  else if (k == "c4") slot = &p->p.c4;
  else if (k == "d") slot = &p->p.d;
  if (!slot) return MS_ERR_INVALID_ARGUMENT;
  *slot = value;
  return MS_OK;
}

ms_status ms_params_validate(const ms_params* p, int* valid, char* message,
                             size_t message_size) {
  if (!p || !valid) return MS_ERR_INVALID_ARGUMENT;
  return guarded([&]() {
    const auto report = monopole::validate_params(p->p);
    *valid = report.ok ? 1 : 0;
    if (message && message_size > 0) {
      std::string text;
      if (!report.ok && !report.issues.empty()) {
        text = report.issues.front().condition;
        if (report.issues.front().witness)
          text += " (witness r = " +
                  monopole::reports::format_double(*report.issues.front().witness) +
                  ")";
      }
      std::snprintf(message, message_size, "%s", text.c_str());
    }
    return MS_OK;
  });
}

ms_status ms_metric_f(const ms_params* p, double r, double* out) {
  if (!p || !out) return MS_ERR_INVALID_ARGUMENT;
  return guarded([&]() {
    *out = monopole::metric_f(p->p, r);
    return MS_OK;
  });
}

ms_status ms_metric_g(const ms_params* p, double r, double* out) {
  if (!p || !out) return MS_ERR_INVALID_ARGUMENT;
  return guarded([&]() {
    *out = monopole::metric_g(p->p, r);
    return MS_OK;
  });
}

ms_status ms_gauge_potential(double x, double y, double z, double out[3]) {
  if (!out) return MS_ERR_INVALID_ARGUMENT;
  return guarded([&]() {
    const auto a = monopole::gauge_potential(x, y, z);
    out[0] = a[0];
    out[1] = a[1];
    out[2] = a[2];
    return MS_OK;
  });
}

ms_status ms_sector(const ms_params* p, double nu1, double nu2, double out[6]) {
  if (!p || !out) return MS_ERR_INVALID_ARGUMENT;
  return guarded([&]() {
    const Sector s = monopole::derived_sector(p->p, nu1, nu2);
    out[0] = s.delta1;
    out[1] = s.delta2;
    out[2] = s.m1;
    out[3] = s.m2;
    out[4] = s.q1;
    out[5] = s.q2;
    return MS_OK;
  });
}

ms_status ms_solve_parabolic(const ms_params* p, double nu1, double nu2, int n1,
                             int n2, ms_level* out) {
  if (!p || !out) return MS_ERR_INVALID_ARGUMENT;
  return guarded([&]() {
    const Sector s = monopole::derived_sector(p->p, nu1, nu2);
    monopole::spectrum::LevelSpec spec;
    spec.mode = monopole::spectrum::Mode::Parabolic;
    spec.n1 = n1;
    spec.n2 = n2;
    return fill_level(monopole::spectrum::solve_energy(p->p, s, spec), out);
  });
}

ms_status ms_solve_spherical(const ms_params* p, double nu1, double nu2, int n,
                             int l, ms_level* out) {
  if (!p || !out) return MS_ERR_INVALID_ARGUMENT;
  return guarded([&]() {
    const Sector s = monopole::derived_sector(p->p, nu1, nu2);
    monopole::spectrum::LevelSpec spec;
    spec.mode = monopole::spectrum::Mode::Spherical;
    spec.n = n;
    spec.l = l;
    return fill_level(monopole::spectrum::solve_energy(p->p, s, spec), out);
  });
}

ms_status ms_solve_parabolic_bisect(const ms_params* p, double nu1, double nu2,
                                    int n1, int n2, ms_level* out) {
  if (!p || !out) return MS_ERR_INVALID_ARGUMENT;
  return guarded([&]() {
    const Sector s = monopole::derived_sector(p->p, nu1, nu2);
    monopole::spectrum::LevelSpec spec;
    spec.mode = monopole::spectrum::Mode::Parabolic;
    spec.n1 = n1;
    spec.n2 = n2;
    return fill_level(monopole::spectrum::solve_energy_bisect(p->p, s, spec), out);
  });
}

ms_status ms_solve_algebraic(const ms_params* p, double nu1, double nu2,
                             int p_level, int eps1, int eps2, int set,
                             double* energy, double* u) {
  if (!p || !energy || !u) return MS_ERR_INVALID_ARGUMENT;
  return guarded([&]() {
    const Sector s = monopole::derived_sector(p->p, nu1, nu2);
    const auto sol =
        monopole::qalgebra::solve_quantization(p->p, s, p_level, eps1, eps2, set);
    if (!sol) return MS_ERR_NO_BOUND_STATE;
    *energy = sol->energy;
    *u = sol->u;
    return MS_OK;
  });
}

ms_status ms_radial_eigen(const ms_params* p, double nu1, double nu2, double k1,
                          int grid_n, double r_max, int n_eigen,
                          double* eigenvalues) {
  if (!p || !eigenvalues || n_eigen < 1) return MS_ERR_INVALID_ARGUMENT;
  return guarded([&]() {
    const Sector s = monopole::derived_sector(p->p, nu1, nu2);
    monopole::sturm::Grid grid{monopole::sturm::GridKind::UniformR, grid_n, r_max};
    const auto res = monopole::sturm::radial_eigen(p->p, s, k1, grid, n_eigen);
    for (int i = 0; i < n_eigen; ++i) eigenvalues[i] = res.eigenvalues[i];
    return MS_OK;
  });
}

ms_status ms_angular_eigen(const ms_params* p, double nu1, double nu2,
                           int grid_n, int n_eigen, double* eigenvalues) {
  if (!p || !eigenvalues || n_eigen < 1) return MS_ERR_INVALID_ARGUMENT;
  return guarded([&]() {
    const Sector s = monopole::derived_sector(p->p, nu1, nu2);
    monopole::sturm::Grid grid{monopole::sturm::GridKind::UniformTheta, grid_n,
                               3.14159265358979323846};
    const auto res = monopole::sturm::angular_eigen(p->p, s, grid, n_eigen);
    for (int i = 0; i < n_eigen; ++i) eigenvalues[i] = res.eigenvalues[i];
    return MS_OK;
  });
}

int ms_run(int argc, const char* const* argv, char** out_text, char** err_text) {
  if (out_text) *out_text = nullptr;
  if (err_text) *err_text = nullptr;
  std::vector<std::string> args;
  args.reserve(argc > 0 ? argc : 0);
  for (int i = 0; i < argc; ++i) args.emplace_back(argv[i] ? argv[i] : "");
  try {
    const auto result = monopole::reports::run_command(args);
    if (out_text && !result.output.empty()) *out_text = dup_string(result.output);
    if (err_text && !result.diagnostics.empty())
      *err_text = dup_string(result.diagnostics);
    return result.exit_code;
  } catch (...) {
    if (err_text) *err_text = dup_string("error: internal failure\n");
    return 2;
  }
}

void ms_string_free(char* s) { std::free(s); }

const char* ms_version(void) { return monopole::kVersion; }

const char* ms_status_name(ms_status s) {
  switch (s) {
    case MS_OK: return "ok";
    case MS_ERR_INVALID_ARGUMENT: return "invalid argument";
    case MS_ERR_DOMAIN: return "domain error";
    case MS_ERR_NO_BOUND_STATE: return "no bound state";
    case MS_ERR_UNKNOWN_PRESET: return "unknown preset";
    case MS_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

}  // extern "C"
