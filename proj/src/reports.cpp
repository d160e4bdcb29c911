#include "monopole/reports.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <ctime>
#include <fstream>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "monopole/model.hpp"
#include "monopole/qalgebra.hpp"
#include "monopole/spectrum.hpp"
#include "monopole/sturm.hpp"
#include "monopole/version.hpp"
#include "monopole/wavefunctions.hpp"

namespace monopole::reports {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// parsing helpers

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_real(const std::string& s, const std::string& what) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0')
    throw UsageError("invalid number for " + what + ": '" + s + "'");
  return v;
}

long parse_int(const std::string& s, const std::string& what) {
  char* end = nullptr;
  const long v = std::strtol(s.c_str(), &end, 10);
  if (end == s.c_str() || *end != '\0')
    throw UsageError("invalid integer for " + what + ": '" + s + "'");
  return v;
}

std::vector<double> parse_list(const std::string& s, const std::string& what) {
  std::vector<double> out;
  for (const std::string& item : split(s, ','))
    if (!trim(item).empty()) out.push_back(parse_real(trim(item), what));
  if (out.empty()) throw UsageError("empty list for " + what);
  return out;
}

const char* const kCouplingKeys[8] = {"a", "b", "c0", "c1", "c2", "c3", "c4", "d"};

double* coupling_slot(ModelParams& p, const std::string& key) {
  if (key == "a") return &p.a;
  if (key == "b") return &p.b;
  if (key == "c0") return &p.c0;
  if (key == "c1") return &p.c1;
  if (key == "c2") return &p.c2;
  if (key == "c3") return &p.c3;
  if (key == "c4") return &p.c4;
  if (key == "d") return &p.d;
  return nullptr;
}

void apply_kv(ModelParams& p, const std::string& text, const std::string& what) {
  for (const std::string& item : split(text, ',')) {
    const std::string t = trim(item);
    if (t.empty()) continue;
    const std::size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw UsageError(what + " expects key=value pairs, got '" + t + "'");
    const std::string key = trim(t.substr(0, eq));
    double* slot = coupling_slot(p, key);
    if (!slot) throw UsageError("unknown coupling '" + key + "' in " + what);
    *slot = parse_real(trim(t.substr(eq + 1)), what);
  }
}

ModelParams resolve_params(const RunConfig& cfg) {
  if (cfg.preset && cfg.params_text)
    throw UsageError("--preset and --params are mutually exclusive");
  if (!cfg.preset && !cfg.params_text)
    throw UsageError("a parameter source is required (--preset or --params)");
  ModelParams p;
  if (cfg.preset) {
    try {
      p = preset(*cfg.preset);
    } catch (const std::invalid_argument&) {
      throw UsageError("unknown preset: " + *cfg.preset);
    }
  } else {
    apply_kv(p, *cfg.params_text, "--params");
  }
  for (const auto& [key, value] : cfg.overrides) {
    double* slot = coupling_slot(p, key);
    if (!slot) throw UsageError("unknown coupling '" + key + "' in --set");
    *slot = value;
  }
  return p;
}

// ---------------------------------------------------------------------------
// emission

void append_escaped_csv(std::string& out, const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) {
    out += field;
    return;
  }
  out += '"';
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
}

std::string cell_text(const Cell& c) {
  if (std::holds_alternative<std::string>(c)) return std::get<std::string>(c);
  if (std::holds_alternative<std::int64_t>(c))
    return std::to_string(std::get<std::int64_t>(c));
  return format_double(std::get<double>(c));
}

void append_json_string(std::string& out, const std::string& s) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

std::string timestamp_from_env() {
  const char* epoch = std::getenv("SOURCE_DATE_EPOCH");
  if (!epoch || !*epoch) return "unset";
  char* end = nullptr;
  const long long t = std::strtoll(epoch, &end, 10);
  if (end == epoch || *end != '\0') return "unset";
  std::time_t tt = static_cast<std::time_t>(t);
  std::tm tm{};
  gmtime_r(&tt, &tm);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02dZ",
                tm.tm_year + 1900, tm.tm_mon + 1, tm.tm_mday, tm.tm_hour,
                tm.tm_min, tm.tm_sec);
  return buf;
}

std::string config_echo(const RunConfig& cfg, const ModelParams* params) {
  std::string s;
  auto add = [&s](const std::string& k, const std::string& v) {
    if (!s.empty()) s += ';';
    s += k + "=" + v;
  };
  if (params) {
    std::string pv;
    const double vals[8] = {params->a,  params->b,  params->c0, params->c1,
                            params->c2, params->c3, params->c4, params->d};
    for (int i = 0; i < 8; ++i) {
      if (i) pv += ',';
      pv += std::string(kCouplingKeys[i]) + "=" + format_double(vals[i]);
    }
    add("params", pv);
  }
  auto list_text = [](const std::vector<double>& v) {
    std::string t;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) t += ',';
      t += format_double(v[i]);
    }
    return t;
  };
  add("nu1", list_text(cfg.nu1_list));
  add("nu2", list_text(cfg.nu2_list));
  add("mode", cfg.mode);
  add("nmax", std::to_string(cfg.n_max));
  add("p", std::to_string(cfg.p_level));
  add("grid", std::to_string(cfg.grid_n));
  add("rmax", cfg.r_max ? format_double(*cfg.r_max) : "auto");
  add("tol", cfg.tolerance ? format_double(*cfg.tolerance) : "default");
  add("seed", std::to_string(cfg.seed));
  add("format", cfg.format == Format::Csv ? "csv" : "json");
  add("suite", cfg.suite);
  add("trials", std::to_string(cfg.trials));
  add("perturb-u", format_double(cfg.perturb_u));
  return s;
}

void base_meta(Report& rep, const char* command, const RunConfig& cfg,
               const ModelParams* params) {
  rep.meta.emplace_back("version", kVersion);
  rep.meta.emplace_back("command", command);
  rep.meta.emplace_back("config", config_echo(cfg, params));
  rep.meta.emplace_back("seed", std::to_string(cfg.seed));
  rep.meta.emplace_back("timestamp", timestamp_from_env());
}

// deterministic fan-out: each index writes only its own slot; the first
// worker exception is rethrown on the calling thread after the join
void parallel_rows(int count, int jobs, const std::function<void(int)>& work) {
  if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> threads;
  const int n_threads = std::min(jobs, count);
  threads.reserve(n_threads);
  for (int t = 0; t < n_threads; ++t)
    threads.emplace_back([&]() {
      try {
        for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1))
          work(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
      }
    });
  for (auto& th : threads) th.join();
  if (error) std::rethrow_exception(error);
}

Cell absent() { return std::string(); }

double default_r_max(const RunConfig& cfg, std::optional<double> eps) {
  if (cfg.r_max) return *cfg.r_max;
  if (eps && *eps > 0.0) return std::max(25.0 / *eps, 10.0);
  return 50.0;
}

// ---------------------------------------------------------------------------
// shared fixtures for the verify suites

struct Fixture {
  std::string name;
  ModelParams params;
  double nu1, nu2;
};

std::vector<Fixture> verify_fixtures() {
  ModelParams micz = preset("micz");
  micz.c0 = -8.0;
  ModelParams kk = preset("kaluza-klein");
  kk.c0 = -8.0;
  return {{"micz-c0", micz, 0.0, 0.5}, {"kaluza-klein-c0", kk, 0.0, 0.5}};
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string to_csv(const Report& r) {
  std::string out;
  for (const auto& [k, v] : r.meta) {
    out += "# ";
    out += k;
    out += ": ";
    out += v;
    out += '\n';
  }
  for (std::size_t i = 0; i < r.columns.size(); ++i) {
    if (i) out += ',';
    append_escaped_csv(out, r.columns[i]);
  }
  out += '\n';
  for (const auto& row : r.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      append_escaped_csv(out, cell_text(row[i]));
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const Report& r) {
  std::string out = "{\n  \"meta\": {";
  for (std::size_t i = 0; i < r.meta.size(); ++i) {
    out += i ? ",\n    " : "\n    ";
    append_json_string(out, r.meta[i].first);
    out += ": ";
    append_json_string(out, r.meta[i].second);
  }
  out += "\n  },\n  \"rows\": [";
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    out += i ? ",\n    {" : "\n    {";
    const auto& row = r.rows[i];
    for (std::size_t j = 0; j < row.size(); ++j) {
      out += j ? ", " : "";
      append_json_string(out, r.columns[j]);
      out += ": ";
      if (std::holds_alternative<std::string>(row[j]))
        append_json_string(out, std::get<std::string>(row[j]));
      else if (std::holds_alternative<std::int64_t>(row[j]))
        out += std::to_string(std::get<std::int64_t>(row[j]));
      else
        out += format_double(std::get<double>(row[j]));
    }
    out += "}";
  }
  out += "\n  ]\n}\n";
  return out;
}

Report cmd_presets(const RunConfig& cfg) {
  Report rep;
  base_meta(rep, "presets", cfg, nullptr);
  rep.columns = {"name", "a", "b", "c0", "c1", "c2", "c3", "c4", "d"};
  for (const std::string& name : preset_names()) {
    const ModelParams p = preset(name);
    rep.rows.push_back({name, p.a, p.b, p.c0, p.c1, p.c2, p.c3, p.c4, p.d});
  }
  return rep;
}

Report cmd_spectrum(const RunConfig& cfg) {
  const ModelParams params = resolve_params(cfg);
  Report rep;
  base_meta(rep, "spectrum", cfg, &params);

  if (cfg.mode == "parabolic") {
    rep.columns = {"n1", "n2", "nu1", "nu2", "N", "E", "t", "epsilon", "status"};
    for (double nu2 : cfg.nu2_list) {
      const auto rows = spectrum::enumerate_levels(params, nu2, cfg.n_max);
      for (const auto& row : rows) {
        spectrum::LevelSpec spec;
        spec.mode = spectrum::Mode::Parabolic;
        spec.n1 = row.n1;
        spec.n2 = row.n2;
        const double n_value = spectrum::level_number(row.sector, spec);
        if (row.level) {
          rep.rows.push_back({std::int64_t(row.n1), std::int64_t(row.n2),
                              std::int64_t(row.nu1), row.nu2, n_value,
                              row.level->energy, row.level->t,
                              row.level->epsilon, std::string("bound")});
        } else {
          rep.rows.push_back({std::int64_t(row.n1), std::int64_t(row.n2),
                              std::int64_t(row.nu1), row.nu2, n_value, absent(),
                              absent(), absent(), std::string("absent")});
        }
      }
    }
  } else if (cfg.mode == "spherical") {
    rep.columns = {"n", "l", "nu1", "nu2", "N", "E", "t", "epsilon", "status"};
    for (double nu2 : cfg.nu2_list) {
      for (int n = 1; n <= cfg.n_max; ++n) {
        for (int nu1 = 0; nu1 < n; ++nu1) {
          const Sector sector = derived_sector(params, nu1, nu2);
          for (int l = nu1; l <= n - 1; ++l) {
            spectrum::LevelSpec spec;
            spec.mode = spectrum::Mode::Spherical;
            spec.n = n;
            spec.l = l;
            const double n_value = spectrum::level_number(sector, spec);
            const auto lvl = spectrum::solve_energy(params, sector, spec);
            if (lvl)
              rep.rows.push_back({std::int64_t(n), std::int64_t(l),
                                  std::int64_t(nu1), nu2, n_value, lvl->energy,
                                  lvl->t, lvl->epsilon, std::string("bound")});
            else
              rep.rows.push_back({std::int64_t(n), std::int64_t(l),
                                  std::int64_t(nu1), nu2, n_value, absent(),
                                  absent(), absent(), std::string("absent")});
          }
        }
      }
    }
  } else {
    throw UsageError("unknown mode: " + cfg.mode);
  }
  return rep;
}

Report cmd_algebraic(const RunConfig& cfg) {
  const ModelParams params = resolve_params(cfg);
  const double nu1 = cfg.nu1_list.front();
  const double nu2 = cfg.nu2_list.front();
  const Sector sector = derived_sector(params, nu1, nu2);
  Report rep;
  base_meta(rep, "algebraic", cfg, &params);
  rep.columns = {"p",  "set", "eps1", "eps2",       "u",
                 "E",  "t",   "eta1", "s1",         "positivity",
                 "status"};
  for (int p_level = 0; p_level <= cfg.p_level; ++p_level) {
    for (int set : {1, 2}) {
      for (const auto& [e1, e2] :
           {std::pair{1, 1}, std::pair{1, -1}, std::pair{-1, 1},
            std::pair{-1, -1}}) {
        std::vector<Cell> row{std::int64_t(p_level), std::int64_t(set),
                              std::int64_t(e1), std::int64_t(e2)};
        try {
          const auto sol =
              qalgebra::solve_quantization(params, sector, p_level, e1, e2, set);
          if (sol) {
            row.insert(row.end(),
                       {sol->u, sol->energy, sol->t, sol->eta1, sol->s1,
                        std::string(sol->positive ? "pass" : "fail"),
                        std::string("ok")});
          } else {
            row.insert(row.end(), {absent(), absent(), absent(), absent(),
                                   absent(), absent(), std::string("absent")});
          }
        } catch (const std::exception& e) {
          row.insert(row.end(), {absent(), absent(), absent(), absent(),
                                 absent(), absent(),
                                 std::string("error: ") + e.what()});
        }
        rep.rows.push_back(std::move(row));
      }
    }
  }
  return rep;
}

Report cmd_verify(const RunConfig& cfg) {
  Report rep;
  base_meta(rep, "verify", cfg, nullptr);
  rep.columns = {"suite", "case", "value", "threshold", "status"};
  bool all_pass = true;
  auto push = [&](const std::string& suite, const std::string& name,
                  double value, double threshold, bool pass) {
    rep.rows.push_back({suite, name, value, threshold,
                        std::string(pass ? "pass" : "fail")});
    all_pass = all_pass && pass;
  };

  const bool run_phi = cfg.suite == "all" || cfg.suite == "phi";
  const bool run_q3 = cfg.suite == "all" || cfg.suite == "q3";
  const bool run_ode = cfg.suite == "all" || cfg.suite == "ode";
  const bool run_oracle = cfg.suite == "all" || cfg.suite == "oracle";
  if (!run_phi && !run_q3 && !run_ode && !run_oracle)
    throw UsageError("unknown suite: " + cfg.suite);

  if (run_phi) {
    const auto report = qalgebra::verify_phi_equivalence(cfg.trials, cfg.seed);
    for (int trial = 0; trial < report.trials; ++trial) {
      const auto diff =
          std::find_if(report.diffs.begin(), report.diffs.end(),
                       [&](const auto& d) { return d.trial == trial; });
      const bool ok = diff == report.diffs.end();
      rep.rows.push_back(
          {std::string("phi"), "trial-" + std::to_string(trial),
           ok ? 0.0 : static_cast<double>(diff->coeff_index), 0.0,
           std::string(ok ? "pass" : "fail")});
      all_pass = all_pass && ok;
    }
  }

  if (run_q3) {
    for (const Fixture& fx : verify_fixtures()) {
      const Sector sector = derived_sector(fx.params, fx.nu1, fx.nu2);
      for (int p_level : {0, 1, 2, 3, 5, 10}) {
        const std::string name = fx.name + " p=" + std::to_string(p_level);
        try {
          const auto sol =
              qalgebra::solve_quantization(fx.params, sector, p_level, 1, 1, 1);
          if (!sol) {
            push("q3", name, 0.0, 0.0, false);
            continue;
          }
          const auto rep_u = qalgebra::build_unirrep_at(
              fx.params, *sol, sector.q1, sector.q2, sol->u + cfg.perturb_u,
              cfg.perturb_u == 0.0);
          const auto res = qalgebra::verify_q3_relations(
              rep_u, fx.params, sol->energy, sector.q1, sector.q2);
          push("q3", name + " [A,C]", res.rel_ac, 1e-9, res.rel_ac <= 1e-9);
          push("q3", name + " [B,C]", res.rel_bc, 1e-9, res.rel_bc <= 1e-9);
        } catch (const std::exception&) {
          push("q3", name, -1.0, 1e-9, false);
        }
      }
    }
  }

  if (run_ode) {
    for (const Fixture& fx : verify_fixtures()) {
      const Sector sector = derived_sector(fx.params, fx.nu1, fx.nu2);
      for (int n = 1; n <= 3; ++n) {
        const auto st = wavefn::make_spherical_state(fx.params, sector, n, 0);
        const double radial = wavefn::ode_residual_radial(st);
        const double angular = wavefn::ode_residual_angular(st);
        push("ode", fx.name + " radial n=" + std::to_string(n), radial, 1e-8,
             radial <= 1e-8);
        push("ode", fx.name + " angular n=" + std::to_string(n), angular, 1e-8,
             angular <= 1e-8);
      }
      const auto ps = wavefn::make_parabolic_state(fx.params, sector, 1, 1);
      const auto res = wavefn::ode_residual_parabolic(ps);
      push("ode", fx.name + " parabolic-xi", res.xi, 1e-8, res.xi <= 1e-8);
      push("ode", fx.name + " parabolic-eta", res.eta, 1e-8, res.eta <= 1e-8);
    }
  }

  if (run_oracle) {
    for (const Fixture& fx : verify_fixtures()) {
      const Sector sector = derived_sector(fx.params, fx.nu1, fx.nu2);
      spectrum::LevelSpec spec;
      spec.mode = spectrum::Mode::Parabolic;
      const auto lvl = spectrum::solve_energy(fx.params, sector, spec);
      if (!lvl) {
        push("oracle", fx.name + " ground", 0.0, 0.0, false);
        continue;
      }
      const double k1 = spectrum::separation_constant_k1(sector, 0);
      sturm::Grid grid{sturm::GridKind::UniformR, 4000,
                       default_r_max(cfg, 2.0 * lvl->t)};
      const auto fd = sturm::radial_eigen(fx.params, sector, k1, grid, 1);
      const double err = std::abs(fd.eigenvalues[0] - lvl->energy) /
                         std::max(1.0, std::abs(lvl->energy));
      push("oracle", fx.name + " radial-fd", err, 1e-4, err <= 1e-4);
    }
  }

  rep.all_pass = all_pass;
  return rep;
}

Report cmd_oracle(const RunConfig& cfg) {
  const ModelParams params = resolve_params(cfg);
  const double nu1 = cfg.nu1_list.front();
  const double nu2 = cfg.nu2_list.front();
  const Sector sector = derived_sector(params, nu1, nu2);
  Report rep;
  base_meta(rep, "oracle", cfg, &params);
  rep.columns = {"problem", "grid", "h", "value", "reference", "abs_err"};

  const int l = static_cast<int>(std::ceil(nu1 - 1e-9));
  const double k1 = spectrum::separation_constant_k1(sector, l);
  spectrum::LevelSpec spec;
  spec.mode = spectrum::Mode::Spherical;
  spec.n = l + 1;
  spec.l = l;
  const auto lvl = spectrum::solve_energy(params, sector, spec);
  const double r_max = default_r_max(cfg, lvl ? std::optional<double>(lvl->epsilon)
                                              : std::nullopt);

  std::vector<int> sizes;
  for (int n = std::max(cfg.grid_n / 8, 64); n <= cfg.grid_n; n *= 2)
    sizes.push_back(n);
  std::vector<double> values(sizes.size()), spacings(sizes.size());
  parallel_rows(static_cast<int>(sizes.size()), cfg.jobs, [&](int i) {
    sturm::Grid grid{sturm::GridKind::UniformR, sizes[i], r_max};
    values[i] = sturm::radial_eigen(params, sector, k1, grid, 1).eigenvalues[0];
    spacings[i] = r_max / sizes[i];
  });
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    rep.rows.push_back({std::string("radial"), std::int64_t(sizes[i]),
                        spacings[i], values[i],
                        lvl ? Cell(lvl->energy) : absent(),
                        lvl ? Cell(std::abs(values[i] - lvl->energy)) : absent()});
  }
  const auto order = sturm::convergence_order(
      values, spacings, lvl ? std::optional<double>(lvl->energy) : std::nullopt);
  rep.rows.push_back({std::string("radial-order"), std::int64_t(0), 0.0,
                      order ? Cell(*order) : absent(), absent(), absent()});

  // angular table at the largest grid
  sturm::Grid agrid{sturm::GridKind::UniformTheta, cfg.grid_n, 3.14159265358979323846};
  const auto ares = sturm::angular_eigen(params, sector, agrid, 3);
  for (int i = 0; i < 3; ++i) {
    const double want = spectrum::separation_constant_k1(sector, l + i);
    rep.rows.push_back({std::string("angular"), std::int64_t(cfg.grid_n),
                        3.14159265358979323846 / cfg.grid_n,
                        ares.eigenvalues[i], want,
                        std::abs(ares.eigenvalues[i] - want)});
  }
  return rep;
}

Report cmd_compare(const RunConfig& cfg) {
  const ModelParams params = resolve_params(cfg);
  const double nu1 = cfg.nu1_list.front();
  const double nu2 = cfg.nu2_list.front();
  const Sector sector = derived_sector(params, nu1, nu2);
  Report rep;
  base_meta(rep, "compare", cfg, &params);
  rep.columns = {"p",          "E_analytic", "E_algebraic", "E_fd",
                 "diff_alg",   "diff_fd",    "status"};

  const int l = static_cast<int>(std::ceil(nu1 - 1e-9));
  const double k1 = spectrum::separation_constant_k1(sector, l);
  const double fd_tol = cfg.tolerance.value_or(1e-3);

  // The box must hold the least-bound requested level, so the cutoff scales
  // with the smallest decay constant among the bound levels up to p_level.
  std::optional<double> t_min;
  for (int p_level = 0; p_level <= cfg.p_level; ++p_level) {
    spectrum::LevelSpec spec;
    spec.mode = spectrum::Mode::Parabolic;
    spec.n1 = p_level;
    if (const auto lvl = spectrum::solve_energy(params, sector, spec))
      t_min = t_min ? std::min(*t_min, lvl->t) : lvl->t;
  }
  std::vector<double> fd;
  if (t_min) {
    sturm::Grid grid{sturm::GridKind::UniformR, cfg.grid_n,
                     default_r_max(cfg, *t_min)};
    fd = sturm::radial_eigen(params, sector, k1, grid, cfg.p_level + 1, true)
             .eigenvalues;
  }

  bool all_pass = true;
  for (int p_level = 0; p_level <= cfg.p_level; ++p_level) {
    const auto cmp = qalgebra::compare_spectra(params, sector, p_level);
    std::vector<Cell> row{std::int64_t(p_level)};
    bool pass = cmp.pass;
    if (cmp.analytic)
      row.push_back(*cmp.analytic);
    else
      row.push_back(absent());
    if (cmp.algebraic)
      row.push_back(*cmp.algebraic);
    else
      row.push_back(absent());
    if (cmp.analytic && p_level < static_cast<int>(fd.size())) {
      const double efd = fd[p_level];
      const double dfd = efd - *cmp.analytic;
      row.push_back(efd);
      row.push_back(cmp.diff);
      row.push_back(dfd);
      pass = pass && std::abs(dfd) <= fd_tol * std::max(1.0, std::abs(*cmp.analytic));
    } else if (cmp.analytic) {
      row.push_back(absent());
      row.push_back(cmp.diff);
      row.push_back(absent());
    } else {
      row.push_back(absent());
      row.push_back(absent());
      row.push_back(absent());
    }
    row.push_back(std::string(!cmp.analytic && !cmp.algebraic
                                  ? "absent"
                                  : (pass ? "pass" : "fail")));
    if (cmp.analytic || cmp.algebraic) all_pass = all_pass && pass;
    rep.rows.push_back(std::move(row));
  }
  rep.all_pass = all_pass;
  return rep;
}

// ---------------------------------------------------------------------------
// dispatch

namespace {

RunConfig parse_config(const std::vector<std::string>& args, std::size_t start) {
  RunConfig cfg;
  std::vector<std::pair<std::string, std::string>> pending;  // flag, value

  // First pass: collect flag/value pairs (so --config can be applied first).
  std::optional<std::string> config_path;
  for (std::size_t i = start; i < args.size(); ++i) {
    const std::string& flag = args[i];
    if (flag.rfind("--", 0) != 0) throw UsageError("unexpected argument: " + flag);
    if (i + 1 >= args.size()) throw UsageError("missing value for " + flag);
    const std::string value = args[++i];
    if (flag == "--config")
      config_path = value;
    else
      pending.emplace_back(flag, value);
  }
  if (!config_path) {
    const char* env = std::getenv("MONOPOLE_SPECTRA_CONFIG");
    if (env && *env) config_path = env;
  }

  std::vector<std::pair<std::string, std::string>> items;
  if (config_path) {
    std::ifstream in(*config_path);
    if (!in) throw UsageError("cannot open config file: " + *config_path);
    std::string line;
    while (std::getline(in, line)) {
      const std::size_t hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      line = trim(line);
      if (line.empty()) continue;
      const std::size_t eq = line.find('=');
      if (eq == std::string::npos)
        throw UsageError("config line is not key = value: '" + line + "'");
      items.emplace_back("--" + trim(line.substr(0, eq)),
                         trim(line.substr(eq + 1)));
    }
  }
  items.insert(items.end(), pending.begin(), pending.end());  // CLI overrides

  for (const auto& [flag, value] : items) {
    if (flag == "--preset") {
      cfg.preset = value;
    } else if (flag == "--params") {
      cfg.params_text = value;
    } else if (flag == "--set") {
      ModelParams probe;  // validates keys/values
      apply_kv(probe, value, "--set");
      for (const std::string& item : split(value, ',')) {
        const std::string t = trim(item);
        if (t.empty()) continue;
        const std::size_t eq = t.find('=');
        cfg.overrides.emplace_back(trim(t.substr(0, eq)),
                                   parse_real(trim(t.substr(eq + 1)), "--set"));
      }
    } else if (flag == "--nu1") {
      cfg.nu1_list = parse_list(value, "--nu1");
    } else if (flag == "--nu2") {
      cfg.nu2_list = parse_list(value, "--nu2");
    } else if (flag == "--mode") {
      cfg.mode = value;
    } else if (flag == "--nmax") {
      cfg.n_max = static_cast<int>(parse_int(value, "--nmax"));
    } else if (flag == "--p") {
      cfg.p_level = static_cast<int>(parse_int(value, "--p"));
    } else if (flag == "--grid") {
      cfg.grid_n = static_cast<int>(parse_int(value, "--grid"));
    } else if (flag == "--rmax") {
      cfg.r_max = parse_real(value, "--rmax");
    } else if (flag == "--tol") {
      cfg.tolerance = parse_real(value, "--tol");
      if (!(cfg.tolerance > 0.0)) throw UsageError("--tol must be positive");
    } else if (flag == "--seed") {
      cfg.seed = static_cast<std::uint64_t>(parse_int(value, "--seed"));
    } else if (flag == "--jobs") {
      cfg.jobs = static_cast<int>(parse_int(value, "--jobs"));
    } else if (flag == "--format") {
      if (value == "csv")
        cfg.format = Format::Csv;
      else if (value == "json")
        cfg.format = Format::Json;
      else
        throw UsageError("unknown format: " + value);
    } else if (flag == "--out") {
      cfg.out_path = value;
    } else if (flag == "--suite") {
      cfg.suite = value;
    } else if (flag == "--trials") {
      cfg.trials = static_cast<int>(parse_int(value, "--trials"));
    } else if (flag == "--perturb-u") {
      cfg.perturb_u = parse_real(value, "--perturb-u");
    } else {
      throw UsageError("unknown flag: " + flag);
    }
  }
  if (cfg.nu1_list.empty()) cfg.nu1_list = {0.0};
  if (cfg.nu2_list.empty()) cfg.nu2_list = {0.5};
  if (cfg.n_max < 0) throw UsageError("--nmax must be >= 0");
  if (cfg.p_level < 0) throw UsageError("--p must be >= 0");
  if (cfg.grid_n < 16) throw UsageError("--grid must be >= 16");
  if (cfg.trials < 0) throw UsageError("--trials must be >= 0");
  return cfg;
}

const char* kUsage =
    "usage: monopole-spectra <command> [flags]\n"
    "\n"
    "commands:\n"
    "  spectrum    enumerate analytic bound levels\n"
    "  algebraic   deformed-oscillator (Set-1/Set-2) solutions per p\n"
    "  verify      run verification suites (phi|q3|ode|oracle|all)\n"
    "  oracle      finite-difference eigensolver convergence tables\n"
    "  compare     analytic vs algebraic vs numeric energies\n"
    "  presets     list named parameter sets\n"
    "\n"
    "common flags:\n"
    "  --preset NAME | --params a=..,b=..,c0=..,c1=..,c2=..,c3=..,c4=..,d=..\n"
    "  --set k=v[,k=v...]   override single couplings\n"
    "  --nu1 LIST --nu2 LIST --nmax INT --p INT\n"
    "  --grid INT --rmax REAL --tol REAL\n"
    "  --seed INT --jobs INT --format csv|json --out PATH --config PATH\n"
    "  --suite phi|q3|ode|oracle|all --trials INT --perturb-u REAL\n";

}  // namespace

RunResult run_command(const std::vector<std::string>& args) {
  RunResult result;
  if (args.empty()) {
    result.exit_code = 2;
    result.diagnostics = kUsage;
    return result;
  }
  const std::string& command = args[0];
  try {
    const RunConfig cfg = parse_config(args, 1);
    Report rep;
    if (command == "spectrum")
      rep = cmd_spectrum(cfg);
    else if (command == "algebraic")
      rep = cmd_algebraic(cfg);
    else if (command == "verify")
      rep = cmd_verify(cfg);
    else if (command == "oracle")
      rep = cmd_oracle(cfg);
    else if (command == "compare")
      rep = cmd_compare(cfg);
    else if (command == "presets")
      rep = cmd_presets(cfg);
    else
      throw UsageError("unknown command: " + command);

    const std::string text =
        cfg.format == Format::Csv ? to_csv(rep) : to_json(rep);
    if (cfg.out_path) {
      std::ofstream out(*cfg.out_path, std::ios::binary);
      if (!out) throw UsageError("cannot open output file: " + *cfg.out_path);
      out << text;
    } else {
      result.output = text;
    }
    const bool verdict_command = command == "verify" || command == "compare";
    result.exit_code = verdict_command && !rep.all_pass ? 1 : 0;
  } catch (const UsageError& e) {
    result.exit_code = 2;
    result.diagnostics = std::string("error: ") + e.what() + "\n";
  } catch (const std::exception& e) {
    result.exit_code = 2;
    result.diagnostics = std::string("error: ") + e.what() + "\n";
  }
  return result;
}

}  // namespace monopole::reports
