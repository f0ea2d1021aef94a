#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <variant>

#include "dsdirac/errors.hpp"
#include "dsdirac/flat_limit.hpp"
#include "dsdirac/horizon.hpp"
#include "dsdirac/jmin.hpp"
#include "dsdirac/ode_oracle.hpp"
#include "dsdirac/radial.hpp"
#include "dsdirac/spinor.hpp"
#include "dsdirac/version.hpp"

namespace dsdirac::cli {

namespace {

using Cell = std::variant<double, std::string>;

struct Table {
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::string failure;  // set when a residual exceeds its tolerance; the table is still written
};

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// Thrown for inputs that parse but make no sense (mapped to the usage exit code).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_csv(const Table& t, std::ostream& os) {
  for (const auto& [k, v] : t.meta) os << "# " << k << ": " << v << '\n';
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      if (const double* d = std::get_if<double>(&row[i])) {
        os << num(*d);
      } else {
        os << std::get<std::string>(row[i]);
      }
    }
    os << '\n';
  }
}

void write_json(const Table& t, std::ostream& os) {
  nlohmann::ordered_json doc;
  doc["metadata"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : t.meta) doc["metadata"][k] = v;
  doc["columns"] = t.columns;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (const Cell& c : row) {
      if (const double* d = std::get_if<double>(&c)) {
        if (std::isfinite(*d)) {
          r.push_back(*d);
        } else {
          r.push_back(nullptr);
        }
      } else {
        r.push_back(std::get<std::string>(c));
      }
    }
    doc["rows"].push_back(std::move(r));
  }
  os << doc.dump(2) << '\n';
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw UsageError("not a number: '" + item + "'");
    }
    if (used != item.size()) throw UsageError("not a number: '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("empty list");
  return out;
}

// Everything any subcommand may read; each subcommand registers only its own flags.
struct Params {
  std::string format = "csv";
  std::string output;

  std::optional<double> eps;
  std::optional<double> mass;
  std::optional<double> nu;
  std::string k, j, m;
  int delta = 1;
  int k_sign = 0;
  std::string kind;
  std::string grid;
  std::optional<double> tol;
  bool full_prefactor = false;
  double t = 0.0;
  double theta = 1.0;
  double phi = 0.0;
  std::string system = "z";
  double max_dev = 1e-6;

  std::optional<double> E, m_phys, R;
  std::string rho;
};

Delta to_delta(int d) {
  if (d == 1) return Delta::Plus;
  if (d == -1) return Delta::Minus;
  throw UsageError("--delta must be +1 or -1");
}

// A number that is not a multiple of 1/2 is off the lattice; anything else is a usage error.
bool is_number(const std::string& text) {
  const auto slash = text.find('/');
  const auto numeric = [](const std::string& s) {
    if (s.empty()) return false;
    char* end = nullptr;
    std::strtod(s.c_str(), &end);
    return end == s.c_str() + s.size();
  };
  if (slash == std::string::npos) return numeric(text);
  return numeric(text.substr(0, slash)) && numeric(text.substr(slash + 1));
}

HalfInt parse_half(const std::string& text, const char* name) {
  try {
    return HalfInt::parse(text);
  } catch (const DomainError& e) {
    if (is_number(text)) throw LatticeError(std::string(name) + " = " + text + " is not a multiple of 1/2");
    throw UsageError(std::string("--") + name + ": " + e.what());
  }
}

double need(const std::optional<double>& v, const char* name) {
  if (!v) throw UsageError(std::string("missing required option --") + name);
  return *v;
}

// Radial parameters shared by radial, horizon and oracle.
struct Sector {
  double eps = 0.0;
  double mass = 0.0;
  double nu = 0.0;
  Delta delta = Delta::Plus;
  bool jmin = false;
  KSign ksign = KSign::Positive;
  std::string labels;  // "k=..., j=..." when derived from labels
};

Sector resolve_sector(const Params& p, bool jmin_flag) {
  Sector s;
  s.eps = need(p.eps, "eps");
  s.mass = need(p.mass, "mass");
  s.delta = to_delta(p.delta);
  if (!p.k.empty() || !p.j.empty()) {
    if (p.k.empty() || p.j.empty()) throw UsageError("--k and --j must be given together");
    if (p.nu) throw UsageError("give either --nu or --k/--j, not both");
    const HalfInt k = parse_half(p.k, "k");
    const HalfInt j = parse_half(p.j, "j");
    validate(k, j, j);
    s.nu = nu(j, k);
    s.jmin = j == k.abs() - kHalf;
    s.ksign = ksign_of(k);
    s.labels = "k=" + k.str() + " j=" + j.str();
  } else {
    s.nu = p.nu.value_or(0.0);
    s.jmin = jmin_flag;
    if (s.jmin && p.nu && *p.nu != 0.0) throw UsageError("--jmin requires nu = 0");
    if (!p.nu && !s.jmin) throw UsageError("missing --nu (or --k/--j, or --jmin)");
    if (p.k_sign == -1) s.ksign = KSign::Negative;
  }
  if (p.k_sign != 0 && p.k_sign != 1 && p.k_sign != -1) throw UsageError("--k-sign must be +1 or -1");
  if (!s.jmin && s.nu == 0.0) s.jmin = true;
  return s;
}

void sector_meta(Table& t, const Sector& s) {
  t.meta.push_back({"eps", num(s.eps)});
  t.meta.push_back({"mass", num(s.mass)});
  if (!s.labels.empty()) t.meta.push_back({"labels", s.labels});
  t.meta.push_back({"sector", s.jmin ? "j_min" : "generic"});
  if (s.jmin) {
    t.meta.push_back({"k_sign", s.ksign == KSign::Positive ? "+1" : "-1"});
  } else {
    t.meta.push_back({"nu", num(s.nu)});
    t.meta.push_back({"delta", sign(s.delta) > 0 ? "+1" : "-1"});
  }
}

Kind parse_kind(const std::string& s) {
  if (s == "reg" || s.empty()) return Kind::Regular;
  if (s == "sing") return Kind::Singular;
  if (s == "in") return Kind::In;
  if (s == "out") return Kind::Out;
  throw UsageError("unknown --kind '" + s + "' (reg, sing, in, out)");
}

JminPairing parse_pairing(const std::string& s) {
  if (s == "f-nonzero" || s.empty()) return JminPairing::FNonZeroGZero;
  if (s == "g-nonzero") return JminPairing::GNonZeroFZero;
  throw UsageError("unknown j_min --kind '" + s + "' (f-nonzero, g-nonzero)");
}

double to_z(const std::string& var, double x) {
  if (var == "z") return x;
  if (var == "r") return x * x;
  const double s = std::sin(x);
  return s * s;
}

double to_r(const std::string& var, double x) {
  if (var == "r") return x;
  if (var == "z") return std::sqrt(x);
  return std::sin(x);
}

double to_rho(const std::string& var, double x) {
  if (var == "rho") return x;
  return std::asin(var == "r" ? x : std::sqrt(x));
}

// closed: endpoints allowed, for samplers that clamp instead of rejecting
void require_inside(const GridSpec& g, bool closed = false) {
  const double hi = g.variable == "rho" ? std::numbers::pi / 2 : 1.0;
  for (double x : {g.start, g.end}) {
    const bool ok = closed ? (x >= 0.0 && x <= hi) : (x > 0.0 && x < hi);
    if (!ok) {
      throw UsageError("grid point " + num(x) + " is outside the domain of " + g.variable);
    }
  }
}

void add_grid_columns(Table& t, const GridSpec& g, const std::string& native) {
  t.columns.push_back(g.variable);
  if (native != g.variable) t.columns.push_back(native);
}

void push_complex(std::vector<Cell>& row, cplx v) {
  row.emplace_back(v.real());
  row.emplace_back(v.imag());
}

Table run_validate(const Params& p) {
  if (p.k.empty() || p.j.empty() || p.m.empty()) throw UsageError("validate needs --k, --j and --m");
  const HalfInt k = parse_half(p.k, "k"), j = parse_half(p.j, "j"), m = parse_half(p.m, "m");
  const AngularLabels l = validate(k, j, m);
  const Delta d = to_delta(p.delta);
  const QuantumNumbers qn{0.0, 0.0, l, d};
  Table t;
  t.meta.push_back({"delta", p.delta > 0 ? "+1" : "-1"});
  t.columns = {"k", "j", "m", "sector", "j_min", "nu", "lambda"};
  t.rows.push_back({k.str(), j.str(), m.str(), std::string(l.is_jmin() ? "j_min" : "generic"), l.j_min().str(),
                    nu(j, k), lambda(qn)});
  return t;
}

Table run_radial(const Params& p, bool jmin_flag, std::ostream& err) {
  const Sector s = resolve_sector(p, jmin_flag);
  const GridSpec g = GridSpec::parse(p.grid.empty() ? "z:0.05:0.9:50" : p.grid);
  require_inside(g);
  const double tol = p.tol.value_or(1e-8);

  Table t;
  t.meta.push_back({"mode", "radial"});
  sector_meta(t, s);
  add_grid_columns(t, g, "z");
  for (const char* c : {"Re F", "Im F", "Re G", "Im G", "res1", "res2"}) t.columns.push_back(c);

  double worst = 0.0;
  if (s.jmin) {
    const JminPairing pairing = parse_pairing(p.kind);
    const JminPair pair = make_jmin_pair(pairing, s.eps, s.mass, s.ksign);
    t.meta.push_back({"kind", to_string(pairing)});
    t.meta.push_back({"amplitude_F", num(pair.f_amp.real()) + "," + num(pair.f_amp.imag())});
    t.meta.push_back({"amplitude_G", num(pair.g_amp.real()) + "," + num(pair.g_amp.imag())});
    for (double x : g.points()) {
      const double z = to_z(g.variable, x);
      const auto v = pair.values(z);
      const FirstOrderResidual r = jmin_first_order_residual(pair, z);
      std::vector<Cell> row{x};
      if (g.variable != "z") row.emplace_back(z);
      push_complex(row, v[0]);
      push_complex(row, v[1]);
      row.emplace_back(r.rel1);
      row.emplace_back(r.rel2);
      worst = std::max(worst, r.max_relative());
      t.rows.push_back(std::move(row));
    }
  } else {
    const Kind kind = parse_kind(p.kind);
    const RadialPair pair = make_radial_pair(kind, s.eps, s.mass, s.nu, s.delta);
    t.meta.push_back({"kind", to_string(kind)});
    t.meta.push_back({"amplitude_F", num(pair.f0.real()) + "," + num(pair.f0.imag())});
    t.meta.push_back({"amplitude_G", num(pair.g0.real()) + "," + num(pair.g0.imag())});
    for (double x : g.points()) {
      const double z = to_z(g.variable, x);
      const auto v = pair.values(z);
      const FirstOrderResidual r = first_order_residual(pair, z);
      std::vector<Cell> row{x};
      if (g.variable != "z") row.emplace_back(z);
      push_complex(row, v[0]);
      push_complex(row, v[1]);
      row.emplace_back(r.rel1);
      row.emplace_back(r.rel2);
      worst = std::max(worst, r.max_relative());
      t.rows.push_back(std::move(row));
    }
  }
  t.meta.push_back({"grid", p.grid.empty() ? "z:0.05:0.9:50" : p.grid});
  t.meta.push_back({"residual_tolerance", num(tol)});
  t.meta.push_back({"max_residual", num(worst)});
  err << "max residual: " << num(worst) << " (tolerance " << num(tol) << ")\n";
  if (!(worst <= tol)) t.failure = "residual " + num(worst) + " exceeds tolerance " + num(tol);
  return t;
}

Table run_horizon(const Params& p, bool jmin_flag, std::ostream& err) {
  const Sector s = resolve_sector(p, jmin_flag);
  const double tol = p.tol.value_or(1e-9);
  const std::vector<double> checks = {0.2, 0.5, 0.8};

  Table t;
  t.meta.push_back({"mode", "horizon"});
  sector_meta(t, s);
  t.meta.push_back({"check_points_z", "0.2,0.5,0.8"});
  t.meta.push_back({"tolerance", num(tol)});
  t.columns = {"channel", "source", "Re c_out", "Im c_out", "Re c_in", "Im c_in", "recon_err", "roundtrip_err"};

  double worst = 0.0;
  for (Channel ch : {Channel::F, Channel::G}) {
    if (s.jmin) {
      const SolutionFamily out = jmin_wave_family(ch, Kind::Out, s.eps, s.mass, s.ksign);
      const SolutionFamily in = jmin_wave_family(ch, Kind::In, s.eps, s.mass, s.ksign);
      const OriginCoefficients co = compose_jmin(ch, Kind::Out, s.eps, s.mass, s.ksign);
      const OriginCoefficients ci = compose_jmin(ch, Kind::In, s.eps, s.mass, s.ksign);
      for (JminKind src : {JminKind::NonZero, JminKind::Zero}) {
        const JminHorizonDecomposition d = decompose_jmin(ch, src, s.eps, s.mass, s.ksign);
        const JminFamily fam = jmin_params(s.eps, s.mass, s.ksign, ch, src);
        double recon = 0.0;
        for (double z : checks) {
          const cplx v = jmin_eval(fam, z);
          const cplx w = d.coeff_out * eval_solution(out, z) + d.coeff_in * eval_solution(in, z);
          recon = std::max(recon, std::abs(w - v) / std::abs(v));
        }
        const cplx reg = d.coeff_out * co.regular + d.coeff_in * ci.regular;
        const cplx sing = d.coeff_out * co.singular + d.coeff_in * ci.singular;
        const bool nz = src == JminKind::NonZero;
        const double rt = std::max(std::abs(reg - (nz ? 1.0 : 0.0)), std::abs(sing - (nz ? 0.0 : 1.0)));
        std::vector<Cell> row{std::string(to_string(ch)), std::string(to_string(src))};
        push_complex(row, d.coeff_out);
        push_complex(row, d.coeff_in);
        row.emplace_back(recon);
        row.emplace_back(rt);
        worst = std::max({worst, recon, rt});
        t.rows.push_back(std::move(row));
      }
    } else {
      const SolutionFamily out = wave_family(ch, Kind::Out, s.eps, s.mass, s.nu, s.delta);
      const SolutionFamily in = wave_family(ch, Kind::In, s.eps, s.mass, s.nu, s.delta);
      const OriginCoefficients co = compose(ch, Kind::Out, s.eps, s.mass, s.nu, s.delta);
      const OriginCoefficients ci = compose(ch, Kind::In, s.eps, s.mass, s.nu, s.delta);
      for (Kind src : {Kind::Regular, Kind::Singular}) {
        const HorizonDecomposition d = decompose(ch, src, s.eps, s.mass, s.nu, s.delta);
        const SolutionFamily fam = family_params(s.eps, s.mass, s.nu, ch, src, s.delta);
        double recon = 0.0;
        for (double z : checks) {
          const cplx v = eval_solution(fam, z);
          const cplx w = d.coeff_out * eval_solution(out, z) + d.coeff_in * eval_solution(in, z);
          recon = std::max(recon, std::abs(w - v) / std::abs(v));
        }
        const cplx reg = d.coeff_out * co.regular + d.coeff_in * ci.regular;
        const cplx sing = d.coeff_out * co.singular + d.coeff_in * ci.singular;
        const bool r = src == Kind::Regular;
        const double rt = std::max(std::abs(reg - (r ? 1.0 : 0.0)), std::abs(sing - (r ? 0.0 : 1.0)));
        std::vector<Cell> row{std::string(to_string(ch)), std::string(to_string(src))};
        push_complex(row, d.coeff_out);
        push_complex(row, d.coeff_in);
        row.emplace_back(recon);
        row.emplace_back(rt);
        worst = std::max({worst, recon, rt});
        t.rows.push_back(std::move(row));
      }
    }
  }
  t.meta.push_back({"max_error", num(worst)});
  err << "max reconstruction error: " << num(worst) << " (tolerance " << num(tol) << ")\n";
  if (!(worst <= tol)) t.failure = "reconstruction error " + num(worst) + " exceeds " + num(tol);
  return t;
}

Table run_spinor(const Params& p, std::ostream& err) {
  if (p.k.empty() || p.j.empty() || p.m.empty()) throw UsageError("spinor needs --k, --j and --m");
  const HalfInt k = parse_half(p.k, "k"), j = parse_half(p.j, "j"), m = parse_half(p.m, "m");
  const QuantumNumbers qn = make_quantum_numbers(need(p.eps, "eps"), need(p.mass, "mass"), k, j, m, to_delta(p.delta));
  const GridSpec g = GridSpec::parse(p.grid.empty() ? "r:0.1:0.9:17" : p.grid);
  require_inside(g, true);
  const double tol = p.tol.value_or(1e-5);

  Table t;
  t.meta.push_back({"mode", "spinor"});
  t.meta.push_back({"eps", num(qn.epsilon)});
  t.meta.push_back({"mass", num(qn.mass)});
  t.meta.push_back({"k", k.str()});
  t.meta.push_back({"j", j.str()});
  t.meta.push_back({"m", m.str()});
  t.meta.push_back({"delta", p.delta > 0 ? "+1" : "-1"});
  t.meta.push_back({"sector", qn.labels.is_jmin() ? "j_min" : "generic"});

  RadialProfile profile;
  if (qn.labels.is_jmin()) {
    const JminPairing pairing = parse_pairing(p.kind);
    t.meta.push_back({"kind", to_string(pairing)});
    profile = radial_profile_jmin(qn, jmin_pair_for(qn, pairing));
  } else {
    const Kind kind = parse_kind(p.kind);
    t.meta.push_back({"kind", to_string(kind)});
    profile = radial_profile(qn, pair_for(qn, kind));
  }
  t.meta.push_back({"t", num(p.t)});
  t.meta.push_back({"theta", num(p.theta)});
  t.meta.push_back({"phi", num(p.phi)});
  t.meta.push_back({"full_prefactor", p.full_prefactor ? "true" : "false"});
  t.meta.push_back({"grid", p.grid.empty() ? "r:0.1:0.9:17" : p.grid});
  t.meta.push_back({"residual_tolerance", num(tol)});

  add_grid_columns(t, g, "r");
  for (int c = 1; c <= 4; ++c) {
    t.columns.push_back("Re psi" + std::to_string(c));
    t.columns.push_back("Im psi" + std::to_string(c));
  }
  t.columns.push_back("dirac_res");

  double worst = 0.0;
  for (double x : g.points()) {
    const SpacetimePoint pt{p.t, to_r(g.variable, x), p.theta, p.phi};
    const SpinorSample sample = assemble_profile(qn, profile, pt, p.full_prefactor);
    if (sample.clamped) err << "warning: r = " << num(pt.r) << " clamped to " << num(sample.r) << '\n';
    const double res = dirac_residual(qn, profile, pt);
    std::vector<Cell> row{x};
    if (g.variable != "r") row.emplace_back(sample.r);
    for (const cplx& c : sample.components) push_complex(row, c);
    row.emplace_back(res);
    worst = std::max(worst, res);
    t.rows.push_back(std::move(row));
  }
  t.meta.push_back({"max_residual", num(worst)});
  err << "max Dirac residual: " << num(worst) << " (tolerance " << num(tol) << ")\n";
  if (!(worst <= tol)) t.failure = "Dirac residual " + num(worst) + " exceeds " + num(tol);
  return t;
}

Table run_limit(const Params& p, std::ostream& err) {
  const double E = need(p.E, "E"), m = need(p.m_phys, "m"), R = need(p.R, "R");
  if (p.rho.empty()) throw UsageError("missing required option --rho");
  const std::vector<double> rhos = parse_list(p.rho);
  const LimitStudy st = limit_check(E, m, R, rhos);

  Table t;
  t.meta.push_back({"mode", "limit"});
  t.meta.push_back({"E", num(E)});
  t.meta.push_back({"m", num(m)});
  t.meta.push_back({"R", num(R)});
  t.meta.push_back({"units", "c = hbar = 1"});
  t.meta.push_back({"p", num(st.p)});
  t.meta.push_back({"pR", num(st.p * R)});
  t.meta.push_back({"order_cos", num(st.order_cos)});
  t.meta.push_back({"order_sin", num(st.order_sin)});
  t.meta.push_back({"order_cos_real", num(st.order_cos_real)});
  t.meta.push_back({"order_sin_real", num(st.order_sin_real)});
  t.columns = {"rho", "cos_error", "sin_error", "cos_error_real", "sin_error_real"};
  for (const LimitPoint& lp : st.points) {
    t.rows.push_back({lp.rho, lp.cos_error, lp.sin_error, lp.cos_error_real, lp.sin_error_real});
  }
  char buf[200];
  std::snprintf(buf, sizeof buf, "fitted order: cos %.3f, sin %.3f (real parts: %.3f, %.3f)\n", st.order_cos,
                st.order_sin, st.order_cos_real, st.order_sin_real);
  err << buf;
  return t;
}

SystemId parse_system(const std::string& s) {
  if (s == "z") return SystemId::ZForm;
  if (s == "rho") return SystemId::RhoForm;
  if (s == "jmin-z") return SystemId::JminZForm;
  if (s == "minkowski") return SystemId::MinkowskiForm;
  throw UsageError("unknown --system '" + s + "' (z, rho, jmin-z, minkowski)");
}

Table run_oracle(const Params& p, std::ostream& err) {
  const SystemId id = parse_system(p.system);
  const double eps = need(p.eps, "eps"), mass = need(p.mass, "mass");
  const double tol = p.tol.value_or(1e-10);
  if (!(tol >= kMinTolerance && tol <= kMaxTolerance)) throw UsageError("--tol must lie in [1e-12, 1e-6]");
  const Delta delta = to_delta(p.delta);
  const std::string native = id == SystemId::RhoForm ? "rho" : (id == SystemId::MinkowskiForm ? "r" : "z");
  const std::string grid_text = p.grid.empty() ? native + (native == "rho" ? ":0.23:1.25:30" : ":0.05:0.9:30") : p.grid;
  const GridSpec g = GridSpec::parse(grid_text);

  Table t;
  t.meta.push_back({"mode", "oracle"});
  t.meta.push_back({"system", to_string(id)});
  t.meta.push_back({"eps", num(eps)});
  t.meta.push_back({"mass", num(mass)});

  std::function<State(double)> exact;
  SystemSpec sys{};
  if (id == SystemId::MinkowskiForm) {
    if (g.variable != "r") throw UsageError("the minkowski system is integrated in r");
    if (!(g.start >= 0.0 && g.end >= 0.0)) throw UsageError("minkowski grid must have r >= 0");
    const Combo combo = p.kind == "second" ? Combo::Second : Combo::First;
    if (!p.kind.empty() && p.kind != "first" && p.kind != "second") {
      throw UsageError("unknown minkowski --kind '" + p.kind + "' (first, second)");
    }
    const bool threshold = classify(eps, mass).regime == Regime::Threshold;
    sys = make_system(id, eps, mass);
    exact = [=](double r) {
      const FlatHG hg = threshold ? minkowski_threshold(eps, mass, r, combo) : minkowski_jmin(eps, mass, r, combo);
      return State{hg.h, hg.g};
    };
    t.meta.push_back({"kind", combo == Combo::First ? "first" : "second"});
  } else {
    require_inside(g);
    if (id == SystemId::JminZForm) {
      const KSign ks = p.k_sign == -1 ? KSign::Negative : KSign::Positive;
      const JminPairing pairing = parse_pairing(p.kind);
      const JminPair pair = make_jmin_pair(pairing, eps, mass, ks);
      sys = make_system(id, eps, mass_sign(ks) * mass);
      exact = [pair](double z) { return pair.values(z); };
      t.meta.push_back({"kind", to_string(pairing)});
      t.meta.push_back({"k_sign", ks == KSign::Positive ? "+1" : "-1"});
    } else {
      if (!p.nu) throw UsageError("missing --nu");
      const Kind kind = parse_kind(p.kind);
      const RadialPair pair = make_radial_pair(kind, eps, mass, *p.nu, delta);
      sys = make_system(id, eps, mass, *p.nu, delta);
      if (id == SystemId::ZForm) {
        exact = [pair](double z) { return pair.values(z); };
      } else {
        exact = [pair](double rho) {
          const double z = std::sin(rho) * std::sin(rho);
          const auto v = pair.values(z);
          const auto [f, gg] = fg_from_FG(v[0], v[1], z);
          return State{f, gg};
        };
      }
      t.meta.push_back({"kind", to_string(kind)});
      t.meta.push_back({"nu", num(*p.nu)});
      t.meta.push_back({"delta", p.delta > 0 ? "+1" : "-1"});
    }
  }
  t.meta.push_back({"grid", grid_text});
  t.meta.push_back({"integrator", "Dormand-Prince 5(4), PI step control"});
  t.meta.push_back({"tol", num(tol)});
  t.meta.push_back({"max_deviation_allowed", num(p.max_dev)});

  std::vector<double> xs;
  for (double x : g.points()) {
    if (id == SystemId::MinkowskiForm) {
      xs.push_back(x);
    } else if (id == SystemId::RhoForm) {
      xs.push_back(to_rho(g.variable, x));
    } else {
      xs.push_back(to_z(g.variable, x));
    }
  }
  const Trajectory tr = integrate(sys, xs.front(), xs.back(), exact(xs.front()), tol, xs);

  add_grid_columns(t, g, native);
  for (const char* c : {"Re y1", "Im y1", "Re y2", "Im y2", "Re exact1", "Im exact1", "Re exact2", "Im exact2",
                        "rel_dev"}) {
    t.columns.push_back(c);
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < tr.grid.size(); ++i) {
    const State ex = exact(tr.grid[i]);
    const State& y = tr.values[i];
    const double dev = (std::abs(y[0] - ex[0]) + std::abs(y[1] - ex[1])) / (std::abs(ex[0]) + std::abs(ex[1]));
    std::vector<Cell> row{g.points()[i]};
    if (g.variable != native) row.emplace_back(tr.grid[i]);
    push_complex(row, y[0]);
    push_complex(row, y[1]);
    push_complex(row, ex[0]);
    push_complex(row, ex[1]);
    row.emplace_back(dev);
    worst = std::max(worst, dev);
    t.rows.push_back(std::move(row));
  }
  t.meta.push_back({"steps_accepted", std::to_string(tr.accepted)});
  t.meta.push_back({"steps_rejected", std::to_string(tr.rejected)});
  t.meta.push_back({"max_deviation", num(worst)});
  if (!tr.complete) {
    t.meta.push_back({"diagnostic", tr.diagnostic});
    err << "integration stopped early: " << tr.diagnostic << '\n';
    t.failure = "trajectory incomplete";
    return t;
  }
  err << "max relative deviation: " << num(worst) << " (allowed " << num(p.max_dev) << ")\n";
  if (!(worst <= p.max_dev)) t.failure = "deviation " + num(worst) + " exceeds " + num(p.max_dev);
  return t;
}

// Merges "--opt -3/2" into "--opt=-3/2" so negative half-integers are not taken for flags.
std::vector<std::string> join_negative_values(const std::vector<std::string>& in) {
  std::vector<std::string> out;
  for (const std::string& a : in) {
    const bool negative_value = a.size() > 1 && a[0] == '-' && (std::isdigit(static_cast<unsigned char>(a[1])) || a[1] == '.');
    if (negative_value && !out.empty() && out.back().rfind("--", 0) == 0 && out.back().find('=') == std::string::npos) {
      out.back() += "=" + a;
    } else {
      out.push_back(a);
    }
  }
  return out;
}

std::string json_scalar(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) return num(v.get<double>());
  throw UsageError("config values must be strings, numbers, booleans or lists");
}

std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::vector<std::string> rest;
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw UsageError("--config needs a path");
      path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else {
      rest.push_back(args[i]);
    }
  }
  if (path.empty()) return rest;

  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot read config file '" + path + "'");
  nlohmann::json cfg;
  try {
    in >> cfg;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("config file '" + path + "' is not valid JSON: " + e.what());
  }
  if (!cfg.is_object()) throw UsageError("config file must hold a JSON object");

  std::string mode;
  if (!rest.empty() && rest[0].rfind("-", 0) != 0) {
    mode = rest[0];
    rest.erase(rest.begin());
  } else if (cfg.contains("mode")) {
    mode = json_scalar(cfg["mode"]);
  }
  std::vector<std::string> out;
  if (!mode.empty()) out.push_back(mode);
  for (const auto& [key, v] : cfg.items()) {
    if (key == "mode") continue;
    if (v.is_boolean()) {
      if (v.get<bool>()) out.push_back("--" + key);
    } else if (v.is_array()) {
      std::string joined;
      for (const auto& e : v) joined += (joined.empty() ? "" : ",") + json_scalar(e);
      out.push_back("--" + key + "=" + joined);
    } else {
      out.push_back("--" + key + "=" + json_scalar(v));
    }
  }
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

std::filesystem::path resolve_output(const std::string& output) {
  std::filesystem::path p(output);
  if (const char* dir = std::getenv("DSDIRAC_OUTPUT_DIR"); dir && *dir) return std::filesystem::path(dir) / p.filename();
  return p;
}

void emit(const Table& t, const Params& p, std::ostream& out) {
  Table full;
  full.meta.push_back({"tool", std::string("dsdirac ") + kVersion});
  full.meta.insert(full.meta.end(), t.meta.begin(), t.meta.end());
  full.columns = t.columns;
  full.rows = t.rows;
  const auto write = [&](std::ostream& os) {
    if (p.format == "json") {
      write_json(full, os);
    } else {
      write_csv(full, os);
    }
  };
  if (p.output.empty()) {
    write(out);
    return;
  }
  const std::filesystem::path path = resolve_output(p.output);
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::ios_base::failure("cannot open output file '" + path.string() + "'");
  write(f);
  f.flush();
  if (!f) throw std::ios_base::failure("failed writing '" + path.string() + "'");
}

}  // namespace

GridSpec GridSpec::parse(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() != 4) throw UsageError("grid must look like var:start:end:count, got '" + text + "'");
  GridSpec g;
  g.variable = parts[0];
  if (g.variable != "r" && g.variable != "z" && g.variable != "rho") {
    throw UsageError("grid variable must be r, z or rho");
  }
  const std::vector<double> lo = parse_list(parts[1]), hi = parse_list(parts[2]);
  g.start = lo.at(0);
  g.end = hi.at(0);
  try {
    std::size_t used = 0;
    g.count = std::stoi(parts[3], &used);
    if (used != parts[3].size()) throw UsageError("");
  } catch (const std::exception&) {
    throw UsageError("grid count must be an integer, got '" + parts[3] + "'");
  }
  if (g.count < 2) throw UsageError("grid count must be at least 2");
  if (!(g.start < g.end)) throw UsageError("grid start must be below grid end");
  return g;
}

std::vector<double> GridSpec::points() const {
  std::vector<double> xs(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) xs[static_cast<std::size_t>(i)] = start + (end - start) * i / (count - 1);
  xs.back() = end;
  return xs;
}

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  Params p;
  CLI::App app{"Closed-form Dirac solutions in the static de Sitter patch with a monopole", "dsdirac"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  const auto io = [&](CLI::App* s) {
    s->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    s->add_option("--format", p.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    s->add_option("--output", p.output, "Output file (stdout when omitted); DSDIRAC_OUTPUT_DIR overrides its directory");
  };
  const auto radial_opts = [&](CLI::App* s) {
    s->add_option("--eps", p.eps, "Dimensionless energy epsilon");
    s->add_option("--mass", p.mass, "Dimensionless mass M");
    s->add_option("--nu", p.nu, "Angular coupling nu (or give --k and --j)");
    s->add_option("--k", p.k, "Monopole charge k (1/2, -3/2, .5, ...)");
    s->add_option("--j", p.j, "Total angular momentum j");
    s->add_option("--delta", p.delta, "Sign delta of the K eigenvalue (+1 or -1)");
    s->add_option("--k-sign", p.k_sign, "Sign of k in the j_min sector (+1 or -1)");
  };

  bool jmin_flag = false;
  CLI::App* validate_cmd = app.add_subcommand("validate", "Check (k, j, m) against the lattice and classify the sector");
  io(validate_cmd);
  validate_cmd->add_option("--k", p.k, "Monopole charge k")->required();
  validate_cmd->add_option("--j", p.j, "Total angular momentum j")->required();
  validate_cmd->add_option("--m", p.m, "Magnetic number m")->required();
  validate_cmd->add_option("--delta", p.delta, "Sign delta used for lambda");

  CLI::App* radial_cmd = app.add_subcommand("radial", "Tabulate a radial solution pair with its residuals");
  io(radial_cmd);
  radial_opts(radial_cmd);
  radial_cmd->add_flag("--jmin", jmin_flag, "Use the j_min sector (nu = 0)");
  radial_cmd->add_option("--kind", p.kind, "reg, sing, in, out; f-nonzero or g-nonzero at j_min");
  radial_cmd->add_option("--grid", p.grid, "var:start:end:count with var in r, z, rho");
  radial_cmd->add_option("--tol", p.tol, "Residual tolerance (default 1e-8)");

  CLI::App* horizon_cmd = app.add_subcommand("horizon", "Decompose origin solutions into in/out waves");
  io(horizon_cmd);
  radial_opts(horizon_cmd);
  horizon_cmd->add_flag("--jmin", jmin_flag, "Use the j_min sector (nu = 0)");
  horizon_cmd->add_option("--tol", p.tol, "Reconstruction tolerance (default 1e-9)");

  CLI::App* spinor_cmd = app.add_subcommand("spinor", "Sample the four-component spinor along a radial grid");
  io(spinor_cmd);
  spinor_cmd->add_option("--eps", p.eps, "Dimensionless energy epsilon")->required();
  spinor_cmd->add_option("--mass", p.mass, "Dimensionless mass M")->required();
  spinor_cmd->add_option("--k", p.k, "Monopole charge k")->required();
  spinor_cmd->add_option("--j", p.j, "Total angular momentum j")->required();
  spinor_cmd->add_option("--m", p.m, "Magnetic number m")->required();
  spinor_cmd->add_option("--delta", p.delta, "Sign delta (+1 or -1)");
  spinor_cmd->add_option("--kind", p.kind, "reg, sing, in, out; f-nonzero or g-nonzero at j_min");
  spinor_cmd->add_option("--grid", p.grid, "Radial grid var:start:end:count (default r:0.1:0.9:17)");
  spinor_cmd->add_option("--t", p.t, "Time");
  spinor_cmd->add_option("--theta", p.theta, "Polar angle in (0, pi)");
  spinor_cmd->add_option("--phi", p.phi, "Azimuth");
  spinor_cmd->add_flag("--full-prefactor", p.full_prefactor, "Include r^-1 (1 - r^2)^-1/4");
  spinor_cmd->add_option("--tol", p.tol, "Dirac residual tolerance (default 1e-5)");

  CLI::App* limit_cmd = app.add_subcommand("limit", "Flat-space limit convergence study (c = hbar = 1)");
  io(limit_cmd);
  limit_cmd->add_option("--E", p.E, "Energy")->required();
  limit_cmd->add_option("--m", p.m_phys, "Mass")->required();
  limit_cmd->add_option("--R", p.R, "Radius at which the limit is taken")->required();
  limit_cmd->add_option("--rho", p.rho, "Comma-separated curvature radii")->required();

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "Integrate a radial system numerically and compare with the closed form");
  io(oracle_cmd);
  oracle_cmd->add_option("--system", p.system, "z, rho, jmin-z or minkowski");
  oracle_cmd->add_option("--eps", p.eps, "Dimensionless energy epsilon");
  oracle_cmd->add_option("--mass", p.mass, "Dimensionless mass M");
  oracle_cmd->add_option("--nu", p.nu, "Angular coupling nu");
  oracle_cmd->add_option("--delta", p.delta, "Sign delta (+1 or -1)");
  oracle_cmd->add_option("--k-sign", p.k_sign, "Sign of k for jmin-z");
  oracle_cmd->add_option("--kind", p.kind, "reg, sing, in, out; f-nonzero, g-nonzero; first, second");
  oracle_cmd->add_option("--grid", p.grid, "var:start:end:count");
  oracle_cmd->add_option("--tol", p.tol, "Integrator tolerance in [1e-12, 1e-6] (default 1e-10)");
  oracle_cmd->add_option("--max-dev", p.max_dev, "Largest accepted relative deviation");

  try {
    std::vector<std::string> args = join_negative_values(expand_config(raw_args));
    std::reverse(args.begin(), args.end());
    try {
      app.parse(args);
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out, err);
      return code == 0 ? kOk : kUsage;
    }

    Table t;
    if (validate_cmd->parsed()) {
        t = run_validate(p);
      } else if (radial_cmd->parsed()) {
        t = run_radial(p, jmin_flag, err);
      } else if (horizon_cmd->parsed()) {
        t = run_horizon(p, jmin_flag, err);
      } else if (spinor_cmd->parsed()) {
        t = run_spinor(p, err);
      } else if (limit_cmd->parsed()) {
        t = run_limit(p, err);
      } else {
        t = run_oracle(p, err);
      }
    emit(t, p, out);
    if (!t.failure.empty()) {
      err << "error: " << t.failure << '\n';
      return kToleranceExceeded;
    }
    return kOk;
  } catch (const LatticeError& e) {
    err << "error: invalid quantum numbers: " << e.what() << '\n';
    return kLatticeError;
  } catch (const PoleError& e) {
    err << "error: degenerate parameters: " << e.what() << '\n';
    return kDegenerate;
  } catch (const DegenerateParameterError& e) {
    err << "error: degenerate parameters: " << e.what() << '\n';
    return kDegenerate;
  } catch (const ConvergenceError& e) {
    err << "error: series did not converge: " << e.what() << '\n';
    return kDegenerate;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace dsdirac::cli
