#include "selberg_cli/cli.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>
#include "selberg/branching.hpp"
#include "selberg/error.hpp"
#include "selberg/geodesics.hpp"
#include "selberg/plancherel.hpp"
#include "selberg/spectral.hpp"
#include "selberg/zeta.hpp"

namespace selberg::cli {

namespace {

using Json = nlohmann::ordered_json;

const std::vector<std::string> kVerbs = {"branch", "weyl-poly", "sphere", "zeta",
                                         "ruelle", "identities", "theta", "torsion-check"};

[[noreturn]] void usage(const std::string& flag, const std::string& why) {
  throw UsageError("--" + flag + ": " + why);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

double parse_double(const std::string& flag, const std::string& text) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size() || !std::isfinite(v)) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    usage(flag, "expected a number, got '" + text + "'");
  }
}

int parse_int(const std::string& flag, const std::string& text) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    usage(flag, "expected an integer, got '" + text + "'");
  }
}

// "re" or "re,im"
std::complex<double> parse_complex(const std::string& flag, const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() == 1) return {parse_double(flag, parts[0]), 0.0};
  if (parts.size() == 2) return {parse_double(flag, parts[0]), parse_double(flag, parts[1])};
  usage(flag, "expected 're' or 're,im', got '" + text + "'");
}

int odd_dimension(const std::string& flag, const std::string& text) {
  const int n = parse_int(flag, text);
  if (n < 3 || n % 2 == 0) usage(flag, "n must be an odd integer >= 3, got " + text);
  return n;
}

Weight parse_weight(const std::string& flag, const std::string& text, std::size_t rank) {
  Weight w;
  try {
    w = Weight::parse(text);
  } catch (const Error& e) {
    usage(flag, e.what());
  }
  if (w.rank() != rank) {
    usage(flag, "expected " + std::to_string(rank) + " entries, got " + std::to_string(w.rank()));
  }
  return w;
}

Rational parse_nonnegative_rational(const std::string& flag, const std::string& text) {
  Rational r;
  try {
    r = parse_rational(text);
  } catch (const Error& e) {
    usage(flag, e.what());
  }
  if (r < 0) usage(flag, "must be nonnegative");
  return r;
}

int thread_count(const std::vector<std::string>* flag) {
  if (flag && !flag->empty()) {
    const int t = parse_int("threads", flag->back());
    if (t < 1) usage("threads", "must be positive");
    return t;
  }
  if (const char* env = std::getenv("SELBERG_LAB_THREADS"); env && *env) {
    try {
      const int t = std::stoi(env);
      if (t >= 1) return t;
    } catch (const std::exception&) {
    }
    throw UsageError("SELBERG_LAB_THREADS: expected a positive integer, got '" + std::string(env) + "'");
  }
  return 1;
}

// Evaluates f(0..count-1) on a worker pool; results keep index order.
template <class T>
std::vector<T> parallel_map(std::size_t count, int threads, const std::function<T(std::size_t)>& f) {
  std::vector<T> out(count);
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads), count);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          out[i] = f(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

Json complex_json(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

Json tail_json(double tail) { return std::isfinite(tail) ? Json(tail) : Json(nullptr); }

Json rep_json(const VirtualRep& rep) {
  Json arr = Json::array();
  for (const auto& [hw, c] : rep.terms()) arr.push_back({{"weight", hw.to_string()}, {"coeff", c}});
  return arr;
}

Json coeffs_json(const std::map<int, Rational>& coeffs) {
  Json obj = Json::object();
  for (const auto& [power, c] : coeffs) obj[std::to_string(power)] = to_string(c);
  return obj;
}

MType sigma_of(const Command& cmd, int n) {
  return make_mtype(n, cmd.weight.value_or(Weight::zero(static_cast<std::size_t>((n - 1) / 2))));
}

// ------------------------------------------------------------------ verbs

int run_branch(const Command& cmd, std::ostream& out) {
  const int n = cmd.ns.front();
  Json doc;
  doc["n"] = n;
  if (cmd.k_type) {
    const RootSystem b = k_root_system(n);
    if (!is_dominant(b, *cmd.weight)) fail(ErrorKind::domain, cmd.weight->to_string() + " is not dominant for " + b.name());
    doc["k_type"] = cmd.weight->to_string();
    doc["dimension"] = weyl_dim(b, *cmd.weight);
    doc["restriction"] = rep_json(restrict_B_to_D(VirtualRep::irreducible(b, *cmd.weight)));
  } else {
    const MType sigma = sigma_of(cmd, n);
    const LiftResult lifted = lift(sigma);
    doc["sigma"] = sigma.weight.to_string();
    doc["case"] = lifted.case_tag == LiftCase::a ? "a" : "b";
    doc["gamma"] = rep_json(lifted.gamma);
    doc["restriction"] = rep_json(restrict_B_to_D(lifted.gamma));
    if (lifted.case_tag == LiftCase::b) {
      doc["gamma_plus"] = rep_json(*lifted.gamma_plus);
      doc["gamma_minus"] = rep_json(*lifted.gamma_minus);
      doc["super_gamma_prime"] = lifted.super_gamma_prime->to_string();
      doc["super_sign"] = *lifted.super_sign;
    }
  }
  out << doc.dump() << '\n';
  return 0;
}

int run_weyl_poly(const Command& cmd, std::ostream& out) {
  const int n = cmd.ns.front();
  const MType sigma = sigma_of(cmd, n);
  const Ladder lad = ladder(n, sigma);
  Json doc;
  doc["n"] = n;
  doc["sigma"] = sigma.weight.to_string();
  doc["coeffs"] = coeffs_json(lad.poly.coefficients());
  doc["epsilon"] = to_string(lad.epsilon);
  doc["d"] = lad.d;
  out << doc.dump() << '\n';
  return 0;
}

Json sphere_entry_json(const SphereEntry& e) {
  Rational lam;
  Json j;
  j["lambda"] = e.eigenvalue(lam) ? Json(to_string(lam)) : Json(nullptr);
  j["lambda_squared"] = to_string(ratio(e.quad, 4));
  j["multiplicity"] = e.multiplicity;
  j["exceptional"] = e.exceptional;
  return j;
}

int run_sphere(const Command& cmd, std::ostream& out) {
  const int n = cmd.ns.front();
  const MType sigma = sigma_of(cmd, n);
  const LadderComparison report = compare_with_ladder(n, sigma, cmd.lambda_max);
  Json doc;
  doc["n"] = n;
  doc["sigma"] = sigma.weight.to_string();
  doc["epsilon"] = to_string(report.ladder.epsilon);
  doc["d"] = report.ladder.d;
  doc["weyl_polynomial"] = coeffs_json(report.ladder.poly.coefficients());
  doc["lambda_max"] = to_string(cmd.lambda_max);
  Json points = Json::array();
  for (const auto& p : report.points) {
    points.push_back({{"lambda", to_string(p.lambda)}, {"observed", p.observed}, {"expected", to_string(p.expected)}});
  }
  doc["ladder"] = points;
  Json dev = Json::array();
  for (const auto& p : report.deviations) {
    dev.push_back({{"lambda", to_string(p.lambda)}, {"observed", p.observed}, {"expected", to_string(p.expected)}});
  }
  doc["deviations"] = dev;
  Json off = Json::array();
  for (const auto& e : report.off_ladder) off.push_back(sphere_entry_json(e));
  doc["off_ladder"] = off;
  doc["zero_rule"] = report.ladder.epsilon == 0 ? Json(report.zero_rule_holds) : Json(nullptr);
  out << doc.dump() << '\n';
  return 0;
}

int run_zeta(const Command& cmd, std::ostream& out, std::ostream& err) {
  const LengthSpectrum spec = load_spectrum(cmd.spectrum_path);
  if (cmd.c_table) {
    write_c_table(out, spec, sigma_of(cmd, spec.n), cmd.table_powers);
    return 0;
  }
  const std::string kind = cmd.kind.empty() ? "selberg" : cmd.kind;
  const bool needs_sigma = kind != "ruelle" && kind != "fried";
  const std::optional<MType> sigma = needs_sigma ? std::optional<MType>(sigma_of(cmd, spec.n)) : std::nullopt;
  const auto eval = [&](std::size_t i) -> ZetaValue {
    const auto s = cmd.args[i];
    if (kind == "selberg") return selberg_log(s, *sigma, spec, cmd.policy);
    if (kind == "euler-direct") return selberg_euler_direct(s, *sigma, spec, cmd.policy);
    if (kind == "symmetric") return symmetric_selberg_log(s, *sigma, spec, cmd.policy);
    if (kind == "super") return super_selberg_log(s, *sigma, spec, cmd.policy);
    if (kind == "D") return log_derivative_D(s, *sigma, spec, cmd.policy);
    if (kind == "super-D") return super_log_derivative_D(s, *sigma, spec, cmd.policy);
    if (kind == "ruelle") return ruelle_log(s, spec, cmd.policy);
    return fried_factorization_log(s, spec, cmd.policy);
  };
  const auto values = parallel_map<ZetaValue>(cmd.args.size(), cmd.threads, eval);
  bool all_converged = true;
  for (const auto& v : values) all_converged = all_converged && v.converged;
  if (cmd.csv) {
    out << "s_re,s_im,log_re,log_im,tail,converged\n" << std::setprecision(17);
    for (std::size_t i = 0; i < values.size(); ++i) {
      const auto& v = values[i];
      out << cmd.args[i].real() << ',' << cmd.args[i].imag() << ',' << v.log_value.real() << ',' << v.log_value.imag()
          << ',' << v.tail_bound << ',' << (v.converged ? "true" : "false") << '\n';
    }
  } else if (values.size() == 1) {
    out << to_json(values.front(), cmd.args.front()) << '\n';
  } else {
    Json arr = Json::array();
    for (std::size_t i = 0; i < values.size(); ++i) arr.push_back(Json::parse(to_json(values[i], cmd.args[i])));
    out << arr.dump() << '\n';
  }
  if (!all_converged) {
    err << "selberg_lab: at least one value did not converge (outside the Euler-product domain or tail above tolerance)\n";
    return 1;
  }
  return 0;
}

int run_ruelle(const Command& cmd, std::ostream& out, std::ostream& err) {
  const LengthSpectrum spec = load_spectrum(cmd.spectrum_path);
  struct Row {
    ZetaValue direct, fried;
  };
  const auto rows = parallel_map<Row>(cmd.args.size(), cmd.threads, [&](std::size_t i) {
    return Row{ruelle_log(cmd.args[i], spec, cmd.policy), fried_factorization_log(cmd.args[i], spec, cmd.policy)};
  });
  Json arr = Json::array();
  bool ok = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    ok = ok && r.direct.converged && r.fried.converged;
    arr.push_back({{"s", complex_json(cmd.args[i])},
                   {"ruelle", complex_json(r.direct.log_value)},
                   {"fried", complex_json(r.fried.log_value)},
                   {"residual", std::abs(r.direct.log_value - r.fried.log_value)},
                   {"tail", tail_json(r.direct.tail_bound + r.fried.tail_bound)},
                   {"converged", r.direct.converged && r.fried.converged}});
  }
  out << (arr.size() == 1 ? arr.front() : arr).dump() << '\n';
  if (!ok) {
    err << "selberg_lab: Ruelle comparison did not converge for every s\n";
    return 1;
  }
  return 0;
}

int run_identities(const Command& cmd, std::ostream& out) {
  Json checks = Json::array();
  Json h_constants = Json::array();
  Json chis = Json::array();
  bool all_pass = true;
  const int max_doubled = Integer(2 * cmd.max_entry.get_num() / cmd.max_entry.get_den()).get_si();
  auto record = [&](const std::string& name, int n, long long cases, long long failures) {
    checks.push_back({{"name", name}, {"n", n}, {"cases", cases}, {"failures", failures}, {"pass", failures == 0}});
    all_pass = all_pass && failures == 0;
  };
  for (const int n : cmd.ns) {
    const RationalEvenPoly h = h_polynomial(n);
    const bool h_constant = h.degree() <= 0;
    const Rational h0 = h(Rational(0));
    h_constants.push_back(h_constant ? Json(to_string(h0) == std::to_string(n + 1) ? Json(n + 1) : Json(to_string(h0)))
                                     : Json(nullptr));
    record("h_constant", n, 1, h_constant && h0 == n + 1 ? 0 : 1);
    const long long chi = euler_characteristic_grassmannian(n);
    chis.push_back(chi);
    record("euler_characteristic", n, 1, chi == n + 1 ? 0 : 1);

    const RootSystem d = m_root_system(n);
    const RootSystem b = k_root_system(n);
    long long cases = 0, lift_fail = 0, diff_fail = 0;
    for (const Parity parity : {Parity::integral, Parity::half_integral}) {
      for (const Weight& w : dominant_weights(d, max_doubled, parity)) {
        const MType sigma = make_mtype(n, w);
        ++cases;
        if (!check_lift_restriction(sigma)) ++lift_fail;
        if (!check_super_difference(sigma)) ++diff_fail;
      }
    }
    record("lift_restriction", n, cases, lift_fail);
    record("super_difference", n, cases, diff_fail);
    long long split_cases = 0, split_fail = 0;
    for (const Parity parity : {Parity::integral, Parity::half_integral}) {
      for (const Weight& nu : dominant_weights(b, max_doubled, parity)) {
        ++split_cases;
        if (!check_spin_split(b, nu)) ++split_fail;
      }
    }
    record("spin_split", n, split_cases, split_fail);
    long long ext_fail = 0;
    for (int p = 0; p <= (n - 1) / 2; ++p) {
      try {
        exterior_lift_identity(n, p);
      } catch (const Error&) {
        ++ext_fail;
      }
    }
    record("exterior_lifts", n, (n + 1) / 2, ext_fail);
  }
  Json doc;
  doc["n"] = cmd.ns;
  doc["h_constant"] = h_constants;
  doc["euler_characteristic"] = chis;
  doc["checks"] = checks;
  doc["all_pass"] = all_pass;
  out << doc.dump() << '\n';
  return all_pass ? 0 : 1;
}

int run_theta(const Command& cmd, std::ostream& out) {
  const SpectralData data = load_spectral(cmd.spectral_path);
  Json doc;
  doc["kind"] = cmd.kind;
  if (cmd.kind == "resolvent") {
    Json pts = Json::array();
    for (const auto& p : cmd.points) pts.push_back(complex_json(p));
    doc["points"] = pts;
    doc["value"] = complex_json(resolvent_product_trace(data, cmd.points));
    out << doc.dump() << '\n';
    return 0;
  }
  const auto values = parallel_map<std::complex<double>>(cmd.args.size(), cmd.threads, [&](std::size_t i) {
    const auto x = cmd.args[i];
    if (cmd.kind == "theta") return theta_series(data, x);
    if (cmd.kind == "super-theta") return super_theta_series(data, x);
    return eta_series(data, x);
  });
  Json arr = Json::array();
  for (std::size_t i = 0; i < values.size(); ++i) {
    arr.push_back({{"arg", complex_json(cmd.args[i])}, {"value", complex_json(values[i])}});
  }
  doc["values"] = arr;
  if (cmd.kind == "eta") {
    try {
      doc["signed_count"] = to_string(eta_exact(data, 0));
    } catch (const Error&) {
      doc["signed_count"] = nullptr;
    }
  }
  out << doc.dump() << '\n';
  return 0;
}

int run_torsion(const Command& cmd, std::ostream& out) {
  const int n = cmd.ns.front();
  const TorsionCheck check = torsion_identity_check(n, cmd.dets);
  Json exps = Json::array();
  for (const auto& [l, e] : torsion_exponents(n)) exps.push_back({l, e});
  const double rel = std::abs(check.lhs - check.rhs) / std::max(std::abs(check.lhs), std::abs(check.rhs));
  Json doc;
  doc["n"] = n;
  doc["exponents"] = exps;
  doc["lhs"] = check.lhs;
  doc["rhs"] = check.rhs;
  doc["relative_error"] = rel;
  doc["pass"] = rel <= 1e-12;
  out << doc.dump() << '\n';
  return rel <= 1e-12 ? 0 : 1;
}

bool input_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_rank:
    case ErrorKind::dimension:
    case ErrorKind::domain:
    case ErrorKind::parse:
    case ErrorKind::validation:
    case ErrorKind::configuration:
      return true;
    default:
      return false;
  }
}

}  // namespace

Command parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Representation theory and zeta functions of odd-dimensional hyperbolic manifolds", "selberg_lab"};
  app.require_subcommand(1);
  std::map<std::string, std::vector<std::string>> raw;
  auto add = [&](CLI::App* sub, const std::string& name, const std::string& help) {
    sub->add_option("--" + name, raw[name], help)->take_all()->allow_extra_args(false);
  };
  auto add_flag = [&](CLI::App* sub, const std::string& name, const std::string& help) {
    sub->add_flag("--" + name, help)->each([&raw, name](const std::string&) { raw[name].push_back("true"); });
  };
  auto policy_flags = [&](CLI::App* sub) {
    add(sub, "max-power", "largest primitive power j (default 400)");
    add(sub, "max-sym", "largest symmetric power in the literal Euler product (default 400)");
    add(sub, "tolerance", "tail tolerance (default 1e-13)");
    add(sub, "threads", "worker threads (default 1, or SELBERG_LAB_THREADS)");
  };

  auto* branch = app.add_subcommand("branch", "lift of an M-type, or restriction of a K-type");
  add(branch, "n", "odd dimension");
  add(branch, "weight", "highest weight, e.g. 1,0 or 3/2,1/2");
  add_flag(branch, "k-type", "treat --weight as a K-type and print its restriction");
  auto* weyl = app.add_subcommand("weyl-poly", "coefficients of the Weyl polynomial P(lambda, sigma)");
  add(weyl, "n", "odd dimension");
  add(weyl, "sigma", "M-type highest weight");
  auto* sphere = app.add_subcommand("sphere", "compact dual spectrum against the ladder");
  add(sphere, "n", "odd dimension");
  add(sphere, "sigma", "M-type highest weight");
  add(sphere, "lambda-max", "largest eigenvalue (rational, default 20)");
  auto* zeta = app.add_subcommand("zeta", "Selberg / Ruelle logarithms on a grid of s");
  add(zeta, "spectrum", "length spectrum JSON file");
  add(zeta, "sigma", "M-type highest weight (default trivial)");
  add(zeta, "s", "evaluation point 're' or 're,im' (repeatable)");
  add(zeta, "grid", "real grid start:stop:count");
  add(zeta, "kind", "selberg | euler-direct | symmetric | super | D | super-D | ruelle | fried");
  add_flag(zeta, "csv", "CSV instead of JSON");
  add_flag(zeta, "c-table", "CSV table of C(g, sigma) per class instead of zeta values");
  add(zeta, "table-powers", "powers per primitive in --c-table (default 3)");
  policy_flags(zeta);
  auto* ruelle = app.add_subcommand("ruelle", "Fried factorization residuals");
  add(ruelle, "spectrum", "length spectrum JSON file");
  add(ruelle, "s", "evaluation point 're' or 're,im' (repeatable)");
  add(ruelle, "grid", "real grid start:stop:count");
  policy_flags(ruelle);
  auto* identities = app.add_subcommand("identities", "exact identity suite");
  add(identities, "n", "comma-separated odd dimensions (default 3,5,7)");
  add(identities, "max-entry", "largest weight entry enumerated (rational, default 2)");
  auto* theta = app.add_subcommand("theta", "theta / super theta / eta / resolvent series");
  add(theta, "spectral", "spectral data JSON file");
  add(theta, "kind", "theta | super-theta | eta | resolvent (default theta)");
  add(theta, "t", "argument 're' or 're,im' for theta kinds (repeatable)");
  add(theta, "s", "argument for eta (repeatable)");
  add(theta, "points", "comma-separated real points for resolvent");
  add(theta, "threads", "worker threads");
  auto* torsion = app.add_subcommand("torsion-check", "torsion exponent bookkeeping");
  add(torsion, "n", "odd dimension");
  add(torsion, "dets", "comma-separated Delta_0..Delta_n");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  Command cmd;
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    std::ostringstream help;
    const auto subs = app.get_subcommands();
    help << (subs.empty() ? app.help() : subs.front()->help());
    cmd.help = help.str();
    return cmd;
  } catch (const CLI::ParseError& e) {
    if (!args.empty() && std::find(kVerbs.begin(), kVerbs.end(), args.front()) == kVerbs.end() &&
        args.front().rfind("-", 0) != 0) {
      throw UsageError("unknown verb '" + args.front() + "'");
    }
    throw UsageError(e.what());
  }
  cmd.verb = app.get_subcommands().front()->get_name();
  for (auto& [k, v] : raw) {
    if (!v.empty()) cmd.options[k] = v;
  }
  const auto get = [&](const std::string& name) -> const std::vector<std::string>* {
    const auto it = cmd.options.find(name);
    return it == cmd.options.end() ? nullptr : &it->second;
  };
  const auto single = [&](const std::string& name) -> std::optional<std::string> {
    const auto* v = get(name);
    if (!v) return std::nullopt;
    if (v->size() != 1) usage(name, "expected exactly one value");
    return v->front();
  };
  const auto required = [&](const std::string& name) -> std::string {
    auto v = single(name);
    if (!v) usage(name, "is required for '" + cmd.verb + "'");
    return *v;
  };

  if (cmd.verb == "identities") {
    const std::string list = single("n").value_or("3,5,7");
    for (const auto& part : split(list, ',')) cmd.ns.push_back(odd_dimension("n", part));
    if (cmd.ns.empty()) usage("n", "expected at least one dimension");
    if (auto m = single("max-entry")) cmd.max_entry = parse_nonnegative_rational("max-entry", *m);
  } else if (cmd.verb == "branch" || cmd.verb == "weyl-poly" || cmd.verb == "sphere" || cmd.verb == "torsion-check") {
    cmd.ns.push_back(odd_dimension("n", required("n")));
  }
  const std::size_t rank = cmd.ns.empty() ? 0 : static_cast<std::size_t>((cmd.ns.front() - 1) / 2);

  if (cmd.verb == "branch") {
    cmd.weight = parse_weight("weight", required("weight"), rank);
    cmd.k_type = get("k-type") != nullptr;
  }
  if (cmd.verb == "weyl-poly" || cmd.verb == "sphere") {
    cmd.weight = parse_weight("sigma", required("sigma"), rank);
  }
  if (cmd.verb == "sphere") {
    if (auto v = single("lambda-max")) cmd.lambda_max = parse_nonnegative_rational("lambda-max", *v);
  }
  if (cmd.verb == "zeta" || cmd.verb == "ruelle") {
    cmd.spectrum_path = required("spectrum");
    if (const auto* v = get("s")) {
      for (const auto& s : *v) cmd.args.push_back(parse_complex("s", s));
    }
    if (auto g = single("grid")) {
      const auto parts = split(*g, ':');
      if (parts.size() != 3) usage("grid", "expected start:stop:count");
      const double a = parse_double("grid", parts[0]);
      const double b = parse_double("grid", parts[1]);
      const int count = parse_int("grid", parts[2]);
      if (count < 1) usage("grid", "count must be positive");
      for (int i = 0; i < count; ++i) cmd.args.emplace_back(count == 1 ? a : a + (b - a) * i / (count - 1), 0.0);
    }
    if (auto v = single("max-power")) {
      cmd.policy.max_power = parse_int("max-power", *v);
      if (cmd.policy.max_power < 1) usage("max-power", "must be positive");
    }
    if (auto v = single("max-sym")) {
      cmd.policy.max_sym = parse_int("max-sym", *v);
      if (cmd.policy.max_sym < 0) usage("max-sym", "must be nonnegative");
    }
    if (auto v = single("tolerance")) {
      cmd.policy.tail_tolerance = parse_double("tolerance", *v);
      if (!(cmd.policy.tail_tolerance > 0)) usage("tolerance", "must be positive");
    }
    cmd.threads = thread_count(get("threads"));
  }
  if (cmd.verb == "zeta") {
    cmd.kind = single("kind").value_or("selberg");
    static const std::vector<std::string> kinds = {"selberg", "euler-direct", "symmetric", "super",
                                                   "D",       "super-D",      "ruelle",    "fried"};
    if (std::find(kinds.begin(), kinds.end(), cmd.kind) == kinds.end()) usage("kind", "unknown kind '" + cmd.kind + "'");
    cmd.csv = get("csv") != nullptr;
    cmd.c_table = get("c-table") != nullptr;
    if (auto v = single("table-powers")) {
      cmd.table_powers = parse_int("table-powers", *v);
      if (cmd.table_powers < 1) usage("table-powers", "must be positive");
    }
    // The rank of sigma depends on the spectrum, so it is checked on load.
    if (auto w = single("sigma")) {
      try {
        cmd.weight = Weight::parse(*w);
      } catch (const Error& e) {
        usage("sigma", e.what());
      }
    }
    if (!cmd.c_table && cmd.args.empty()) usage("s", "give at least one --s or a --grid");
  }
  if (cmd.verb == "ruelle" && cmd.args.empty()) usage("s", "give at least one --s or a --grid");
  if (cmd.verb == "theta") {
    cmd.spectral_path = required("spectral");
    cmd.kind = single("kind").value_or("theta");
    if (cmd.kind == "theta" || cmd.kind == "super-theta") {
      const auto* v = get("t");
      if (!v) usage("t", "is required for --kind " + cmd.kind);
      for (const auto& t : *v) {
        cmd.args.push_back(parse_complex("t", t));
        if (!(cmd.args.back().real() > 0)) usage("t", "needs Re t > 0");
      }
    } else if (cmd.kind == "eta") {
      const auto* v = get("s");
      if (!v) usage("s", "is required for --kind eta");
      for (const auto& s : *v) cmd.args.push_back(parse_complex("s", s));
    } else if (cmd.kind == "resolvent") {
      for (const auto& part : split(required("points"), ',')) cmd.points.emplace_back(parse_double("points", part), 0.0);
      if (cmd.points.empty()) usage("points", "expected at least one point");
    } else {
      usage("kind", "unknown kind '" + cmd.kind + "'");
    }
    cmd.threads = thread_count(get("threads"));
  }
  if (cmd.verb == "torsion-check") {
    for (const auto& part : split(required("dets"), ',')) cmd.dets.push_back(parse_double("dets", part));
    if (cmd.dets.size() != static_cast<std::size_t>(cmd.ns.front() + 1)) {
      usage("dets", "expected n + 1 = " + std::to_string(cmd.ns.front() + 1) + " values");
    }
  }
  return cmd;
}

int execute(const Command& cmd, std::ostream& out, std::ostream& err) {
  if (cmd.help) {
    out << *cmd.help;
    return 0;
  }
  try {
    if (cmd.verb == "branch") return run_branch(cmd, out);
    if (cmd.verb == "weyl-poly") return run_weyl_poly(cmd, out);
    if (cmd.verb == "sphere") return run_sphere(cmd, out);
    if (cmd.verb == "zeta") return run_zeta(cmd, out, err);
    if (cmd.verb == "ruelle") return run_ruelle(cmd, out, err);
    if (cmd.verb == "identities") return run_identities(cmd, out);
    if (cmd.verb == "theta") return run_theta(cmd, out);
    if (cmd.verb == "torsion-check") return run_torsion(cmd, out);
    err << "selberg_lab: unknown verb '" << cmd.verb << "'\n";
    return 2;
  } catch (const Error& e) {
    Json doc;
    doc["error"] = {{"kind", to_string(e.kind())}, {"message", e.what()}};
    out << doc.dump() << '\n';
    err << "selberg_lab: " << e.what() << '\n';
    return input_error(e.kind()) ? 2 : 1;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Command cmd;
  try {
    cmd = parse_args(args);
  } catch (const UsageError& e) {
    err << "selberg_lab: " << e.what() << '\n';
    return 2;
  }
  return execute(cmd, out, err);
}

}  // namespace selberg::cli
