#include "rsiegel/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "CLI11.hpp"
#include "rsiegel/mordell.hpp"
#include "rsiegel/pcf.hpp"
#include "rsiegel/verify.hpp"

namespace rsiegel::cli {

namespace {

double parse_real(std::string_view text) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("bad number '" + std::string(text) + "'");
  }
  return v;
}

// Imaginary coefficient: "", "+", "-" stand for 1, 1, -1.
double parse_coefficient(std::string_view text) {
  if (text.empty() || text == "+") return 1.0;
  if (text == "-") return -1.0;
  return parse_real(text);
}

// Shortest decimal that reads back to the same double.
std::string num(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

struct Options {
  std::string s = "2", x = "0", tau = "1", a = "0", z = "0";
  std::vector<std::string> tau_grid;
  std::string method = "classical";
  std::string route = "direct";
  std::string format = "text";
  std::string only;
  double tol = 1e-10;
  bool tol_given = false;
  std::uint64_t seed = 20240601;
};

QuadratureConfig config_from(const Options& o) {
  QuadratureConfig cfg;
  cfg.rel_tol = o.tol;
  return cfg;
}

struct Record {
  Complex value;
  double abs_err = 0.0;
  long nodes = 0;
  std::string method;
  bool converged = true;
};

nlohmann::json record_json(const Record& r) {
  return {{"re", r.value.real()},  {"im", r.value.imag()},
          {"abs_err", r.abs_err},  {"nodes", r.nodes},
          {"method", r.method},    {"converged", r.converged}};
}

void print_record(const Record& r, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << record_json(r).dump() << '\n';
  } else if (format == "csv") {
    out << "re,im,abs_err,nodes,method,converged\n"
        << num(r.value.real()) << ',' << num(r.value.imag()) << ',' << num(r.abs_err)
        << ',' << r.nodes << ',' << r.method << ','
        << (r.converged ? "true" : "false") << '\n';
  } else {
    out << std::setprecision(15) << "value     " << r.value.real()
        << (r.value.imag() < 0 ? " - " : " + ") << std::abs(r.value.imag()) << "i\n"
        << std::setprecision(3) << "abs_err   " << r.abs_err << '\n'
        << "nodes     " << r.nodes << '\n'
        << "method    " << r.method << '\n'
        << "converged " << (r.converged ? "yes" : "no") << '\n';
  }
}

int emit(const Record& r, const Options& o, std::ostream& out) {
  print_record(r, o.format, out);
  return r.converged ? kOk : kNoConvergence;
}

Record from_report(const EvalReport& r) {
  return {r.value, r.abs_error_estimate, r.nodes_used, std::string(to_string(r.method)),
          r.converged};
}

int cmd_zeta(const Options& o, std::ostream& out) {
  const Method m = parse_method(o.method);
  return emit(from_report(zeta(parse_complex(o.s), config_from(o), m)), o, out);
}

int cmd_pcf(const Options& o, std::ostream& out) {
  const Complex v = pcf_u({parse_complex(o.a), parse_complex(o.z)}, config_from(o));
  return emit({v, 0.0, 0, "pcf", true}, o, out);
}

int cmd_mordell(const Options& o, std::ostream& out) {
  const MordellArgs args{parse_complex(o.x), parse_complex(o.tau)};
  const auto cfg = config_from(o);
  if (o.route == "transformed") {
    const auto q = transform_rhs(args, cfg);
    return emit({q.value, q.abs_error_estimate, q.nodes_used, "transformed", q.converged},
                o, out);
  }
  const auto q = phi_quadrature(args, cfg);
  return emit({q.value, q.abs_error_estimate, q.nodes_used, "direct", q.converged}, o,
              out);
}

int cmd_verify(const Options& o, std::ostream& out) {
  std::optional<double> tol;
  if (o.tol_given) tol = o.tol;
  const auto rows = run_verify(o.only, tol, o.seed);
  const bool ok = std::all_of(rows.begin(), rows.end(), [](const CheckRow& r) { return r.pass; });
  if (o.format == "json") {
    auto arr = nlohmann::json::array();
    for (const auto& r : rows) {
      arr.push_back({{"name", r.name},
                     {"max_residual", r.max_residual},
                     {"tolerance", r.tolerance},
                     {"pass", r.pass},
                     {"detail", r.detail}});
    }
    out << arr.dump(2) << '\n';
  } else if (o.format == "csv") {
    out << "name,max_residual,tolerance,pass\n";
    for (const auto& r : rows) {
      out << r.name << ',' << num(r.max_residual) << ',' << num(r.tolerance) << ','
          << (r.pass ? "pass" : "fail") << '\n';
    }
  } else {
    for (const auto& r : rows) {
      out << std::left << std::setw(40) << r.name << std::setw(12)
          << std::setprecision(3) << std::scientific << r.max_residual
          << std::setw(10) << r.tolerance << std::defaultfloat
          << (r.pass ? "pass" : "FAIL");
      if (!r.detail.empty()) out << "  " << r.detail;
      out << '\n';
    }
  }
  if (rows.empty()) return kUsage;
  return ok ? kOk : kVerifyFailed;
}

template <class Fn>
long median_time_ns(Fn&& fn) {
  constexpr int kReps = 5;
  std::vector<long> t(kReps);
  for (auto& dt : t) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    dt = std::chrono::duration_cast<std::chrono::nanoseconds>(
             std::chrono::steady_clock::now() - t0)
             .count();
  }
  std::nth_element(t.begin(), t.begin() + kReps / 2, t.end());
  return t[kReps / 2];
}

int cmd_bench(const Options& o, std::ostream& out) {
  std::vector<Complex> taus;
  for (const auto& t : o.tau_grid) taus.push_back(parse_complex(t));
  if (taus.empty()) taus = {1.0, 0.3, 0.1, 0.03, 0.01};
  QuadratureConfig cfg;
  cfg.rel_tol = o.tol_given ? o.tol : 1e-9;

  bool converged = true;
  auto rows = nlohmann::json::array();
  if (o.format == "csv") {
    out << "tau_re,tau_im,nodes_direct,nodes_transformed,time_direct_ns,"
           "time_transformed_ns,agree_rel\n";
  }
  for (Complex tau : taus) {
    const MordellArgs args{0.0, tau};
    QuadratureResult direct, fast;
    const long t_direct = median_time_ns([&] { direct = phi_quadrature(args, cfg); });
    const long t_fast = median_time_ns([&] { fast = transform_rhs(args, cfg); });
    converged = converged && direct.converged && fast.converged;
    const double agree = rel_diff(fast.value, direct.value);
    if (o.format == "csv") {
      out << num(tau.real()) << ',' << num(tau.imag()) << ',' << direct.nodes_used << ','
          << fast.nodes_used << ',' << t_direct << ',' << t_fast << ',' << num(agree)
          << '\n';
    } else if (o.format == "json") {
      rows.push_back({{"tau_re", tau.real()},
                      {"tau_im", tau.imag()},
                      {"nodes_direct", direct.nodes_used},
                      {"nodes_transformed", fast.nodes_used},
                      {"time_direct_ns", t_direct},
                      {"time_transformed_ns", t_fast},
                      {"agree_rel", agree},
                      {"re", direct.value.real()},
                      {"im", direct.value.imag()}});
    } else {
      out << "tau " << tau << "  nodes " << direct.nodes_used << " -> "
          << fast.nodes_used << "  time " << t_direct << " ns -> " << t_fast
          << " ns  agree " << std::setprecision(3) << agree << std::setprecision(6)
          << '\n';
    }
  }
  if (o.format == "json") out << rows.dump(2) << '\n';
  return converged ? kOk : kNoConvergence;
}

}  // namespace

Complex parse_complex(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw std::invalid_argument("empty complex literal");
  if (text.back() != 'i') return {parse_real(text), 0.0};
  text.remove_suffix(1);
  // Split at the last sign that is not part of an exponent.
  std::size_t split = 0;
  for (std::size_t k = text.size(); k-- > 1;) {
    if ((text[k] == '+' || text[k] == '-') && text[k - 1] != 'e' && text[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == 0) return {0.0, parse_coefficient(text)};
  return {parse_real(text.substr(0, split)), parse_coefficient(text.substr(split))};
}

nlohmann::json report_to_json(const EvalReport& r) { return record_json(from_report(r)); }

EvalReport report_from_json(const nlohmann::json& j) {
  EvalReport r;
  r.value = {j.at("re").get<double>(), j.at("im").get<double>()};
  r.abs_error_estimate = j.at("abs_err").get<double>();
  r.nodes_used = j.at("nodes").get<long>();
  r.method = parse_method(j.at("method").get<std::string>());
  r.converged = j.at("converged").get<bool>();
  return r;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Riemann-Siegel integral, parabolic cylinder and Mordell integral tools"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--tol", o.tol, "relative quadrature tolerance (verify: threshold)")
        ->check(CLI::Range(1e-13, 1e-3))
        ->each([&](const std::string&) { o.tol_given = true; });
    sub->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
  };

  auto* zeta_cmd = app.add_subcommand("zeta", "zeta(s) from the integral formula");
  zeta_cmd->add_option("--s", o.s, "complex argument, e.g. 0.5+14.1i");
  zeta_cmd->add_option("--method", o.method)
      ->check(CLI::IsMember({"classical", "pcf", "oracle"}));
  add_common(zeta_cmd);

  auto* pcf_cmd = app.add_subcommand("pcf", "parabolic cylinder function U(a, z)");
  pcf_cmd->add_option("--a", o.a, "order");
  pcf_cmd->add_option("--z", o.z, "argument");
  add_common(pcf_cmd);

  auto* mordell_cmd = app.add_subcommand("mordell", "Mordell integral Phi(x, tau)");
  mordell_cmd->add_option("--x", o.x);
  mordell_cmd->add_option("--tau", o.tau, "Re tau > 0");
  mordell_cmd->add_option("--route", o.route, "direct contour or the transformed one")
      ->check(CLI::IsMember({"direct", "transformed"}));
  add_common(mordell_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "run the identity checks");
  verify_cmd->add_option("--only", o.only, "run checks whose name starts with this");
  verify_cmd->add_option("--seed", o.seed, "seed of the sampled grids");
  add_common(verify_cmd);

  auto* bench_cmd = app.add_subcommand("bench", "direct vs transformed Mordell quadrature");
  bench_cmd->add_option("--tau", o.tau_grid, "tau values (repeatable)");
  add_common(bench_cmd);
  o.format = "text";

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  if (bench_cmd->parsed() && bench_cmd->count("--format") == 0) o.format = "csv";

  try {
    if (zeta_cmd->parsed()) return cmd_zeta(o, out);
    if (pcf_cmd->parsed()) return cmd_pcf(o, out);
    if (mordell_cmd->parsed()) return cmd_mordell(o, out);
    if (verify_cmd->parsed()) return cmd_verify(o, out);
    if (bench_cmd->parsed()) return cmd_bench(o, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const NoConvergence& e) {
    err << "no convergence: " << e.what() << '\n';
    return kNoConvergence;
  } catch (const Error& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomain;
  }
  return kUsage;
}

}  // namespace rsiegel::cli
