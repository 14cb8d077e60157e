// Command-line front end: exit events, moments, limit constants, Farey and
// Kloosterman tables, and the asymptotics verification sweeps, printed as CSV
// or JSON with 12 significant digits.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "freepath/asymptotics.hpp"
#include "freepath/io.hpp"
#include "freepath/kloosterman.hpp"
#include "freepath/moments.hpp"
#include "freepath/reflections.hpp"
#include "freepath/scatterers.hpp"

namespace {

using namespace freepath;

enum class OutputFormat { Csv, Json };

struct RunConfig {
  double eps = 0.01;
  std::vector<double> eps_list;
  std::vector<double> r_list{1.0};
  std::vector<std::string> interval{"0", "0.785398163397448"};
  std::string scatterer = "cross";
  std::string method = "farey";
  std::string quantity = "exit_length";
  std::string format = "csv";
  std::string out_path;
  std::string theorem = "T3_2";
  std::uint64_t seed = 0;
  int threads = 1;
  std::int64_t samples = 10000;
  bool drop_plus_one = false;
};

// Angles are radians, or "atan:p/q" / "atan:x" for exact slope inputs.
double parse_angle(const std::string& text) {
  if (text.rfind("atan:", 0) == 0) {
    const std::string slope = text.substr(5);
    const auto slash = slope.find('/');
    if (slash == std::string::npos) return std::atan(std::stod(slope));
    const double p = std::stod(slope.substr(0, slash));
    const double q = std::stod(slope.substr(slash + 1));
    if (q == 0.0) throw CLI::ValidationError("--omega/--interval", "zero denominator in slope");
    return std::atan(p / q);
  }
  return std::stod(text);
}

AngleInterval parse_interval(const std::vector<std::string>& bounds) {
  return {parse_angle(bounds.at(0)), parse_angle(bounds.at(1))};
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(cfg.out_path);
  if (!file) throw std::runtime_error("cannot open output file: " + cfg.out_path);
  file << text;
}

template <class Rows>
void emit_rows(const RunConfig& cfg, const std::string& command, const Rows& rows) {
  if (cfg.format == "json") {
    Json doc{{"command", command}, {"rows", rows}};
    emit(cfg, doc.dump(2) + "\n");
  } else {
    emit(cfg, csv_table(rows));
  }
}

std::vector<double> eps_values(const RunConfig& cfg) {
  return cfg.eps_list.empty() ? std::vector<double>{cfg.eps} : cfg.eps_list;
}

MomentMethod method_from_flag(const std::string& name) {
  if (name == "farey") return MomentMethod::FareyExact;
  if (name == "farey-quad") return MomentMethod::FareyQuadrature;
  if (name == "brute") return MomentMethod::BruteForceQuadrature;
  throw CLI::ValidationError("--method", "expected farey, farey-quad or brute");
}

int cmd_exit(const RunConfig& cfg, const std::vector<std::string>& omegas,
             std::int64_t sample_count) {
  const ScattererConfig sc{scatterer_kind_from(cfg.scatterer), cfg.eps};
  const bool brute = cfg.method == "brute";
  std::vector<ExitEvent> rows;
  for (const auto& text : omegas) {
    const double w = parse_angle(text);
    rows.push_back(brute ? exit_time_bruteforce(sc, w) : exit_time(sc, w));
  }
  if (sample_count > 0) {
    const AngleInterval I = parse_interval(cfg.interval);
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> dist(I.alpha, I.beta);
    for (std::int64_t i = 0; i < sample_count; ++i) {
      const double w = dist(rng);
      rows.push_back(brute ? exit_time_bruteforce(sc, w) : exit_time(sc, w));
    }
  }
  emit_rows(cfg, "exit", rows);
  return 0;
}

int cmd_moment(const RunConfig& cfg) {
  const AngleInterval I = parse_interval(cfg.interval);
  MomentOptions opt;
  opt.threads = cfg.threads;
  opt.brute_samples = cfg.samples;
  opt.plus_one_arcs = !cfg.drop_plus_one;
  std::vector<MomentEstimate> rows;
  for (const double eps : eps_values(cfg)) {
    for (const double r : cfg.r_list) {
      rows.push_back(moment_integral(eps, r, I, scatterer_kind_from(cfg.scatterer),
                                     moment_quantity_from(cfg.quantity),
                                     method_from_flag(cfg.method), opt));
    }
  }
  emit_rows(cfg, "moment", rows);
  return 0;
}

int cmd_crconst(const RunConfig& cfg) {
  std::ostringstream csv;
  Json json_rows = Json::array();
  csv << "r,c_r\n";
  for (const double r : cfg.r_list) {
    const double value = c_r(r);
    csv << format_double(r) << ',' << format_double(value) << '\n';
    json_rows.push_back({{"r", round12(r)}, {"c_r", round12(value)}});
  }
  if (cfg.format == "json") {
    Json doc{{"command", "crconst"}, {"rows", json_rows}};
    emit(cfg, doc.dump(2) + "\n");
  } else {
    emit(cfg, csv.str());
  }
  return 0;
}

int cmd_farey(const RunConfig& cfg, std::int64_t order, const std::vector<double>& slopes,
              const std::string& mode) {
  const double lo = slopes.at(0), hi = slopes.at(1);
  if (mode == "seq") {
    emit_rows(cfg, "farey", farey_sequence(order, lo, hi));
  } else if (mode == "pairs") {
    std::vector<FareyPair> rows;
    FareyPairCursor cursor(order, lo, hi);
    while (auto p = cursor.next()) rows.push_back(*p);
    emit_rows(cfg, "farey", rows);
  } else if (mode == "count") {
    const FareyCount count = farey_count(order, lo, hi);
    if (cfg.format == "json") {
      Json doc{{"command", "farey"},
               {"order", order},
               {"lo", round12(lo)},
               {"hi", round12(hi)},
               {"exact", count.exact},
               {"main_term", round12(count.main_term)}};
      emit(cfg, doc.dump(2) + "\n");
    } else {
      std::ostringstream out;
      out << "order,lo,hi,exact,main_term\n"
          << order << ',' << format_double(lo) << ',' << format_double(hi) << ',' << count.exact
          << ',' << format_double(count.main_term) << '\n';
      emit(cfg, out.str());
    }
  } else {
    throw CLI::ValidationError("--mode", "expected seq, pairs or count");
  }
  return 0;
}

int cmd_kloosterman(const RunConfig& cfg, std::int64_t q, std::int64_t m, std::int64_t n,
                    std::int64_t m_max, std::int64_t n_max,
                    const std::vector<std::int64_t>& i_range,
                    const std::vector<std::int64_t>& j_range) {
  if (!i_range.empty() || !j_range.empty()) {
    if (i_range.size() != 2 || j_range.size() != 2) {
      throw CLI::ValidationError("--i/--j", "each takes two integers lo hi");
    }
    const InversePairCount count =
        count_inverse_pairs(q, {i_range[0], i_range[1]}, {j_range[0], j_range[1]});
    if (cfg.format == "json") {
      Json doc{{"command", "kloosterman"}, {"q", q},
               {"i", i_range},             {"j", j_range},
               {"exact", count.exact},     {"main_term", round12(count.main_term)}};
      emit(cfg, doc.dump(2) + "\n");
    } else {
      std::ostringstream out;
      out << "q,i_lo,i_hi,j_lo,j_hi,exact,main_term\n"
          << q << ',' << i_range[0] << ',' << i_range[1] << ',' << j_range[0] << ',' << j_range[1]
          << ',' << count.exact << ',' << format_double(count.main_term) << '\n';
      emit(cfg, out.str());
    }
    return 0;
  }
  const KloostermanTable table(q);
  std::vector<KloostermanValue> rows;
  for (std::int64_t mm = m; mm <= std::max(m, m_max); ++mm) {
    for (std::int64_t nn = n; nn <= std::max(n, n_max); ++nn) {
      rows.push_back(table.sum(mm, nn));
    }
  }
  emit_rows(cfg, "kloosterman", rows);
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  VerifyOptions opt;
  opt.threads = cfg.threads;
  opt.samples = cfg.samples;
  const SweepReport report = verify_theorem(theorem_id_from(cfg.theorem), eps_values(cfg),
                                            cfg.r_list, parse_interval(cfg.interval), opt);
  if (cfg.format == "json") {
    Json doc = report;
    emit(cfg, doc.dump(2) + "\n");
  } else {
    emit(cfg, csv_table(report));
  }
  return report.pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "freepath: first exit times, cushion counts and their scaled moments for a point\n"
      "particle leaving the origin of the unit torus with small lattice scatterers.\n"
      "CSV columns are listed per subcommand below; JSON mirrors them in snake_case.\n"
      "Floats carry 12 significant digits. Environment overrides use the FREEPATH_ prefix."};
  app.require_subcommand(1);

  RunConfig cfg;
  std::vector<std::string> omegas;
  std::int64_t sample_count = 0;
  std::int64_t farey_q = 5;
  std::vector<double> slopes{0.0, 1.0};
  std::string farey_mode = "seq";
  std::int64_t kq = 1, km = 1, kn = 1, km_max = 0, kn_max = 0;
  std::vector<std::int64_t> i_range, j_range;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->envname("FREEPATH_FORMAT");
    sub->add_option("--out", cfg.out_path, "Write output to this path instead of stdout")
        ->envname("FREEPATH_OUT");
  };

  CLI::App* exit_cmd = app.add_subcommand(
      "exit", "First exit events (CSV: omega,length,q,a,hit)");
  exit_cmd->add_option("--eps", cfg.eps, "Scatterer size in (0, 1/2)")->required();
  exit_cmd->add_option("--scatterer", cfg.scatterer, "disk, cross, vertical or varvertical")
      ->check(CLI::IsMember({"disk", "cross", "vertical", "varvertical"}));
  exit_cmd->add_option("--omega", omegas, "Angle in radians or atan:p/q (repeatable)");
  exit_cmd->add_option("--samples", sample_count, "Additional uniform random angles");
  exit_cmd->add_option("--seed", cfg.seed, "Seed for the random angles")
      ->envname("FREEPATH_SEED");
  exit_cmd->add_option("--interval", cfg.interval, "Sampling interval (two angles)")
      ->expected(2);
  exit_cmd->add_option("--method", cfg.method, "farey (bracket) or brute (lattice scan)")
      ->check(CLI::IsMember({"farey", "brute"}));
  add_common(exit_cmd);

  CLI::App* moment_cmd = app.add_subcommand(
      "moment",
      "Scaled moment with its limit term (CSV: epsilon,r,alpha,beta,method,"
      "scaled_value,main_term,deviation)");
  moment_cmd->add_option("--eps", cfg.eps, "Scatterer size");
  moment_cmd->add_option("--eps-list", cfg.eps_list, "Sweep over these sizes");
  moment_cmd->add_option("--r", cfg.r_list, "Moment orders (repeatable)");
  moment_cmd->add_option("--interval", cfg.interval, "Angle interval (two angles)")->expected(2);
  moment_cmd->add_option("--scatterer", cfg.scatterer, "disk, cross, vertical or varvertical")
      ->check(CLI::IsMember({"disk", "cross", "vertical", "varvertical"}));
  moment_cmd->add_option("--quantity", cfg.quantity, "exit_length or reflections")
      ->check(CLI::IsMember({"exit_length", "reflections"}));
  moment_cmd->add_option("--method", cfg.method, "farey, farey-quad or brute")
      ->check(CLI::IsMember({"farey", "farey-quad", "brute"}));
  moment_cmd->add_option("--samples", cfg.samples, "Quadrature budget for brute method");
  moment_cmd->add_option("--threads", cfg.threads, "Worker threads (1 = reference order)")
      ->envname("FREEPATH_THREADS");
  moment_cmd->add_flag("--drop-plus-one", cfg.drop_plus_one,
                       "Use q+a instead of q+a+1 on the transitional sub-arcs");
  add_common(moment_cmd);

  CLI::App* crconst_cmd =
      app.add_subcommand("crconst", "Limit constants of the scaled moments (CSV: r,c_r)");
  crconst_cmd->add_option("--r", cfg.r_list, "Moment orders (repeatable)");
  add_common(crconst_cmd);

  CLI::App* farey_cmd = app.add_subcommand(
      "farey",
      "Farey sequence, consecutive pairs, or counts (CSV seq: num,den; pairs: "
      "a,q,a_prime,q_prime,order; count: order,lo,hi,exact,main_term)");
  farey_cmd->add_option("--q", farey_q, "Order of the sequence")->required();
  farey_cmd->add_option("--slopes", slopes, "Slope interval inside [0, 1]")->expected(2);
  farey_cmd->add_option("--mode", farey_mode, "seq, pairs or count")
      ->check(CLI::IsMember({"seq", "pairs", "count"}));
  add_common(farey_cmd);

  CLI::App* kloosterman_cmd = app.add_subcommand(
      "kloosterman",
      "Kloosterman sums (CSV: m,n,q,value,imag_residual,weil_bound) or, with --i/--j, "
      "inverse-pair counts (CSV: q,i_lo,i_hi,j_lo,j_hi,exact,main_term)");
  kloosterman_cmd->add_option("--q", kq, "Modulus")->required();
  kloosterman_cmd->add_option("--m", km, "First frequency");
  kloosterman_cmd->add_option("--n", kn, "Second frequency");
  kloosterman_cmd->add_option("--m-max", km_max, "Sweep m up to this value");
  kloosterman_cmd->add_option("--n-max", kn_max, "Sweep n up to this value");
  kloosterman_cmd->add_option("--i", i_range, "Integer interval lo hi for x")->expected(2);
  kloosterman_cmd->add_option("--j", j_range, "Integer interval lo hi for y")->expected(2);
  add_common(kloosterman_cmd);

  CLI::App* verify_cmd = app.add_subcommand(
      "verify",
      "Asymptotics sweep; exits 2 when a deviation exceeds its bound (CSV: "
      "theorem,epsilon,r,alpha,beta,scaled_value,main_term,deviation,predicted_bound,pass "
      "plus a squeeze table for T1_1/T1_4)");
  verify_cmd->add_option("--theorem", cfg.theorem, "T1_1, T1_2, T1_4, T1_5 or T3_2")
      ->check(CLI::IsMember({"T1_1", "T1_2", "T1_4", "T1_5", "T3_2"}));
  verify_cmd->add_option("--eps", cfg.eps, "Scatterer size");
  verify_cmd->add_option("--eps-list", cfg.eps_list, "Sweep over these sizes");
  verify_cmd->add_option("--r", cfg.r_list, "Moment orders (repeatable)");
  verify_cmd->add_option("--interval", cfg.interval, "Angle interval (two angles)")->expected(2);
  verify_cmd->add_option("--samples", cfg.samples, "Quadrature budget for lattice scans");
  verify_cmd->add_option("--threads", cfg.threads, "Worker threads")
      ->envname("FREEPATH_THREADS");
  add_common(verify_cmd);

  CLI11_PARSE(app, argc, argv);

  try {
    if (exit_cmd->parsed()) return cmd_exit(cfg, omegas, sample_count);
    if (moment_cmd->parsed()) return cmd_moment(cfg);
    if (crconst_cmd->parsed()) return cmd_crconst(cfg);
    if (farey_cmd->parsed()) return cmd_farey(cfg, farey_q, slopes, farey_mode);
    if (kloosterman_cmd->parsed()) {
      return cmd_kloosterman(cfg, kq, km, kn, km_max, kn_max, i_range, j_range);
    }
    if (verify_cmd->parsed()) return cmd_verify(cfg);
  } catch (const CLI::Error& err) {
    std::cerr << err.what() << "\n";
    return 1;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 1;
}
