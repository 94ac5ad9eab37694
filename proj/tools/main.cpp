// zetainv command line tool.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "report.hpp"
#include "zetainv/constants.hpp"
#include "zetainv/invzeta.hpp"
#include "zetainv/rootrec.hpp"

namespace fs = std::filesystem;
using namespace zetainv;
using cli::Report;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;
constexpr const char* kDefaultTable = "jx_singularities_m50.txt";

struct Globals {
  int digits = 200;
  std::string format = "text";
  int threads = 0;
  cli::Format fmt() const {
    if (format == "json") return cli::Format::json;
    if (format == "csv") return cli::Format::csv;
    return cli::Format::text;
  }
};

int default_digits() {
  if (const char* env = std::getenv("ZETAINV_DIGITS")) {
    try {
      const int d = std::stoi(env);
      if (d >= kMinDigits) return d;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring ZETAINV_DIGITS=" << env << "\n";
  }
  return 200;
}

PrecisionContext make_ctx(int digits) {
  if (digits < kMinDigits) throw UsageError("--digits must be at least " + std::to_string(kMinDigits));
  return PrecisionContext(digits);
}

// "re" or "re,im"
BigComplex parse_w(const std::string& text, const PrecisionContext& ctx) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return parse_complex(text, "", ctx);
  return parse_complex(text.substr(0, comma), text.substr(comma + 1), ctx);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<BigReal> read_values(const std::string& path, const PrecisionContext& ctx) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::vector<BigReal> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::stringstream ss(line);
    std::string tok;
    if (ss >> tok) out.push_back(parse_decimal(tok, ctx));
  }
  return out;
}

fs::path find_table(const std::string& name) {
  const fs::path p(name);
  if (fs::exists(p)) return p;
  std::vector<fs::path> dirs;
  if (const char* env = std::getenv("ZETAINV_DATA_DIR")) dirs.emplace_back(env);
#ifdef ZETAINV_SOURCE_DATA_DIR
  dirs.emplace_back(ZETAINV_SOURCE_DATA_DIR);
#endif
#ifdef ZETAINV_INSTALL_DATA_DIR
  dirs.emplace_back(ZETAINV_INSTALL_DATA_DIR);
#endif
  for (const auto& d : dirs) {
    if (fs::exists(d / p.filename())) return d / p.filename();
  }
  throw UsageError("attractor table not found: " + name);
}

std::string sig(const BigReal& x, int digits) { return format_decimal(x, digits); }

std::string err_text(const BigReal& e) { return format_decimal(e, 3); }

void roots_report(Report& r, const RootList& list, int digits) {
  r.header = {"n", "root", "error_estimate", "order", "snapped"};
  nlohmann::json arr = nlohmann::json::array();
  for (size_t i = 0; i < list.size(); ++i) {
    r.add_row({std::to_string(i + 1), cli::complex_text(list.roots[i], digits), err_text(list.errors[i]),
               std::to_string(list.m_used[i]), list.snapped[i] ? "yes" : "no"});
    arr.push_back({{"n", i + 1},
                   {"root", cli::complex_json(list.roots[i], digits)},
                   {"error_estimate", err_text(list.errors[i])},
                   {"order", list.m_used[i]},
                   {"snapped", static_cast<bool>(list.snapped[i])}});
  }
  r.value = arr;
}

void single(Report& r, const std::string& key, const std::string& value) {
  r.header = {"key", "value"};
  r.add_row({key, value});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inverse Riemann zeta function and zeros of analytic functions from generalized zeta series"};
  app.require_subcommand(1);
  Globals g;
  g.digits = default_digits();
  app.add_option("--digits", g.digits, "Decimal working precision (env ZETAINV_DIGITS)")->capture_default_str();
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}))->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads for grid commands (0 = hardware)");

  Report report;
  std::function<void()> action;
  int exit_code = 0;

  // zeros
  auto* zeros = app.add_subcommand("zeros", "Zeros of sinc, Bessel J and zeta")->require_subcommand(1)->fallthrough();
  int z_n = 3, z_m = 50;
  std::string z_nu = "0", z_corr, z_method = "modsq", z_known;
  int z_ref_corr = 0;
  auto add_nm = [&](CLI::App* c) {
    c->add_option("--n", z_n, "Number of zeros / zero index")->check(CLI::PositiveNumber);
    c->add_option("--m", z_m, "Series index")->check(CLI::PositiveNumber);
    c->fallthrough();
  };
  auto* zs = zeros->add_subcommand("sinc", "Zeros of sin(pi s)/(pi s)");
  add_nm(zs);
  zs->callback([&] {
    const auto ctx = make_ctx(g.digits);
    report.digits = g.digits;
    report.m = z_m;
    roots_report(report, sinc_zeros(z_n, z_m, ctx), g.digits);
  });
  auto* zb = zeros->add_subcommand("bessel", "Positive zeros of J_nu");
  add_nm(zb);
  zb->add_option("--nu", z_nu, "Order (decimal)");
  zb->callback([&] {
    const auto ctx = make_ctx(g.digits);
    report.digits = g.digits;
    report.m = z_m;
    roots_report(report, bessel_zeros(z_nu, z_n, z_m, ctx), g.digits);
  });
  auto* zt = zeros->add_subcommand("trivial", "n-th trivial zero of zeta");
  add_nm(zt);
  zt->add_option("--corrections", z_corr, "File of t_k values to deflate");
  zt->add_option("--reference-corrections", z_ref_corr, "Deflate by the first K reference t_k");
  zt->callback([&] {
    const auto ctx = make_ctx(g.digits);
    std::vector<BigReal> corr;
    if (!z_corr.empty()) corr = read_values(z_corr, ctx.widened(ctx.digits()));
    for (int k = 1; k <= z_ref_corr; ++k) corr.push_back(reference_zeta_zero(k, ctx.widened(ctx.digits())));
    report.digits = g.digits;
    report.m = z_m;
    const BigReal v = trivial_zero(z_n, z_m, corr, ctx);
    report.value = sig(v, g.digits);
    single(report, "rho_t," + std::to_string(z_n), sig(v, g.digits));
  });
  auto* zn = zeros->add_subcommand("nontrivial", "Imaginary part t_n of a nontrivial zero");
  add_nm(zn);
  zn->add_option("--method", z_method, "modsq | xi | hurwitz")->check(CLI::IsMember({"modsq", "xi", "hurwitz"}));
  zn->add_option("--known", z_known, "File with t_1..t_{n-1}");
  zn->callback([&] {
    const auto ctx = make_ctx(g.digits);
    const NontrivialMethod method = z_method == "xi"        ? NontrivialMethod::z1_xi
                                    : z_method == "hurwitz" ? NontrivialMethod::z1_hurwitz
                                                            : NontrivialMethod::modsq_asymptotic;
    std::vector<BigReal> known;
    if (!z_known.empty()) known = read_values(z_known, ctx.widened(ctx.digits()));
    if (static_cast<int>(known.size()) < z_n - 1) {
      report.warnings.push_back("missing earlier zeros taken from Newton-refined references");
      for (int k = static_cast<int>(known.size()) + 1; k < z_n; ++k)
        known.push_back(reference_zeta_zero(k, ctx.widened(ctx.digits())));
    }
    const NontrivialResult res = nontrivial_zero(z_n, z_m, method, known, ctx);
    report.digits = g.digits;
    report.m = z_m;
    report.value = {{"t", sig(res.t, g.digits)}, {"stable_digits", res.stable_digits}};
    report.header = {"key", "value"};
    report.add_row({"t_" + std::to_string(z_n), sig(res.t, g.digits)});
    report.add_row({"stable_digits", std::to_string(res.stable_digits)});
    if (res.stable_digits < 3) report.warnings.push_back("fewer than 3 stable digits; increase --m");
  });

  // check real-part
  auto* check = app.add_subcommand("check", "Consistency checks")->require_subcommand(1)->fallthrough();
  int rp_m = 50;
  auto* rp = check->add_subcommand("real-part", "Real part of the first nontrivial zero")->fallthrough();
  rp->add_option("--m", rp_m)->check(CLI::PositiveNumber);
  rp->callback([&] {
    const auto ctx = make_ctx(g.digits);
    const BigReal v = real_part_check(rp_m, ctx);
    report.digits = g.digits;
    report.m = rp_m;
    const BigReal dev = abs(v - BigReal(1, ctx) / 2L);
    report.value = {{"sigma", sig(v, g.digits)}, {"deviation", err_text(dev)}};
    report.header = {"key", "value"};
    report.add_row({"sigma", sig(v, g.digits)});
    report.add_row({"deviation", err_text(dev)});
  });

  // inverse
  auto* inv = app.add_subcommand("inverse", "Solve zeta(s) = w")->fallthrough();
  std::string i_w, i_table, i_sign = "auto";
  int i_m = 50;
  bool i_limit = false, i_second = false;
  double i_threshold = 1e-3;
  inv->add_option("--w", i_w, "w as re or re,im")->required();
  auto* i_m_opt = inv->add_option("--m", i_m, "Series index / attractor size")->check(CLI::PositiveNumber);
  inv->add_option("--table", i_table, "Attractor file (default: bundled m=50)");
  inv->add_flag("--limit-formula", i_limit, "Use the limit formula instead of the product");
  inv->add_flag("--second", i_second, "Also the second solution (limit formula)");
  inv->add_option("--sign", i_sign, "auto | positive | negative")->check(CLI::IsMember({"auto", "positive", "negative"}));
  inv->add_option("--threshold", i_threshold, "Branch acceptance threshold on |zeta(s) - w|");
  inv->callback([&] {
    const auto ctx = make_ctx(g.digits);
    const BigComplex w = parse_w(i_w, ctx);
    report.digits = g.digits;
    const SignRule rule = i_sign == "positive"   ? SignRule::positive
                          : i_sign == "negative" ? SignRule::negative
                                                 : SignRule::automatic;
    if (in_singular_strip(w, ctx)) report.warnings.push_back("w lies in the singular strip [j_1, 1]; principal branch unreliable");
    report.header = {"key", "value"};
    if (i_limit) {
      report.m = i_m;
      const BigComplex s = izeta_limit(w, i_m, rule, ctx);
      const BigReal e = abs(zeta(s, ctx) - w);
      report.value = {{"s", cli::complex_json(s, g.digits)}, {"residual", err_text(e)}, {"method", "limit"}};
      report.add_row({"s", cli::complex_text(s, g.digits)});
      report.add_row({"residual", err_text(e)});
      if (i_second) {
        // deflation needs s1 far beyond the target; Newton on zeta(s) = w
        const PrecisionContext hi = ctx.widened(ctx.digits());
        const BigComplex wh = w.to(hi);
        BigComplex s1 = s.to(hi);
        for (int it = 0; it < 200; ++it) {
          const PowerSeries z = zeta_series(s1, 1, hi);
          const BigComplex step = (z[0] - wh) / z[1];
          s1 -= step;
          if (abs(step) < ten_pow(-hi.working_digits(), hi)) break;
        }
        const BigComplex s2 = izeta_branch2(w, s1, i_m, SignRule::automatic, ctx);
        report.value["s2"] = cli::complex_json(s2, g.digits);
        report.add_row({"s2", cli::complex_text(s2, g.digits)});
      }
      return;
    }
    AttractorTable table;
    if (!i_table.empty()) {
      table = AttractorTable::load(find_table(i_table));
    } else if (i_m_opt->count() && i_m != 50) {
      report.warnings.push_back("generating attractor for m=" + std::to_string(i_m));
      table = attractor(i_m, ctx);
    } else {
      table = AttractorTable::load(find_table(kDefaultTable));
    }
    if (table.ctx.digits() < g.digits) {
      report.warnings.push_back("attractor table carries only " + std::to_string(table.ctx.digits()) + " digits");
    }
    report.m = table.m;
    const BranchResult b = izeta_product(w, table, i_threshold);
    const int d = std::min(g.digits, table.ctx.digits());
    report.value = {{"s", cli::complex_json(b.s, d)},
                    {"lambda", b.lambda},
                    {"residual", err_text(b.residual)},
                    {"ambiguous", b.ambiguous},
                    {"method", "product"}};
    report.add_row({"s", cli::complex_text(b.s, d)});
    report.add_row({"lambda", std::to_string(b.lambda)});
    report.add_row({"residual", err_text(b.residual)});
    if (b.ambiguous) report.warnings.push_back("more than one branch passed the threshold");
  });

  // attractor
  auto* att = app.add_subcommand("attractor", "Branch singularity attractor tables")->require_subcommand(1)->fallthrough();
  int a_m = 50;
  std::string a_out, a_file;
  auto* ag = att->add_subcommand("generate", "Compute j_n(m)")->fallthrough();
  ag->add_option("--m", a_m, "Even m >= 4")->check(CLI::PositiveNumber);
  ag->add_option("--out", a_out, "Output file");
  ag->callback([&] {
    const auto ctx = make_ctx(g.digits);
    const AttractorTable t = attractor(a_m, ctx);
    if (!a_out.empty()) t.save(a_out);
    report.digits = g.digits;
    report.m = a_m;
    report.header = {"n", "j_n"};
    nlohmann::json arr = nlohmann::json::array();
    for (size_t i = 0; i < t.roots.size(); ++i) {
      report.add_row({std::to_string(i + 1), cli::complex_text(t.roots[i], g.digits)});
      arr.push_back(cli::complex_json(t.roots[i], g.digits));
    }
    report.value = {{"roots", arr}};
    if (!a_out.empty()) report.value["file"] = a_out;
  });
  auto* av = att->add_subcommand("verify", "Identity checks on a table")->fallthrough();
  av->add_option("file", a_file, "Attractor file")->required();
  av->callback([&] {
    const AttractorTable t = AttractorTable::load(find_table(a_file));
    report.digits = t.ctx.digits();
    report.m = t.m;
    report.header = {"identity", "value", "digits", "required", "pass"};
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : identity_suite(t)) {
      const std::string v = format_decimal(c.value, 25);
      report.add_row({c.name, v, std::to_string(c.digits), std::to_string(c.required), c.pass ? "yes" : "no"});
      arr.push_back({{"name", c.name},
                     {"value", v},
                     {"target", format_decimal(c.target, 25)},
                     {"digits", c.digits},
                     {"required", c.required},
                     {"pass", c.pass}});
      if (!c.pass) {
        report.warnings.push_back(c.name + ": " + std::to_string(c.digits) + " digits, " +
                                  std::to_string(c.required) + " required");
        exit_code = kExitNumeric;
      }
    }
    report.value = arr;
  });

  // grid error
  auto* grid = app.add_subcommand("grid", "Error grids")->require_subcommand(1)->fallthrough();
  std::string g_range = "-2,2,-2,2", g_points = "21", g_table, g_out;
  double g_threshold = 1e-3;
  auto* ge = grid->add_subcommand("error", "log10 |zeta(s(w)) - w| over a rectangle")->fallthrough();
  ge->add_option("--range", g_range, "re_lo,re_hi,im_lo,im_hi");
  ge->add_option("--points", g_points, "N or NxM");
  ge->add_option("--table", g_table, "Attractor file (default: bundled m=50)");
  ge->add_option("--out", g_out, "CSV output file");
  ge->add_option("--threshold", g_threshold);
  ge->callback([&] {
    const auto r = split(g_range, ',');
    if (r.size() != 4) throw UsageError("--range needs re_lo,re_hi,im_lo,im_hi");
    int n_re = 0, n_im = 0;
    const auto x = g_points.find('x');
    try {
      n_re = std::stoi(g_points.substr(0, x));
      n_im = x == std::string::npos ? n_re : std::stoi(g_points.substr(x + 1));
    } catch (const std::exception&) {
      throw UsageError("--points must be N or NxM");
    }
    if (n_re < 1 || n_im < 1) throw UsageError("--points must be positive");
    const AttractorTable t = AttractorTable::load(find_table(g_table.empty() ? kDefaultTable : g_table));
    const auto pts = error_grid(std::stod(r[0]), std::stod(r[1]), std::stod(r[2]), std::stod(r[3]), n_re, n_im, t,
                                g.threads, g_threshold);
    const std::string csv = grid_to_csv(pts);
    if (!g_out.empty()) {
      std::ofstream out(g_out);
      if (!out) throw UsageError("cannot write " + g_out);
      out << csv;
    }
    report.digits = t.ctx.digits();
    report.m = t.m;
    int ok = 0;
    double worst = -1e300;
    for (const auto& p : pts) {
      if (p.ok) ++ok;
      if (!p.in_strip) worst = std::max(worst, p.log10_residual);
    }
    std::ostringstream ws;
    ws << worst;
    report.value = {{"points", pts.size()}, {"ok", ok}, {"worst_log10_residual_off_strip", ws.str()}};
    if (!g_out.empty()) report.value["file"] = g_out;
    report.header = {"key", "value"};
    report.add_row({"points", std::to_string(pts.size())});
    report.add_row({"ok", std::to_string(ok)});
    report.add_row({"worst_log10_residual_off_strip", ws.str()});
    if (ok < static_cast<int>(pts.size())) report.warnings.push_back("some points found no branch");
  });

  // constants
  auto* cons = app.add_subcommand("constants", "Stieltjes, eta and Keiper-Li constants")->require_subcommand(1)->fallthrough();
  int c_n = 5, c_k = 32;
  std::string c_method = "jet";
  auto constants_cmd = [&](const std::string& name, const std::vector<std::string>& methods) {
    auto* c = cons->add_subcommand(name)->fallthrough();
    c->add_option("--n", c_n, "Highest index")->check(CLI::NonNegativeNumber);
    if (!methods.empty()) {
      c->add_option("--method", c_method)->check(CLI::IsMember(methods));
      c->add_option("--k", c_k, "Determinant size (multiple of 4)");
    }
    return c;
  };
  auto list_report = [&](const std::vector<BigReal>& v, int first, const std::string& sym) {
    report.digits = g.digits;
    report.header = {"n", sym};
    nlohmann::json arr = nlohmann::json::array();
    for (size_t i = static_cast<size_t>(first); i < v.size(); ++i) {
      report.add_row({std::to_string(i), sig(v[i], g.digits)});
      arr.push_back(sig(v[i], g.digits));
    }
    report.value = arr;
  };
  constants_cmd("stieltjes", {"jet", "determinant"})->callback([&] {
    const auto ctx = make_ctx(g.digits);
    std::vector<BigReal> v;
    if (c_method == "determinant") {
      for (int n = 0; n <= c_n; ++n) v.push_back(stieltjes_determinant(n, c_k, ctx));
      report.warnings.push_back("determinant route converges slowly in k");
    } else {
      v = stieltjes_jet(c_n, ctx);
    }
    list_report(v, 0, "gamma_n");
  });
  constants_cmd("eta", {"jet", "coffey", "determinant"})->callback([&] {
    const auto ctx = make_ctx(g.digits);
    const EtaMethod m = c_method == "coffey" ? EtaMethod::coffey
                        : c_method == "determinant" ? EtaMethod::determinant
                                                    : EtaMethod::jet;
    if (m == EtaMethod::determinant) report.warnings.push_back("determinant route converges slowly in k");
    list_report(eta_constants(c_n, m, ctx, c_k), 0, "eta_n");
  });
  constants_cmd("keiper-li", {})->callback([&] {
    const auto ctx = make_ctx(g.digits);
    if (c_n < 1) throw UsageError("--n must be at least 1");
    list_report(keiper_li_all(c_n, ctx), 1, "lambda_n");
  });

  // invert
  auto* invert = app.add_subcommand("invert", "Principal inverse of elementary functions")->require_subcommand(1)->fallthrough();
  std::string v_w, v_coeffs, v_nu = "0", v_center;
  int v_m = 80;
  auto invert_cmd = [&](const std::string& name, InverseKind kind) {
    auto* c = invert->add_subcommand(name)->fallthrough();
    c->add_option("--w", v_w, "Target value re or re,im")->required();
    c->add_option("--m", v_m)->check(CLI::PositiveNumber);
    if (kind == InverseKind::poly) c->add_option("--coeffs", v_coeffs, "p(s) coefficients, lowest degree first, comma separated")->required();
    if (kind == InverseKind::besselj) c->add_option("--nu", v_nu, "Integer order");
    if (kind == InverseKind::gamma) c->add_option("--center", v_center, "Expansion point");
    c->callback([&, kind] {
      const auto ctx = make_ctx(g.digits);
      InverseRequest req;
      req.kind = kind;
      req.w = parse_w(v_w, ctx);
      req.m = v_m;
      req.nu = v_nu;
      req.center = v_center;
      req.coeffs = split(v_coeffs, ',');
      const BigComplex s = invert_function(req, ctx);
      report.digits = g.digits;
      report.m = v_m;
      report.value = cli::complex_json(s, g.digits);
      single(report, "s", cli::complex_text(s, g.digits));
    });
  };
  invert_cmd("gamma", InverseKind::gamma);
  invert_cmd("besselj", InverseKind::besselj);
  invert_cmd("cos", InverseKind::cos);
  invert_cmd("lambertw", InverseKind::lambertw);
  invert_cmd("poly", InverseKind::poly);

  // primes
  auto* primes = app.add_subcommand("primes", "Primes from zeta via Golomb's formula")->fallthrough();
  int p_count = 10;
  long p_s = 60;
  primes->add_option("--count", p_count)->check(CLI::PositiveNumber);
  primes->add_option("--s", p_s, "Exponent (larger is more robust)")->check(CLI::PositiveNumber);
  primes->callback([&] {
    const auto ctx = make_ctx(g.digits);
    const auto ps = golomb_primes(p_count, p_s, ctx);
    report.digits = g.digits;
    report.header = {"n", "p_n"};
    for (size_t i = 0; i < ps.size(); ++i) report.add_row({std::to_string(i + 1), std::to_string(ps[i])});
    report.value = ps;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  } catch (const Error& e) {
    nlohmann::json extra = nlohmann::json::object();
    if (const auto* d = dynamic_cast<const DominanceViolated*>(&e); d && !d->candidate_re().empty()) {
      extra["candidate"] = {{"re", d->candidate_re()}, {"im", d->candidate_im()}};
    }
    if (const auto* b = dynamic_cast<const BranchNotFound*>(&e)) {
      extra["best_lambda"] = b->best_lambda();
      extra["best_log10_residual"] = b->best_log10_residual();
    }
    cli::emit_error(e.kind(), e.what(), extra, g.fmt(), std::cout, std::cerr);
    return e.numeric() ? kExitNumeric : kExitUsage;
  } catch (const std::invalid_argument& e) {
    cli::emit_error("usage", e.what(), nlohmann::json::object(), g.fmt(), std::cout, std::cerr);
    return kExitUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    cli::emit_error("io", e.what(), nlohmann::json::object(), g.fmt(), std::cout, std::cerr);
    return kExitUsage;
  } catch (const std::exception& e) {
    cli::emit_error("internal", e.what(), nlohmann::json::object(), g.fmt(), std::cout, std::cerr);
    return kExitNumeric;
  }
  cli::emit(report, g.fmt(), std::cout);
  return exit_code;
}
