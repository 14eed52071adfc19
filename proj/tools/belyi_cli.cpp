#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "belyi/belyi_maps.hpp"
#include "belyi/elliptic.hpp"
#include "belyi/hypergeom.hpp"
#include "belyi/json_io.hpp"
#include "belyi/pell.hpp"
#include "belyi/surfaces.hpp"

namespace {

using namespace belyi;

constexpr int kExitResults = 0;   // clean run, at least one result
constexpr int kExitNoResults = 1; // clean run, zero results
constexpr int kExitUsage = 2;     // usage or domain error

struct OutputSink {
  std::string path;  // empty = stdout

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot open output file '" + path + "'");
    f << text;
  }
};

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

long thread_cap() {
  const char* env = std::getenv("BELYI_THREADS");
  if (!env) return 1;
  long n = std::strtol(env, nullptr, 10);
  return n >= 1 ? n : 1;
}

// ---------------------------------------------------------------------------
// Table rendering: maps in the factored style (1-5x)^2 (1+x)^20 (...)^5.

std::string table_coeff(const Scalar& s, bool* negate) {
  *negate = false;
  if (s.d == 0) {
    if (s.a < 0) {
      *negate = true;
      return to_string(Rat(-s.a));
    }
    return to_string(s.a);
  }
  return "(" + to_string(s) + ")";
}

std::string format_poly(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (long k = 0; k <= p.degree(); ++k) {
    Scalar c = p.coeff(k);
    if (c.is_zero()) continue;
    bool neg = false;
    std::string mag = table_coeff(c, &neg);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (k == 0) {
      out += mag;
    } else {
      if (mag != "1") out += mag;
      out += "x";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

std::string format_factor(const Poly& p, long e) {
  std::string out = "(" + format_poly(p) + ")";
  if (e != 1) out += "^" + std::to_string(e);
  return out;
}

Poly rescale_poly(const Poly& p, const Scalar& c) {
  std::vector<Scalar> out;
  Scalar ck(1);
  for (long k = 0; k <= p.degree(); ++k) {
    out.push_back(p.coeff(k) * ck);
    ck = ck * c;
  }
  return Poly(std::move(out));
}

// The x -> scale*x presentation of a map, rendered factor by factor.
std::string format_map_table(const BelyiMap& map, const Rat& scale) {
  Scalar c(scale);
  std::string out;
  if (const auto* tl = std::get_if<TwoLinear>(&map.form)) {
    out += format_factor(Poly{Scalar(1), -c}, tl->p);
    out += " " + format_factor(Poly{Scalar(1), -(tl->lambda * c)}, tl->q);
    out += " " + format_factor(rescale_poly(map.G, c), tl->r);
  } else {
    const auto& oq = std::get<OneQuadratic>(map.form);
    out += format_factor(Poly{Scalar(1), oq.alpha * c, oq.beta * c * c}, oq.p);
    out += " " + format_factor(rescale_poly(map.G, c), oq.r);
  }
  return out;
}

// ---------------------------------------------------------------------------
// enumerate

struct EnumeratedMap {
  BelyiMap map;
  BelyiCertificate cert;
};

// x -> x/lambda turns (p, q, lambda) into (q, p, 1/lambda); with p == q the
// two presentations describe the same map.
bool orbit_equivalent(const BelyiMap& A, const BelyiMap& B) {
  if (maps_equivalent(A, B)) return true;
  const auto* ta = std::get_if<TwoLinear>(&A.form);
  const auto* tb = std::get_if<TwoLinear>(&B.form);
  if (!ta || !tb || ta->p != ta->q) return false;
  if (tb->lambda.is_zero()) return false;
  BelyiMap swapped;
  TwoLinear tl = *tb;
  tl.lambda = inverse(tb->lambda);
  swapped.form = tl;
  swapped.G = rescale_poly(B.G, tl.lambda);
  return maps_equivalent(A, swapped);
}

int run_enumerate(const OutputSink& sink, const std::string& format,
                  const std::string& form, long p, long q, long r, long m,
                  bool rescale, const std::string& dedup) {
  (void)thread_cap();  // single-tuple enumeration stays sequential
  std::vector<EnumeratedMap> maps;
  DegeneracyReport report;
  Poly unresolved;

  auto keep = [&](BelyiMap&& map) {
    if (dedup == "orbit") {
      for (const auto& kept : maps)
        if (orbit_equivalent(kept.map, map)) return;
    }
    BelyiCertificate cert = certify(map);
    maps.push_back({std::move(map), std::move(cert)});
  };

  if (form == "two-linear") {
    Form11Solution sol = solve_form11(p, q, r, m);
    report = sol.report;
    unresolved = sol.unresolved;
    for (const auto& lambda : sol.roots) {
      try {
        keep(assemble_two_linear(p, q, r, m, lambda));
      } catch (const DegenerateRoot&) {
      }
    }
  } else {
    Form2Solution sol = solve_form2(p, r, m);
    report = sol.report;
    unresolved = sol.unresolved;
    for (const auto& z : sol.z_roots) {
      try {
        keep(assemble_one_quadratic(p, r, m, Scalar(1), z / Scalar(4)));
      } catch (const DegenerateRoot&) {
      }
    }
    if (sol.alpha_zero_map) {
      try {
        keep(assemble_one_quadratic(p, r, m, Scalar(0), Scalar(1)));
      } catch (const DegenerateRoot&) {
      }
    }
  }

  if (format == "table") {
    std::ostringstream out;
    out << "class: " << to_string(report.cls)
        << "  expected: " << report.expected_count
        << "  found: " << maps.size() << "\n";
    for (const auto& em : maps) {
      Rat scale(1);
      if (rescale && em.map.G.all_rational()) scale = canonical_rescale(em.map.G);
      out << format_map_table(em.map, scale) << "\n";
    }
    if (!unresolved.is_zero())
      out << "unresolved factor: " << format_poly(unresolved) << "\n";
    sink.write(out.str());
  } else {
    Json j;
    j["schema"] = 1;
    j["form"] = form;
    j["class"] = to_string(report.cls);
    j["expected_count"] = report.expected_count;
    j["count"] = maps.size();
    Json arr = Json::array();
    for (const auto& em : maps) {
      Json rec = map_to_json(em.map, em.cert);
      if (rescale && em.map.G.all_rational())
        rec["rescale"] = to_string(canonical_rescale(em.map.G));
      arr.push_back(std::move(rec));
    }
    j["maps"] = std::move(arr);
    if (!unresolved.is_zero()) j["unresolved"] = poly_to_json(unresolved);
    sink.write(dump(j));
  }
  return maps.empty() ? kExitNoResults : kExitResults;
}

// ---------------------------------------------------------------------------
// certify

Json read_json_input(const std::string& path) {
  try {
    if (path == "-") return Json::parse(std::cin);
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot open input file '" + path + "'");
    return Json::parse(f);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("input is not valid JSON: ") + e.what());
  }
}

int run_certify(const OutputSink& sink, const std::string& format,
                const std::string& input) {
  Json doc = read_json_input(input);
  long total = 0, valid = 0;
  std::ostringstream table;

  auto recertify = [&](const Json& rec) -> Json {
    BelyiMap map = map_from_json(rec);
    BelyiCertificate cert = certify(map);
    ++total;
    if (cert.valid) ++valid;
    if (format == "table")
      table << format_map_table(map, Rat(1)) << "  "
            << (cert.valid ? "valid" : "invalid: " + cert.reason) << "\n";
    Json out = rec;
    out["certificate"] = certificate_to_json(cert);
    return out;
  };

  if (doc.contains("maps")) {
    Json arr = Json::array();
    for (const auto& rec : doc.at("maps")) arr.push_back(recertify(rec));
    doc["maps"] = std::move(arr);
  } else {
    doc = recertify(doc);
  }

  sink.write(format == "table" ? table.str() : dump(doc));
  if (total == 0 || valid < total) return kExitNoResults;
  return kExitResults;
}

// ---------------------------------------------------------------------------
// surface

Scalar parse_scalar_arg(const std::string& s) { return Scalar(rat_from_string(s)); }

int run_surface_eval(const OutputSink& sink, long n, const std::string& b,
                     const std::string& c, const std::string& z) {
  Scalar res = n == 3
                   ? s3_residual(parse_scalar_arg(b), parse_scalar_arg(c),
                                 parse_scalar_arg(z))
                   : s4_residual(parse_scalar_arg(b), parse_scalar_arg(c),
                                 parse_scalar_arg(z));
  Json j;
  j["schema"] = 1;
  j["surface"] = n;
  j["residual"] = scalar_to_json(res);
  sink.write(dump(j));
  return kExitResults;
}

int run_surface_param(const OutputSink& sink, long n, const std::string& e,
                      const std::string& z, const std::string& t,
                      const std::string& y) {
  Json j;
  j["schema"] = 1;
  j["surface"] = n;
  if (n == 3) {
    S3ParamResult res = s3_param(parse_scalar_arg(e), parse_scalar_arg(z));
    if (res.point) {
      j["b"] = scalar_to_json(res.point->first);
      j["c"] = scalar_to_json(res.point->second);
    }
    if (res.line) {
      Json line;
      line["b_coef"] = to_string(res.line->b_coef);
      line["c_coef"] = to_string(res.line->c_coef);
      line["const"] = to_string(res.line->const_term);
      line["z"] = to_string(res.line->z_value);
      j["blowup_line"] = std::move(line);
    }
    j["both_positive"] = res.both_positive;
  } else {
    S4Point P = s4_param(parse_scalar_arg(t), parse_scalar_arg(y));
    j["b"] = scalar_to_json(P.b);
    j["c"] = scalar_to_json(P.c);
    j["z"] = scalar_to_json(P.z);
  }
  sink.write(dump(j));
  return kExitResults;
}

int run_surface_split(const OutputSink& sink, const std::string& t,
                      const std::string& y) {
  Scalar ts = parse_scalar_arg(t), ys = parse_scalar_arg(y);
  S3SplitResult res = s3_split_param(ts, ys);
  auto [e, s] = s3_chart_es(ts, ys);
  Json j;
  j["schema"] = 1;
  j["b"] = scalar_to_json(res.b);
  j["c"] = scalar_to_json(res.c);
  Json roots = Json::array();
  for (const auto& root : res.roots) roots.push_back(scalar_to_json(root));
  j["roots"] = std::move(roots);
  j["e"] = scalar_to_json(e);
  j["s"] = scalar_to_json(s);
  sink.write(dump(j));
  return kExitResults;
}

// ---------------------------------------------------------------------------
// ec

int run_ec_points(const OutputSink& sink, long m, long bound) {
  SpecializedCurve sc = specialize(m);
  sc.mw.bound = bound;
  std::vector<PointQ> pts = mw_enumerate(sc.mw);
  Json j;
  j["schema"] = 1;
  j["m"] = m;
  j["bound"] = bound;
  j["count"] = pts.size();
  Json arr = Json::array();
  for (const auto& P : pts) arr.push_back(point_to_json(P));
  j["points"] = std::move(arr);
  sink.write(dump(j));
  return pts.empty() ? kExitNoResults : kExitResults;
}

PointQ parse_point_arg(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos)
    throw ParseError("point must be given as u,v");
  return PointQ(rat_from_string(s.substr(0, comma)),
                rat_from_string(s.substr(comma + 1)));
}

int run_ec_map(const OutputSink& sink, long m, const std::string& point) {
  SpecializedCurve sc = specialize(m);
  PointQ P = parse_point_arg(point);
  if (!on_curve(sc.curve, P))
    throw NotOnCurve("point is not on the degree-" + std::to_string(m) +
                     " specialized curve");
  std::vector<std::pair<Scalar, Scalar>> images = sc.image(P);
  if (images.empty()) {
    sink.write(dump(Json::object()));
    return kExitNoResults;
  }
  if (images.size() == 1) {
    Json j;
    j["p_over_r"] = scalar_to_json(images[0].first);
    j["z"] = scalar_to_json(images[0].second);
    sink.write(dump(j));
    return kExitResults;
  }
  Json j;
  j["schema"] = 1;
  j["count"] = images.size();
  Json arr = Json::array();
  for (const auto& [pr, z] : images) {
    Json rec;
    rec["p_over_r"] = scalar_to_json(pr);
    rec["z"] = scalar_to_json(z);
    arr.push_back(std::move(rec));
  }
  j["images"] = std::move(arr);
  sink.write(dump(j));
  return kExitResults;
}

int run_ec_density(const OutputSink& sink, long m, double tolerance) {
  DensityReport rep = period_density(m, tolerance);
  Json j;
  j["schema"] = 1;
  j["approx"] = true;
  j["m"] = rep.m;
  j["rho"] = rep.rho;
  j["sub_integrals"] = rep.sub_integrals;
  j["odds_ratio"] = rep.odds_ratio;
  j["odds_ratio_infinite"] = rep.odds_ratio_infinite;
  sink.write(dump(j));
  return kExitResults;
}

// ---------------------------------------------------------------------------
// pell

int run_pell(const OutputSink& sink, long d, long n_max) {
  std::vector<PellCandidate> cands =
      d == 6 ? solve_pell6(n_max) : solve_pell10(n_max);
  Json j;
  j["schema"] = 1;
  j["d"] = d;
  j["count"] = cands.size();
  Json arr = Json::array();
  for (const auto& c : cands) arr.push_back(pell_candidate_to_json(c));
  j["candidates"] = std::move(arr);
  sink.write(dump(j));
  return cands.empty() ? kExitNoResults : kExitResults;
}

// ---------------------------------------------------------------------------
// hpg

int run_hpg_eval(const OutputSink& sink, long N, const std::string& b,
                 const std::string& c, const std::string& z) {
  HpgSpec spec{N, rat_from_string(b), rat_from_string(c)};
  Poly P = hpg_poly(spec);
  Json j;
  j["schema"] = 1;
  j["degree"] = P.degree();
  j["coefficients"] = poly_to_json(P);
  j["value"] = scalar_to_json(P.eval(parse_scalar_arg(z)));
  sink.write(dump(j));
  return kExitResults;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact enumeration and certification of hypergeometric Belyi maps"};
  app.require_subcommand(1);

  OutputSink sink;
  std::string format = "json";
  app.add_option("-o,--output", sink.path, "Write output to a file instead of stdout");
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "table"}));

  // enumerate
  std::string en_form;
  long en_p = 0, en_q = 0, en_r = 0, en_m = 0;
  bool en_rescale = false;
  std::string en_dedup;
  auto* enumerate = app.add_subcommand("enumerate", "Solve, assemble, and certify all maps for one exponent tuple")->fallthrough();
  enumerate->add_option("--form", en_form, "Map family")
      ->required()
      ->check(CLI::IsMember({"two-linear", "one-quadratic"}));
  enumerate->add_option("-p", en_p, "Exponent p")->required();
  enumerate->add_option("-q", en_q, "Exponent q (two-linear only)");
  enumerate->add_option("-r", en_r, "Exponent r")->required();
  enumerate->add_option("-m", en_m, "Companion degree m")->required();
  enumerate->add_flag("--rescale", en_rescale, "Report the x-rescaling that makes G integral primitive");
  enumerate->add_option("--dedup", en_dedup, "Drop orbit-equivalent presentations")
      ->check(CLI::IsMember({"orbit"}));

  // certify
  std::string ce_input;
  auto* certify_cmd = app.add_subcommand("certify", "Re-certify map records from a JSON file")->fallthrough();
  certify_cmd->add_option("--input", ce_input, "Map record or enumerate output ('-' for stdin)")
      ->required();

  // surface
  auto* surface = app.add_subcommand("surface", "Surface residuals and chart parametrizations")->fallthrough();
  surface->require_subcommand(1);
  long su_n = 3;
  std::string su_b, su_c, su_z, su_e, su_t, su_y;
  auto* surface_eval = surface->add_subcommand("eval", "Residual of the defining equation at (b, c, z)")->fallthrough();
  surface_eval->add_option("--n", su_n, "Surface degree parameter")
      ->required()->check(CLI::IsMember({3, 4}));
  surface_eval->add_option("--b", su_b)->required();
  surface_eval->add_option("--c", su_c)->required();
  surface_eval->add_option("--z", su_z)->required();
  auto* surface_param = surface->add_subcommand("param", "Chart point to surface point")->fallthrough();
  surface_param->add_option("--n", su_n, "Surface degree parameter")
      ->required()->check(CLI::IsMember({3, 4}));
  surface_param->add_option("--e", su_e, "Chart e (n = 3)");
  surface_param->add_option("--z", su_z, "Chart z (n = 3)");
  surface_param->add_option("--t", su_t, "Chart t (n = 4)");
  surface_param->add_option("--y", su_y, "Chart y (n = 4)");
  auto* surface_split = surface->add_subcommand("split", "Split-locus chart point, with all three roots")->fallthrough();
  surface_split->add_option("--t", su_t)->required();
  surface_split->add_option("--y", su_y)->required();

  // ec
  auto* ec = app.add_subcommand("ec", "Specialized elliptic curves: points, images, densities")->fallthrough();
  ec->require_subcommand(1);
  long ec_m = 5, ec_bound = 6;
  std::string ec_point;
  double ec_tol = 1e-8;
  auto* ec_points = ec->add_subcommand("points", "Enumerate Mordell-Weil combinations")->fallthrough();
  ec_points->add_option("--m", ec_m)->required()->check(CLI::IsMember({5, 6, 7, 8}));
  ec_points->add_option("--bound", ec_bound, "Coefficient bound on the free generators");
  auto* ec_map = ec->add_subcommand("map", "Image (p/r, z) of a curve point")->fallthrough();
  ec_map->add_option("--m", ec_m)->required()->check(CLI::IsMember({5, 6, 7, 8}));
  ec_map->add_option("--point", ec_point, "Point as u,v")->required();
  auto* ec_density = ec->add_subcommand("density", "Real-period integrals and odds ratios")->fallthrough();
  ec_density->add_option("--m", ec_m)->required()->check(CLI::IsMember({5, 6}));
  ec_density->add_option("--tol", ec_tol, "Quadrature tolerance");

  // pell
  long pe_d = 6, pe_nmax = 4;
  auto* pell = app.add_subcommand("pell", "Pell-equation candidate families")->fallthrough();
  pell->add_option("--d", pe_d)->required()->check(CLI::IsMember({6, 10}));
  pell->add_option("--n-max", pe_nmax, "Largest generator exponent")->required();

  // hpg
  long hp_n = 0;
  std::string hp_b, hp_c, hp_z;
  auto* hpg = app.add_subcommand("hpg", "Terminating Gauss series")->fallthrough();
  hpg->require_subcommand(1);
  auto* hpg_eval = hpg->add_subcommand("eval", "Evaluate F(-N, b; c; z)")->fallthrough();
  hpg_eval->add_option("-N", hp_n)->required();
  hpg_eval->add_option("--b", hp_b)->required();
  hpg_eval->add_option("--c", hp_c)->required();
  hpg_eval->add_option("--z", hp_z)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*enumerate) {
      if (en_form == "two-linear" && enumerate->count("-q") == 0)
        throw ParseError("two-linear form requires -q");
      return run_enumerate(sink, format, en_form, en_p, en_q, en_r, en_m,
                           en_rescale, en_dedup);
    }
    if (*certify_cmd) return run_certify(sink, format, ce_input);
    if (*surface_eval) return run_surface_eval(sink, su_n, su_b, su_c, su_z);
    if (*surface_param) {
      if (su_n == 3 && (su_e.empty() || su_z.empty()))
        throw ParseError("surface param --n 3 requires --e and --z");
      if (su_n == 4 && (su_t.empty() || su_y.empty()))
        throw ParseError("surface param --n 4 requires --t and --y");
      return run_surface_param(sink, su_n, su_e, su_z, su_t, su_y);
    }
    if (*surface_split) return run_surface_split(sink, su_t, su_y);
    if (*ec_points) return run_ec_points(sink, ec_m, ec_bound);
    if (*ec_map) return run_ec_map(sink, ec_m, ec_point);
    if (*ec_density) return run_ec_density(sink, ec_m, ec_tol);
    if (*pell) return run_pell(sink, pe_d, pe_nmax);
    if (*hpg_eval) return run_hpg_eval(sink, hp_n, hp_b, hp_c, hp_z);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
