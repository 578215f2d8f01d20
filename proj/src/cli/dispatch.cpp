#include <algorithm>
#include <chrono>
#include <functional>

#include <omp.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "itercurves/bijection.hpp"
#include "itercurves/cli.hpp"
#include "itercurves/curves.hpp"
#include "itercurves/dynamics.hpp"
#include "itercurves/error.hpp"
#include "itercurves/galois.hpp"
#include "itercurves/polyjson.hpp"
#include "itercurves/search.hpp"
#include "itercurves/zeta.hpp"

#ifndef ITC_VERSION
#define ITC_VERSION "unknown"
#endif

namespace itc {

namespace {

using nlohmann::json;

json str_array(const std::vector<BigRat>& v) {
  auto a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

json str_array(const std::vector<BigInt>& v) {
  auto a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

std::string generator_name(unsigned j) { return j == 1 ? "-c" : "f^" + std::to_string(j) + "(0)"; }

// --family and its parameters, shared by curve, count, charpoly, runge, points
struct FamilyOpts {
  std::string family;
  std::string c = "0";
  unsigned n = 1;
  unsigned index = 0;
  std::string h, g;
  std::string twist;

  void attach(CLI::App* app) {
    app->add_option("--family", family, "C, B, B+, B-, frak, F, F1p, A or custom")->required();
    app->add_option("--c", c, "parameter c (integer or a/b)");
    app->add_option("--n", n, "iterate index");
    app->add_option("--index", index, "i for F_i");
    app->add_option("--poly", h, "polynomial as a JSON coefficient array, low to high (custom)");
    app->add_option("--cofactor", g, "cofactor g as a JSON coefficient array (A)");
    app->add_option("--twist", twist, "squarefree integer d of d y^2 = h");
  }

  HyperCurve build() const {
    const Limits& L = default_limits();
    auto curve = [&]() -> HyperCurve {
      if (family == "C") return curve_c(parse_rat(c), n, L);
      if (family == "B") return curve_b(parse_rat(c), n, L);
      if (family == "B+") return curve_b_sign(1, n, L);
      if (family == "B-") return curve_b_sign(-1, n, L);
      if (family == "frak") return curve_frak(n, L);
      if (family == "F") return curve_f(index);
      if (family == "F1p") return curve_f1_prime();
      if (family == "A") return curve_a(parse_poly(g), parse_rat(c), n, L);
      if (family == "custom") return curve_custom(parse_poly(h));
      fail(ErrorCode::InvalidArgument, "unknown family " + family);
    }();
    if (!twist.empty()) return itc::twist(curve, parse_int(twist));
    return curve;
  }

  static RatPoly parse_poly(const std::string& s) {
    require(!s.empty(), ErrorCode::InvalidArgument, "polynomial argument missing");
    json j = json::parse(s, nullptr, false);
    require(!j.is_discarded() && j.is_array(), ErrorCode::InvalidArgument, "polynomial must be a JSON array");
    return poly_from_json(j);
  }
};

std::string render(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + render(v[i]);
    return s + "]";
  }
  if (v.is_null()) return "-";
  return v.dump();
}

void print_text(std::ostream& out, const json& result) {
  if (!result.is_object()) {
    out << render(result) << '\n';
    return;
  }
  for (const auto& [k, v] : result.items()) out << k << ": " << render(v) << '\n';
}

json stage_json(const StageReport& r) {
  auto st = json::array();
  for (const auto& s : r.stages) {
    json e = {{"k", s.k}, {"status", std::string(to_string(s.status))}, {"certified", s.certified}};
    if (!s.witness.empty()) {
      auto w = json::array();
      for (unsigned j : s.witness) w.push_back(generator_name(j));
      e["witness"] = w;
    }
    st.push_back(e);
  }
  return {{"c", to_string(r.c)},
          {"n", r.n},
          {"stages", st},
          {"tree_order", to_string(r.tree_order)},
          {"index_lower_bound", to_string(r.index_lower_bound)}};
}

json charpoly_json(const CharPoly& cp) { return {{"coeffs", str_array(cp.ascending())}, {"text", cp.to_string()}}; }

json zeta_json(const HyperCurve& C, std::uint32_t p, const ZetaResult& z) {
  bool verified = z.hasse_weil && z.roots_ok && z.cp.functional_equation_holds() && z.self_check.value_or(true);
  json j = {{"curve", C.label()},
            {"p", p},
            {"counts", z.counts},
            {"charpoly", str_array(z.cp.ascending())},
            {"charpoly_text", z.cp.to_string()},
            {"order", to_string(jacobian_order(z.cp))},
            {"verified", verified}};
  j["self_check"] = z.self_check ? json(*z.self_check) : json(nullptr);
  return j;
}

json bijection_check(std::uint32_t p, unsigned r, unsigned n) {
  BnBijection bij(p, r, n);
  auto plus = bij.points(1), minus = bij.points(-1);
  bool on_curve = true, roundtrip = true;
  std::vector<FqPoint> image;
  image.reserve(plus.size());
  for (const auto& P : plus) {
    FqPoint Q = bij.forward(P);
    on_curve = on_curve && bij.on_curve(-1, Q);
    roundtrip = roundtrip && bij.backward(Q) == P;
    image.push_back(Q);
  }
  std::sort(image.begin(), image.end());
  bool bijective = image == minus;
  bool back_round = true;
  for (const auto& Q : minus) back_round = back_round && bij.forward(bij.backward(Q)) == Q;
  return {{"p", p},
          {"r", r},
          {"n", n},
          {"q", bij.base().q()},
          {"mode", bij.twist_mode() ? "twist" : "lift"},
          {"count_plus", plus.size()},
          {"count_minus", minus.size()},
          {"images_on_curve", on_curve},
          {"roundtrip", roundtrip && back_round},
          {"holds", plus.size() == minus.size() && on_curve && roundtrip && back_round && bijective}};
}

json charsum_check(unsigned n, std::uint32_t p, std::optional<unsigned> m) {
  HyperCurve C = curve_frak(n + 1);
  std::vector<unsigned> ms;
  if (m) {
    ms.push_back(*m);
  } else {
    for (unsigned k = 1; k < (1u << n); ++k) {
      BigInt q = pow(BigInt(static_cast<unsigned long>(p)), k);
      if (q > BigInt(static_cast<unsigned long>(default_limits().q_width))) break;
      ms.push_back(k);
    }
  }
  auto rows = json::array();
  bool all = true;
  for (unsigned k : ms) {
    std::uint64_t N = count_points(C, p, k);
    BigInt expect = pow(BigInt(static_cast<unsigned long>(p)), k) + 1;
    bool ok = BigInt(static_cast<unsigned long>(N)) == expect;
    bool claimed = k < (1u << n);
    all = all && (ok || !claimed);
    rows.push_back({{"m", k}, {"count", N}, {"expected", to_string(expect)}, {"equal", ok}, {"in_range", claimed}});
  }
  return {{"curve", C.label()}, {"p", p}, {"rows", rows}, {"holds", all}};
}

json mordell_json(const MordellScan& s) {
  auto rows = json::array();
  for (const auto& r : s.rows) {
    json e = {{"n", r.n}, {"bound_holds", r.bound_holds}};
    if (r.witness) {
      const auto& [d, y] = *r.witness;
      e["witness"] = {{"d", to_string(d)}, {"y", to_string(y)}, {"degenerate", r.degenerate}};
      WeierstrassPoint P = mordell_map(d, r.n, y);
      BigInt k = 2 * d;
      bool on = P.Y * P.Y == P.X * P.X * P.X - k * k * k;
      e["mordell_point"] = {{"X", to_string(P.X)}, {"Y", to_string(P.Y)}, {"on_curve", on}};
    } else {
      e["witness"] = nullptr;
    }
    rows.push_back(e);
  }
  return {{"c", "3"}, {"rows", rows}, {"passing", s.passing}, {"max_bound_n", s.max_bound_n}};
}

json points_json(const HyperCurve& C, const PointList& pl) {
  json j = pl.to_json();
  auto obs = json::array();
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u, 43u, 47u})
    if (local_obstruction(C, p)) obs.push_back(p);
  j["obstructions"] = obs;
  return j;
}

json error_json(const std::string& command, const MathError& e) {
  json j = {{"schema", kSchema}, {"command", command},
            {"error", {{"code", std::string(to_string(e.code()))}, {"message", e.what()}}}};
  if (auto* b = dynamic_cast<const BadReductionError*>(&e)) j["error"]["prime"] = b->prime();
  return j;
}

// echo of the inputs without flags that must not change the payload
json echo_inputs(const std::vector<std::string>& args) {
  auto a = json::array();
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--json" || args[i] == "--timing") continue;
    if (args[i] == "--threads") {
      ++i;
      continue;
    }
    if (args[i].rfind("--threads=", 0) == 0) continue;
    a.push_back(args[i]);
  }
  return a;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  default_limits() = Limits{};

  CLI::App app{"Exact computations on iterates of x^2 + c and the curves y^2 = f^n(x)", "itc"};
  app.require_subcommand(1);
  app.fallthrough();

  bool as_json = false, timing = false;
  int threads = 0;
  std::size_t degree_cap = default_limits().degree_cap;
  std::uint64_t q_width = default_limits().q_width;
  app.add_flag("--json", as_json, "emit a JSON report");
  app.add_flag("--timing", timing, "include wall time in the report");
  app.add_option("--threads", threads, "OpenMP threads (0 = runtime default)")->check(CLI::NonNegativeNumber);
  app.add_option("--degree-cap", degree_cap, "maximum polynomial degree")->check(CLI::PositiveNumber);
  app.add_option("--q-width", q_width, "maximum field size for point counts")->check(CLI::PositiveNumber);

  std::string command;
  std::function<json()> action;

  std::string c_str = "0";
  unsigned n = 1;
  std::uint32_t p = 0;
  unsigned m = 1;

  auto* orbit_cmd = app.add_subcommand("orbit", "critical orbit f^1(0) .. f^n(0)");
  orbit_cmd->add_option("--c", c_str)->required();
  orbit_cmd->add_option("--n", n)->required();
  orbit_cmd->callback([&] {
    command = "orbit";
    action = [&] {
      Orbit o = orbit(parse_rat(c_str), n);
      return json{{"c", to_string(o.c)}, {"n", n}, {"orbit", str_array(o.values)}};
    };
  });

  auto* stages_cmd = app.add_subcommand("stages", "square-class maximality per stage");
  stages_cmd->add_option("--c", c_str)->required();
  stages_cmd->add_option("--n", n)->required();
  stages_cmd->callback([&] {
    command = "stages";
    action = [&] { return stage_json(stage_status(parse_rat(c_str), n)); };
  });

  std::string int_bound, height_bound;
  auto* scan_cmd = app.add_subcommand("scan", "parameters whose first non-maximal stage is n");
  scan_cmd->add_option("--n", n)->required();
  auto* ib = scan_cmd->add_option("--int-bound", int_bound, "integers with |c| <= B");
  auto* hb = scan_cmd->add_option("--height", height_bound, "rationals of height <= H");
  ib->excludes(hb);
  scan_cmd->callback([&] {
    command = "scan";
    action = [&] {
      require(!int_bound.empty() || !height_bound.empty(), ErrorCode::InvalidArgument,
              "scan needs --int-bound or --height");
      ScanRange r;
      r.kind = int_bound.empty() ? ScanRange::Kind::Rationals : ScanRange::Kind::Integers;
      r.bound = parse_int(int_bound.empty() ? height_bound : int_bound);
      auto hits = scan_newly_small(n, r);
      return json{{"n", n},
                  {"range", r.kind == ScanRange::Kind::Integers ? "integers" : "rationals"},
                  {"bound", to_string(r.bound)},
                  {"newly_small", str_array(hits)}};
    };
  });

  FamilyOpts fam;
  auto* curve_cmd = app.add_subcommand("curve", "construct a curve");
  fam.attach(curve_cmd);
  curve_cmd->callback([&] {
    command = "curve";
    action = [&] { return fam.build().to_json(); };
  });

  auto* count_cmd = app.add_subcommand("count", "projective point count over F_{p^m}");
  fam.attach(count_cmd);
  count_cmd->add_option("--p", p)->required();
  count_cmd->add_option("--m", m);
  count_cmd->callback([&] {
    command = "count";
    action = [&] {
      HyperCurve C = fam.build();
      std::uint64_t N = count_points(C, p, m);
      BigInt q = pow(BigInt(static_cast<unsigned long>(p)), m);
      return json{{"curve", C.label()}, {"p", p}, {"m", m}, {"q", to_string(q)}, {"count", N},
                  {"hasse_weil", within_hasse_weil(N, q.get_ui(), C.genus())}};
    };
  });

  auto* cp_cmd = app.add_subcommand("charpoly", "Frobenius characteristic polynomial");
  fam.attach(cp_cmd);
  cp_cmd->add_option("--p", p)->required();
  cp_cmd->callback([&] {
    command = "charpoly";
    action = [&] {
      HyperCurve C = fam.build();
      return zeta_json(C, p, char_poly(C, p));
    };
  });

  auto* verify_cmd = app.add_subcommand("verify", "identity and theorem checks");
  verify_cmd->require_subcommand(1);

  auto* v_cheb = verify_cmd->add_subcommand("chebyshev", "charpoly of B_n equals t^(2^n) + p^(2^(n-1))");
  v_cheb->add_option("--n", n)->required();
  v_cheb->add_option("--p", p)->required();
  v_cheb->callback([&] {
    command = "verify chebyshev";
    action = [&] {
      ChebyshevCheck ch = verify_chebyshev(n, p);
      return json{{"n", n},
                  {"p", p},
                  {"holds", ch.holds},
                  {"in_theorem_range", ch.in_theorem_range},
                  {"charpoly", charpoly_json(ch.zeta.cp)},
                  {"target", charpoly_json(chebyshev_target(n, p))},
                  {"order", to_string(jacobian_order(ch.zeta.cp))}};
    };
  });

  auto* v_dec = verify_cmd->add_subcommand("decomp", "charpoly of C_n equals the product over B_m, m < n");
  v_dec->add_option("--c", c_str)->required();
  v_dec->add_option("--n", n)->required();
  v_dec->add_option("--p", p)->required();
  v_dec->callback([&] {
    command = "verify decomp";
    action = [&] {
      DecompositionCheck d = verify_decomposition(parse_rat(c_str), n, p);
      return json{{"c", c_str}, {"n", n}, {"p", p}, {"holds", d.holds},
                  {"lhs", charpoly_json(d.lhs)}, {"rhs", charpoly_json(d.rhs)}};
    };
  });

  unsigned r = 1;
  auto* v_bij = verify_cmd->add_subcommand("bijection", "#B_n^+(F_q) = #B_n^-(F_q) via explicit maps");
  v_bij->add_option("--p", p)->required();
  v_bij->add_option("--n", n)->required();
  v_bij->add_option("--r", r, "q = p^r");
  v_bij->callback([&] {
    command = "verify bijection";
    action = [&] { return bijection_check(p, r, n); };
  });

  std::optional<unsigned> m_opt;
  auto* v_cs = verify_cmd->add_subcommand("charsum", "#frakC_(n+1)(F_(p^m)) = p^m + 1 for m < 2^n");
  v_cs->add_option("--n", n)->required();
  v_cs->add_option("--p", p)->required();
  v_cs->add_option("--m", m_opt);
  v_cs->callback([&] {
    command = "verify charsum";
    action = [&] { return charsum_check(n, p, m_opt); };
  });

  unsigned K = 7;
  auto* v_ser = verify_cmd->add_subcommand("series", "dx/y expansion on F_1' and its integrals");
  v_ser->add_option("--order", K, "number of coefficients");
  v_ser->callback([&] {
    command = "verify series";
    action = [&] {
      HyperCurve C = curve_f1_prime();
      SeriesExpansion eta = sqrt_recip_series(C.h(), K);
      auto lam = json::array();
      for (unsigned i = 0; i < 3; ++i) lam.push_back(str_array(formal_integral(eta, i).coeffs));
      return json{{"curve", C.label()}, {"eta0", str_array(eta.coeffs)}, {"lambda", lam}};
    };
  });

  auto* v_cm = verify_cmd->add_subcommand("cm", "sqrt(-2) endomorphism of B_1");
  v_cm->callback([&] {
    command = "verify cm";
    action = [&] {
      CmCheck c = cm_map_identity();
      return json{{"printed_on_b1_minus", c.printed_on_b1_minus},
                  {"printed_on_b1", c.printed_on_b1},
                  {"conjugate_on_b1", c.conjugate_on_b1},
                  {"pole_at_minus_two", c.pole_at_minus_two},
                  {"f11_closed", c.f11_closed},
                  {"holds", c.holds()}};
    };
  });

  auto* v_disc = verify_cmd->add_subcommand("disc", "discriminant recurrence of f^m");
  v_disc->add_option("--c", c_str)->required();
  v_disc->add_option("--m", m)->required();
  v_disc->callback([&] {
    command = "verify disc";
    action = [&] {
      DiscRecurrence d = disc_recurrence_check(parse_rat(c_str), m);
      return json{{"c", c_str}, {"m", m}, {"sign", d.sign}, {"holds", d.holds},
                  {"disc", to_string(d.disc)}, {"predicted", to_string(d.predicted)}};
    };
  });

  auto* runge_cmd = app.add_subcommand("runge", "all integer points via Runge's method");
  fam.attach(runge_cmd);
  runge_cmd->callback([&] {
    command = "runge";
    action = [&] {
      HyperCurve C = fam.build();
      RungeResult R = runge_integer_points(C);
      return json{{"curve", C.label()},
                  {"g", to_json(R.g)},
                  {"h_rem", to_json(R.h_rem)},
                  {"scale", to_string(R.scale)},
                  {"x_bound", to_string(R.x_bound)},
                  {"points", R.points.to_json()}};
    };
  });

  std::string H = "10";
  auto* pts_cmd = app.add_subcommand("points", "rational points up to height H");
  fam.attach(pts_cmd);
  pts_cmd->add_option("--height", H);
  pts_cmd->callback([&] {
    command = "points";
    action = [&] {
      HyperCurve C = fam.build();
      return points_json(C, naive_search(C, parse_int(H)));
    };
  });

  std::vector<std::uint64_t> primes{5, 13};
  auto* gcd_cmd = app.add_subcommand("gcd-bound", "gcd of p^(2^n) + 1 over the given primes");
  gcd_cmd->add_option("--n", n)->required();
  gcd_cmd->add_option("--primes", primes)->delimiter(',');
  gcd_cmd->callback([&] {
    command = "gcd-bound";
    action = [&] {
      GcdBound g = gcd_orbit_bound(n, primes);
      return json{{"n", n}, {"primes", primes}, {"gcd", to_string(g.value)}, {"operand_bits", g.operand_bits}};
    };
  });

  auto* mord_cmd = app.add_subcommand("mordell-scan", "d y^2 = f^n(0) witnesses for c = 3");
  mord_cmd->callback([&] {
    command = "mordell-scan";
    action = [&] { return mordell_json(mordell_bound_scan()); };
  });

  std::string sH = "100";
  auto* s4_cmd = app.add_subcommand("s4-survey", "points on F_1 .. F_7 and the induced stage-4 candidates");
  s4_cmd->add_option("--height", sH);
  s4_cmd->callback([&] {
    command = "s4-survey";
    action = [&] { return s4_survey(parse_int(sH)).to_json(); };
  });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  default_limits().degree_cap = degree_cap;
  default_limits().q_width = q_width;
  if (threads > 0) omp_set_num_threads(threads);

  auto t0 = std::chrono::steady_clock::now();
  try {
    json result = action();
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (as_json) {
      json report = {{"schema", kSchema}, {"command", command}, {"inputs", echo_inputs(args)},
                     {"result", result}, {"version", ITC_VERSION}};
      if (timing) report["wall_ms"] = ms;
      out << report.dump(2) << '\n';
    } else {
      print_text(out, result);
      if (timing) out << "wall_ms: " << ms << '\n';
    }
    return kExitOk;
  } catch (const MathError& e) {
    if (as_json)
      out << error_json(command, e).dump(2) << '\n';
    else
      err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    return e.code() == ErrorCode::InvalidArgument ? kExitUsage : kExitMath;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace itc
