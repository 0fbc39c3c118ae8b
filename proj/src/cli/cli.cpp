#include "merobound/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <omp.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "merobound/bounds.hpp"
#include "merobound/membership.hpp"
#include "merobound/search.hpp"
#include "merobound/series.hpp"
#include "merobound/verify.hpp"

namespace merobound::cli {

namespace {

using json = nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string format = "csv";
  std::string out_path;
  std::uint64_t seed = 0;
  std::size_t order = 8;
};

struct Result {
  std::string text;
  int code = kOk;
};

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    parts.emplace_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) return parts;
    start = pos + 1;
  }
}

Rational parse_decimal(std::string_view t) {
  std::string_view s = t;
  bool neg = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    neg = s[0] == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view es = s.substr(e + 1);
    if (!es.empty() && es[0] == '+') es.remove_prefix(1);
    const auto [p, ec] = std::from_chars(es.data(), es.data() + es.size(), exponent);
    if (ec != std::errc() || p != es.data() + es.size() || es.empty()) {
      throw UsageError("not a number: '" + std::string(t) + "'");
    }
    s = s.substr(0, e);
  }
  std::string digits;
  bool seen_dot = false, seen_digit = false;
  for (char c : s) {
    if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else if (c >= '0' && c <= '9') {
      digits += c;
      seen_digit = true;
      if (seen_dot) --exponent;
    } else {
      throw UsageError("not a number: '" + std::string(t) + "'");
    }
  }
  if (!seen_digit || std::labs(exponent) > 4096) {
    throw UsageError("not a number: '" + std::string(t) + "'");
  }
  mpz_class num(digits, 10);
  mpz_class den(1);
  mpz_class ten(10);
  mpz_class scale;
  mpz_pow_ui(scale.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(std::labs(exponent)));
  if (exponent >= 0) {
    num *= scale;
  } else {
    den = scale;
  }
  Rational r(neg ? mpz_class(-num) : num, den);
  r.canonicalize();
  return r;
}

std::vector<std::string> parse_list(const std::string& text) {
  std::vector<std::string> items;
  for (auto& s : split(text, ',')) {
    if (s.empty()) throw UsageError("empty entry in list '" + text + "'");
    items.push_back(std::move(s));
  }
  return items;
}

std::optional<int> thread_cap() {
  const char* env = std::getenv("MEROBOUND_THREADS");
  if (!env || !*env) return std::nullopt;
  int n = 0;
  const std::string_view s(env);
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
  if (ec != std::errc() || p != s.data() + s.size() || n < 1) {
    throw UsageError("MEROBOUND_THREADS must be a positive integer");
  }
  return n;
}

int worker_count() {
  const int avail = omp_get_max_threads();
  const auto cap = thread_cap();
  return cap ? std::min(*cap, avail) : avail;
}

ClassParams make_params(const std::string& variant, const std::string& a, const std::string& l,
                        const std::string& m) {
  ClassParams p{to_double(parse_number(a)), to_double(parse_number(l)), to_double(parse_number(m)),
                parse_variant(variant)};
  if (auto msg = domain_violation(p)) throw UsageError(*msg);
  return p;
}

// --- bounds -------------------------------------------------------------

struct BoundsArgs {
  std::string variant = "starlike";
  std::string alpha, lambda = "1", mu = "0";
};

Result cmd_bounds(const BoundsArgs& a, const Globals& g, std::ostream& err) {
  const Variant v = parse_variant(a.variant);
  const auto alphas = parse_grid(a.alpha);
  const auto lambdas = parse_grid(a.lambda);
  const auto mus = parse_grid(a.mu);
  std::ostringstream csv;
  json rows = json::array();
  csv << bounds_csv_header() << '\n';
  for (const auto& al : alphas) {
    for (const auto& la : lambdas) {
      for (const auto& m : mus) {
        const ExactClassParams p{al, la, m, v};
        if (auto msg = domain_violation(p)) {
          const ClassParams pd = to_double(p);
          std::ostringstream w;
          w << "skipped " << to_string(v) << " alpha=" << format_double(pd.alpha)
            << " lambda=" << format_double(pd.lambda) << " mu=" << format_double(pd.mu) << ": "
            << *msg;
          err << "warning: " << w.str() << '\n';
          csv << "# " << w.str() << '\n';
          json row = to_json(pd);
          row["skipped"] = true;
          row["reason"] = *msg;
          rows.push_back(row);
          continue;
        }
        const BoundPair b = bound_pair(p);
        csv << to_csv_row(b) << '\n';
        json row = to_json(b.params);
        row["b0_bound"] = b.b0_bound;
        row["b1_bound"] = b.b1_bound;
        rows.push_back(row);
      }
    }
  }
  if (g.format == "json") return {json{{"rows", rows}}.dump(2) + "\n"};
  return {csv.str()};
}

// --- verify -------------------------------------------------------------

struct VerifyArgs {
  std::size_t trials = 200;
  std::string variant = "all";
  std::string mutant;
};

Result cmd_verify(const VerifyArgs& a, const Globals& g, std::ostream& err) {
  if (a.trials < 1) throw UsageError("--trials must be >= 1");
  if (g.order < 2) throw UsageError("--order must be >= 2 for verify");
  std::vector<Variant> variants;
  if (a.variant == "all") {
    variants = {Variant::Starlike, Variant::StronglyStarlike};
  } else {
    variants = {parse_variant(a.variant)};
  }
  VerifyOptions opt;
  opt.order = g.order;
  if (!a.mutant.empty()) {
    bool known = false;
    for (Variant v : variants) {
      const auto names = identity_names(v);
      known = known || std::find(names.begin(), names.end(), a.mutant) != names.end();
    }
    if (!known) throw UsageError("unknown identity '" + a.mutant + "'");
  }

  std::ostringstream csv;
  csv << "variant,identity,passed,points,witness\n";
  json all = json::array();
  bool ok = true;
  for (Variant v : variants) {
    VerifyOptions o = opt;
    const auto names = identity_names(v);
    if (!a.mutant.empty() && std::find(names.begin(), names.end(), a.mutant) != names.end()) {
      o.mutant = a.mutant;
    }
    const auto s = verify_coefficient_equations(v, a.trials, g.seed, o);
    json checks = json::array();
    for (const auto& c : s.checks) {
      csv << to_string(v) << ',' << c.name << ',' << (c.passed ? "true" : "false") << ','
          << c.points << ',' << c.witness << '\n';
      checks.push_back({{"name", c.name}, {"passed", c.passed}, {"points", c.points},
                        {"witness", c.witness.empty() ? json() : json(c.witness)}});
      if (!c.passed) err << "identity " << c.name << " failed: " << c.witness << '\n';
    }
    ok = ok && s.all_passed();
    all.push_back({{"variant", std::string(to_string(v))}, {"trials", s.trials}, {"seed", s.seed},
                   {"order", s.order}, {"passed", s.all_passed()}, {"checks", checks}});
  }
  Result r;
  r.code = ok ? kOk : kVerificationFailure;
  r.text = g.format == "json" ? json{{"passed", ok}, {"variants", all}}.dump(2) + "\n" : csv.str();
  return r;
}

// --- invert -------------------------------------------------------------

struct InvertArgs {
  std::string mero, analytic;
};

std::string coefficient_text(const Rational& x) { return to_string(x); }
std::string coefficient_text(double x) { return format_double(x); }

template <class S>
Result emit_coefficients(std::span<const S> c, std::size_t first, const char* kind, bool exact,
                         const Globals& g) {
  std::ostringstream csv;
  csv << "index,coefficient\n";
  json arr = json::array();
  for (std::size_t i = 0; i < c.size(); ++i) {
    const std::string s = coefficient_text(c[i]);
    csv << first + i << ',' << s << '\n';
    arr.push_back(s);
  }
  if (g.format == "json") {
    return {json{{"kind", kind}, {"exact", exact}, {"first_index", first}, {"coefficients", arr}}
                .dump(2) +
            "\n"};
  }
  return {csv.str()};
}

template <class S>
Result invert_as(const std::vector<S>& c, bool mero, bool exact, const Globals& g) {
  if (mero) {
    const MeroSeries<S> inv = revert_mero(MeroSeries<S>(c));
    return emit_coefficients<S>(inv.b(), 0, "mero", exact, g);
  }
  const AnalyticSeries<S> inv = revert_analytic(AnalyticSeries<S>(c));
  return emit_coefficients<S>(inv.a(), 2, "analytic", exact, g);
}

// Real double scalar for float mode; the engine takes std::complex, so the
// imaginary parts are dropped on output (they stay zero).
std::vector<Complex> to_float(const std::vector<Rational>& q) {
  std::vector<Complex> v;
  for (const auto& x : q) v.emplace_back(to_double(x), 0.0);
  return v;
}

Result invert_float(const std::vector<Rational>& q, bool mero, const Globals& g) {
  const std::vector<Complex> c = to_float(q);
  std::vector<double> out;
  std::size_t first = 0;
  if (mero) {
    const MeroSeries<Complex> inv = revert_mero(MeroSeries<Complex>(c));
    for (const Complex& x : inv.b()) out.push_back(x.real());
  } else {
    first = 2;
    const AnalyticSeries<Complex> inv = revert_analytic(AnalyticSeries<Complex>(c));
    for (const Complex& x : inv.a()) out.push_back(x.real());
  }
  return emit_coefficients<double>(out, first, mero ? "mero" : "analytic", false, g);
}

Result cmd_invert(const InvertArgs& a, std::optional<std::size_t> order, const Globals& g) {
  if (a.mero.empty() == a.analytic.empty()) throw UsageError("give exactly one of --mero, --analytic");
  const bool mero = !a.mero.empty();
  const auto items = parse_list(mero ? a.mero : a.analytic);
  bool exact = true;
  std::vector<Rational> q;
  for (const auto& s : items) {
    exact = exact && is_exact_literal(s);
    q.push_back(parse_number(s));
  }
  // Mero lists are b_0..b_N, analytic lists a_2..a_N. An explicit --order
  // pads with zeros or truncates.
  if (order) {
    if (!mero && *order < 2) throw UsageError("--order must be >= 2 for analytic series");
    q.resize(mero ? *order + 1 : *order - 1, Rational(0));
  }
  if (exact) return invert_as<Rational>(q, mero, true, g);
  return invert_float(q, mero, g);
}

// --- member -------------------------------------------------------------

struct MemberArgs {
  std::string coeffs;
  std::string variant = "starlike";
  std::string alpha, lambda = "1", mu = "0";
  std::size_t angles = 720;
  std::optional<std::size_t> eval_order;
};

std::string report_csv_header() {
  return "is_member,min_margin,worst_re,worst_im,samples_used,heuristic,tail_estimate,"
         "univalence_checked";
}

std::string report_csv_row(const MembershipReport& r) {
  std::ostringstream o;
  o << (r.is_member ? "true" : "false") << ',' << format_double(r.min_margin) << ','
    << format_double(r.worst_point.real()) << ',' << format_double(r.worst_point.imag()) << ','
    << r.samples_used << ',' << (r.heuristic ? "true" : "false") << ','
    << format_double(r.tail_estimate) << ',' << (r.univalence_checked ? "true" : "false");
  return o.str();
}

Result cmd_member(const MemberArgs& a, const Globals& g) {
  const ClassParams p = make_params(a.variant, a.alpha, a.lambda, a.mu);
  std::vector<Complex> b;
  for (const auto& s : parse_list(a.coeffs)) b.emplace_back(to_double(parse_number(s)), 0.0);
  if (a.angles < 1) throw UsageError("--angles must be >= 1");
  MembershipGrid grid;
  grid.angles = a.angles;
  grid.eval_order = a.eval_order.value_or(g.order);
  const auto rep = membership_check(MeroSeries<Complex>(b), p, grid, Exec::Parallel, worker_count());
  if (g.format == "json") return {to_json(rep).dump(2) + "\n"};
  return {report_csv_header() + "\n" + report_csv_row(rep) + "\n"};
}

// --- search -------------------------------------------------------------

struct SearchArgs {
  std::string variant = "starlike";
  std::string alpha, lambda = "1", mu = "0";
  std::size_t budget = 10000;
  std::size_t refine_steps = 32;
  std::size_t atoms = 4;
  std::size_t eval_order = 24;
};

std::string search_csv_header() {
  return bounds_csv_header() +
         ",empirical_b0_max,empirical_b1_max,gap_b0,gap_b1,accepted_candidates,"
         "rejected_inconsistent,rejected_nonmember,seed,budget,falsified";
}

std::string search_csv_row(const BoundReport& r) {
  std::ostringstream o;
  o << to_csv_row(r.bounds);
  for (double x : {r.empirical_b0_max, r.empirical_b1_max, r.gap_b0, r.gap_b1}) o << ',' << format_double(x);
  o << ',' << r.accepted_candidates << ',' << r.rejected_inconsistent << ',' << r.rejected_nonmember
    << ',' << r.seed << ',' << r.budget << ',' << (r.falsified() ? "true" : "false");
  return o.str();
}

Result cmd_search(const SearchArgs& a, const Globals& g, std::ostream& err) {
  const ClassParams p = make_params(a.variant, a.alpha, a.lambda, a.mu);
  SearchConfig cfg;
  cfg.budget = a.budget;
  cfg.seed = g.seed;
  cfg.order = g.order;
  cfg.refine_steps = a.refine_steps;
  cfg.atoms = a.atoms;
  cfg.grid.eval_order = a.eval_order;
  cfg.threads = worker_count();
  if (auto msg = config_violation(cfg)) throw UsageError(*msg);
  const BoundReport r = search(p, cfg);
  Result res;
  if (r.falsified()) {
    const auto& w = *r.witness;
    err << "bound falsified: |" << w.bound << "| = " << format_double(w.value) << " > "
        << format_double(w.limit) << '\n';
    res.code = kFalsified;
  }
  // The CSV carries the summary only; the witness needs the JSON form.
  res.text = g.format == "json" ? to_json(r).dump(2) + "\n"
                                : search_csv_header() + "\n" + search_csv_row(r) + "\n";
  return res;
}

json manifest(const std::vector<std::string>& args, const std::string& sub, const Globals& g) {
  json m;
  m["tool"] = "merobound";
  m["subcommand"] = sub;
  m["argv"] = args;
  m["seed"] = g.seed;
  m["order"] = g.order;
  m["format"] = g.format;
  m["output"] = g.out_path.empty() ? json() : json(g.out_path);
  const char* env = std::getenv("MEROBOUND_THREADS");
  m["merobound_threads"] = env ? json(env) : json();
  return m;
}

}  // namespace

Rational parse_number(std::string_view text) {
  if (text.empty()) throw UsageError("empty number");
  if (is_exact_literal(text)) return parse_rational(text);
  if (text.find('/') != std::string_view::npos) throw UsageError("not a number: '" + std::string(text) + "'");
  return parse_decimal(text);
}

std::vector<Rational> parse_grid(std::string_view text) {
  std::vector<Rational> pts;
  for (const auto& item : parse_list(std::string(text))) {
    const auto parts = split(item, ':');
    if (parts.size() == 1) {
      pts.push_back(parse_number(parts[0]));
      continue;
    }
    if (parts.size() != 3) throw UsageError("grid ranges are a:b:step, got '" + item + "'");
    const Rational lo = parse_number(parts[0]), hi = parse_number(parts[1]),
                   step = parse_number(parts[2]);
    if (sgn(step) <= 0) throw UsageError("grid step must be positive in '" + item + "'");
    if (lo > hi) throw UsageError("grid range is empty in '" + item + "'");
    if ((hi - lo) / step > Rational(1000000)) throw UsageError("grid too large: '" + item + "'");
    for (Rational x = lo; x <= hi; x += step) pts.push_back(x);
  }
  return pts;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coefficient bounds for meromorphic bi-univalent classes"};
  app.name("merobound");
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", g.out_path, "Write results to PATH and the manifest to PATH.manifest.json");
  app.add_option("--seed", g.seed, "Master seed")->capture_default_str();
  auto* order_opt = app.add_option("--order", g.order, "Truncation order N")->capture_default_str();
  app.fallthrough();

  BoundsArgs ba;
  auto* bounds = app.add_subcommand("bounds", "Tabulate the |b0|, |b1| bounds over a grid");
  bounds->add_option("--variant", ba.variant)->check(CLI::IsMember({"starlike", "strongly-starlike"}));
  bounds->add_option("--alpha", ba.alpha, "Values or a:b:step ranges")->required();
  bounds->add_option("--lambda", ba.lambda)->capture_default_str();
  bounds->add_option("--mu", ba.mu)->capture_default_str();

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check the coefficient identities at random points");
  verify->add_option("--trials", va.trials)->capture_default_str();
  verify->add_option("--variant", va.variant)
      ->check(CLI::IsMember({"all", "starlike", "strongly-starlike"}))
      ->capture_default_str();
  verify->add_option("--mutant", va.mutant)->group("");

  InvertArgs ia;
  auto* invert = app.add_subcommand("invert", "Coefficients of the inverse series");
  invert->add_option("--mero", ia.mero, "b0,b1,...,bN");
  invert->add_option("--analytic", ia.analytic, "a2,a3,...,aN");

  MemberArgs ma;
  auto* member = app.add_subcommand("member", "Sample the class conditions for z + b0 + b1/z + ...");
  member->add_option("--coeffs", ma.coeffs, "b0,b1,...")->required();
  member->add_option("--variant", ma.variant)->check(CLI::IsMember({"starlike", "strongly-starlike"}));
  member->add_option("--alpha", ma.alpha)->required();
  member->add_option("--lambda", ma.lambda)->capture_default_str();
  member->add_option("--mu", ma.mu)->capture_default_str();
  member->add_option("--angles", ma.angles)->capture_default_str();
  member->add_option("--eval-order", ma.eval_order, "Padding order (default: --order)");

  SearchArgs sa;
  auto* srch = app.add_subcommand("search", "Randomized search for large |b0|, |b1|");
  srch->add_option("--variant", sa.variant)->check(CLI::IsMember({"starlike", "strongly-starlike"}));
  srch->add_option("--alpha", sa.alpha)->required();
  srch->add_option("--lambda", sa.lambda)->capture_default_str();
  srch->add_option("--mu", sa.mu)->capture_default_str();
  srch->add_option("--budget", sa.budget)->capture_default_str();
  srch->add_option("--refine-steps", sa.refine_steps)->capture_default_str();
  srch->add_option("--atoms", sa.atoms)->capture_default_str();
  srch->add_option("--eval-order", sa.eval_order)->capture_default_str();

  std::vector<std::string> rev(args.rbegin(), args.rend() - 1);
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const auto* sub = app.get_subcommands().front();
  Result res;
  try {
    if (sub == bounds) {
      res = cmd_bounds(ba, g, err);
    } else if (sub == verify) {
      res = cmd_verify(va, g, err);
    } else if (sub == invert) {
      std::optional<std::size_t> order;
      if (order_opt->count() > 0) order = g.order;
      res = cmd_invert(ia, order, g);
    } else if (sub == member) {
      res = cmd_member(ma, g);
    } else {
      res = cmd_search(sa, g, err);
    }
  } catch (const UsageError& e) {
    err << "merobound: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "merobound: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "merobound: " << e.what() << '\n';
    return kUsage;
  }

  const json m = manifest(std::vector<std::string>(args.begin() + 1, args.end()), sub->get_name(), g);
  if (g.out_path.empty()) {
    out << res.text;
    err << m.dump() << '\n';
  } else {
    std::ofstream f(g.out_path, std::ios::binary);
    std::ofstream mf(g.out_path + ".manifest.json", std::ios::binary);
    if (!f || !mf) {
      err << "merobound: cannot write " << g.out_path << '\n';
      return kUsage;
    }
    f << res.text;
    mf << m.dump(2) << '\n';
  }
  return res.code;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  return run(std::vector<std::string>(argv, argv + argc), out, err);
}

}  // namespace merobound::cli
