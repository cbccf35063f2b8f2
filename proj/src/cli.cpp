#include "hamw/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "hamw/bounds.hpp"
#include "hamw/cycles.hpp"
#include "hamw/euler_identity.hpp"
#include "hamw/extremal.hpp"
#include "hamw/parallel.hpp"
#include "hamw/pentagon_iteration.hpp"
#include "hamw/pointset_io.hpp"
#include "hamw/sequences.hpp"
#include "hamw/splitmix64.hpp"

namespace hamw::cli {

namespace {

using nlohmann::json;

struct Common {
  bool json = false;
  std::string mode;  // empty: as declared by the input, float for generated configs
  std::string out_path;
  std::string in_path;
  std::size_t threads = 1;
};

std::optional<ScalarMode> requested_mode(const Common& c) {
  if (c.mode.empty()) return std::nullopt;
  return parse_mode(c.mode);
}

AnyConfiguration load(const Common& c) {
  std::ifstream in(c.in_path);
  if (!in) throw UsageError("cannot open input file '" + c.in_path + "'");
  return read_point_set(in, requested_mode(c));
}

std::string decimal(double x) { return fmt::format("{:.12f}", x); }

json scalar_json(double x) { return x; }
json scalar_json(const Rational& x) { return format_scalar(x); }

std::string scalar_text(double x) { return decimal(x); }
std::string scalar_text(const Rational& x) { return format_scalar(x); }

// ---------------------------------------------------------------- gen

struct GenArgs {
  Common common;
  std::size_t n = 5;
  std::size_t dim = 2;
  std::uint64_t seed = 0;
  bool regular = false;
  double radius = 1.0;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  if (a.n < 3 || a.n > 10) throw UsageError("--n must be between 3 and 10");
  FloatConfiguration config = a.regular ? regular_polygon(a.n, a.radius) : random_config(a.seed, a.n, a.dim);
  AnyConfiguration any = config;
  if (requested_mode(a.common).value_or(ScalarMode::Float) == ScalarMode::Rational) any = to_exact(config);
  if (a.common.json) {
    std::visit(
        [&out](const auto& c) {
          json points = json::array();
          for (const auto& p : c.points()) {
            json row = json::array();
            for (const auto& x : p.coords()) row.push_back(scalar_json(x));
            points.push_back(row);
          }
          out << json{{"n", c.size()}, {"dim", c.dim()}, {"mode", mode_name(c.mode())}, {"points", points}}.dump()
              << '\n';
        },
        any);
  } else {
    write_point_set(out, any);
  }
  return kOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  Common common;
  std::size_t n = 5;
  std::size_t dim = 2;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  double tol = kDefaultBoundTolerance;
  bool all_rows = false;
};

template <Scalar S>
json row_json(std::size_t config_id, const BoundRow<S>& row) {
  return json{{"config_id", config_id},
              {"cycle", row.cycle.to_string()},
              {"wE", scalar_json(row.w_cycle)},
              {"wD", scalar_json(row.w_complement)},
              {"wK", scalar_json(row.w_total)},
              {"ratio", row.ratio},
              {"verdict", verdict_name(row.verdict)}};
}

template <Scalar S>
void row_text(std::ostream& out, std::size_t config_id, const BoundRow<S>& row) {
  out << fmt::format("{:>6}  {:<12} {:>16} {:>16} {:>16} {:>14}  {}\n", config_id, row.cycle.to_string(),
                     scalar_text(row.w_cycle), scalar_text(row.w_complement), scalar_text(row.w_total),
                     decimal(row.ratio), verdict_name(row.verdict));
}

void table_header(std::ostream& out) {
  out << fmt::format("{:>6}  {:<12} {:>16} {:>16} {:>16} {:>14}  {}\n", "config", "cycle", "w(E)", "w(D)", "w(K)",
                     "ratio", "verdict");
}

int exit_for(std::size_t violations, std::size_t degenerate) {
  if (violations > 0) return kViolation;
  if (degenerate > 0) return kDegenerate;
  return kOk;
}

template <Scalar S>
int verify_config(const VerifyArgs& a, const Configuration<S>& c, std::ostream& out) {
  if (c.size() != 4 && c.size() != 5) throw UsageError("verify supports K_4 and K_5 inputs only");
  if (is_zero(total_weight(c))) {
    if (a.common.json)
      out << json{{"config_id", 0}, {"verdict", "degenerate"}, {"reason", "all points coincide"}}.dump() << '\n';
    else
      out << "degenerate: all points coincide\n";
    return kDegenerate;
  }
  const auto report = c.size() == 4 ? check_theorem1(c, a.tol) : check_theorem2(c, a.tol);
  std::optional<DualityReport> duality;
  if (c.size() == 5) duality = duality_check(c, a.tol);
  const bool duality_ok = !duality || duality->holds(is_exact<S> ? 0.0 : kArithmeticTolerance);

  if (a.common.json) {
    for (const auto& row : report.rows) out << row_json(0, row).dump() << '\n';
    if (duality)
      out << json{{"duality",
                   {{"pairs", duality->pairs_checked},
                    {"max_sum_residual", duality->max_sum_residual},
                    {"extremes_paired", duality->extremes_paired},
                    {"holds", duality_ok}}}}
                 .dump()
          << '\n';
  } else {
    table_header(out);
    for (const auto& row : report.rows) row_text(out, 0, row);
    out << fmt::format("violations {}  degenerate {}  equalities {}\n", report.violations, report.degenerate,
                       report.equalities);
    if (duality)
      out << fmt::format("duality: max |ratio(E)+ratio(D)-1| = {:.3e}, extremes paired: {}  -> {}\n",
                         duality->max_sum_residual, duality->extremes_paired ? "yes" : "no",
                         duality_ok ? "holds" : "violated");
  }
  return exit_for(report.violations + (duality_ok ? 0 : 1), report.degenerate);
}

template <Scalar S>
int verify_fuzz(const VerifyArgs& a, std::ostream& out) {
  FuzzOptions o;
  o.seed = a.seed;
  o.trials = a.trials;
  o.n = a.n;
  o.dim = a.dim;
  o.tolerance = a.tol;
  o.threads = a.common.threads;
  o.keep_all_rows = a.all_rows;
  const auto report = fuzz<S>(o);
  if (a.common.json) {
    for (const auto& r : report.rows) out << row_json(r.config_id, r.row).dump() << '\n';
    out << json{{"summary",
                 {{"n", a.n},
                  {"dim", a.dim},
                  {"mode", mode_name(mode_of<S>)},
                  {"seed", a.seed},
                  {"trials", report.trials},
                  {"rows", report.rows_checked},
                  {"violations", report.violations},
                  {"degenerate", report.degenerate},
                  {"equalities", report.equalities},
                  {"min_ratio", report.min_ratio},
                  {"max_ratio", report.max_ratio}}}}
               .dump()
        << '\n';
  } else {
    if (!report.rows.empty()) {
      table_header(out);
      for (const auto& r : report.rows) row_text(out, r.config_id, r.row);
    }
    out << fmt::format("K_{} dim {} mode {} seed {}: {} trials, {} rows\n", a.n, a.dim, mode_name(mode_of<S>), a.seed,
                       report.trials, report.rows_checked);
    out << fmt::format("violations {}  degenerate {}  equalities {}\n", report.violations, report.degenerate,
                       report.equalities);
    out << fmt::format("ratio range [{}, {}]\n", decimal(report.min_ratio), decimal(report.max_ratio));
    if (a.n == 5)
      out << fmt::format("proven range [{}, {}]\n", decimal(theorem2_lower()), decimal(theorem2_upper()));
    else
      out << "proven range [0.5, 1)\n";
  }
  return exit_for(report.violations, report.degenerate);
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  if (!(a.tol > 0.0)) throw UsageError("--tol must be positive");
  if (!a.common.in_path.empty()) {
    if (a.trials > 0) throw UsageError("--in and --fuzz/--trials are mutually exclusive");
    return std::visit([&](const auto& c) { return verify_config(a, c, out); }, load(a.common));
  }
  if (a.trials == 0) throw UsageError("verify needs --in <file> or --fuzz <trials>");
  if (a.n != 4 && a.n != 5) throw UsageError("verify supports --n 4 or --n 5");
  if (requested_mode(a.common).value_or(ScalarMode::Float) == ScalarMode::Rational) return verify_fuzz<Rational>(a, out);
  return verify_fuzz<double>(a, out);
}

// ---------------------------------------------------------------- identity

struct IdentityArgs {
  Common common;
  std::size_t dim = 2;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  double tol = kDerivedTolerance;
  int pairing = -1;
};

template <Scalar S>
std::array<Point<S>, 4> four_points(const Configuration<S>& c) {
  if (c.size() != 4) throw UsageError("identity needs exactly 4 points");
  return {c[0], c[1], c[2], c[3]};
}

template <Scalar S>
struct QuadCheck {
  IdentityReport<S> report;
  double relations = 0.0;  // largest normalized parallelogram/midsegment residual
  bool relations_exact = true;
};

template <Scalar S>
QuadCheck<S> check_quad(const QuadLabeling<S>& quad, double tol) {
  QuadCheck<S> out{verify_identity(quad, tol)};
  const double scale = to_double(out.report.terms.rhs) + to_double(out.report.terms.lhs);
  const auto note = [&](const S& r) {
    if (!is_zero(r)) out.relations_exact = false;
    out.relations = std::max(out.relations, normalized_residual(to_double(r), scale));
  };
  for (const auto& r : midpoint_parallelogram_relations(quad)) note(r);
  const auto mids = midsegment_relations(quad);
  for (const auto& r : mids.primary) note(r);
  for (const auto& r : mids.mirrored) note(r);
  return out;
}

template <Scalar S>
bool quad_ok(const QuadCheck<S>& q, double tol) {
  if (!holds(q.report.verdict)) return false;
  return is_exact<S> ? q.relations_exact : q.relations <= tol;
}

template <Scalar S>
json identity_json(std::size_t config_id, int pairing, const QuadCheck<S>& q, double tol) {
  const auto& t = q.report.terms;
  json l2 = json::array();
  for (const auto& x : t.l2) l2.push_back(scalar_json(x));
  return json{{"config_id", config_id},
              {"pairing", pairing},
              {"l2", l2},
              {"four_r2", scalar_json(S{4} * t.r2)},
              {"lhs", scalar_json(t.lhs)},
              {"rhs", scalar_json(t.rhs)},
              {"residual", scalar_json(t.residual)},
              {"relations_residual", q.relations},
              {"verdict", quad_ok(q, tol) ? "holds" : "violated"}};
}

template <Scalar S>
void identity_text(std::ostream& out, std::size_t config_id, int pairing, const QuadCheck<S>& q, double tol) {
  const auto& t = q.report.terms;
  std::string row = fmt::format("{:>6} {:>7}", config_id, pairing);
  for (const auto& x : t.l2) row += fmt::format(" {:>14}", scalar_text(x));
  row += fmt::format(" {:>14} {:>14} {:>14} {:>14}  {}\n", scalar_text(S{4} * t.r2), scalar_text(t.lhs),
                     scalar_text(t.rhs), scalar_text(t.residual), quad_ok(q, tol) ? "holds" : "violated");
  out << row;
}

void identity_header(std::ostream& out) {
  out << fmt::format("{:>6} {:>7} {:>14} {:>14} {:>14} {:>14} {:>14} {:>14} {:>14} {:>14} {:>14} {:>14}  {}\n",
                     "config", "pairing", "l1^2", "l2^2", "l3^2", "l4^2", "l5^2", "l6^2", "4r^2", "lhs", "rhs",
                     "residual", "verdict");
}

std::vector<int> pairings_of(int requested) {
  if (requested < 0) return {0, 1, 2};
  if (requested > 2) throw UsageError("--pairing must be 0, 1 or 2");
  return {requested};
}

template <Scalar S>
int identity_config(const IdentityArgs& a, const Configuration<S>& c, std::ostream& out) {
  const auto pts = four_points(c);
  std::size_t failures = 0;
  if (!a.common.json) identity_header(out);
  for (int pairing : pairings_of(a.pairing)) {
    const auto q = check_quad(QuadLabeling<S>(pts, pairing), a.tol);
    if (!quad_ok(q, a.tol)) ++failures;
    if (a.common.json)
      out << identity_json(0, pairing, q, a.tol).dump() << '\n';
    else
      identity_text(out, 0, pairing, q, a.tol);
  }
  return failures ? kViolation : kOk;
}

template <Scalar S>
int identity_fuzz(const IdentityArgs& a, std::ostream& out) {
  const auto pairings = pairings_of(a.pairing);
  struct Slot {
    double worst_identity = 0.0;
    double worst_relations = 0.0;
    std::vector<std::pair<int, QuadCheck<S>>> failures;
  };
  std::vector<Slot> slots(a.trials);
  parallel_for(a.trials, a.common.threads, [&](std::size_t i) {
    const auto cfg = random_config(derive_seed(a.seed, i), 4, a.dim);
    std::array<Point<S>, 4> pts;
    if constexpr (is_exact<S>)
      pts = four_points(to_exact(cfg));
    else
      pts = four_points(cfg);
    for (int pairing : pairings) {
      auto q = check_quad(QuadLabeling<S>(pts, pairing), a.tol);
      slots[i].worst_identity = std::max(slots[i].worst_identity, q.report.normalized_residual);
      slots[i].worst_relations = std::max(slots[i].worst_relations, q.relations);
      if (!quad_ok(q, a.tol)) slots[i].failures.emplace_back(pairing, std::move(q));
    }
  });

  double worst_identity = 0.0;
  double worst_relations = 0.0;
  std::size_t failures = 0;
  if (!a.common.json) identity_header(out);
  for (std::size_t i = 0; i < slots.size(); ++i) {
    worst_identity = std::max(worst_identity, slots[i].worst_identity);
    worst_relations = std::max(worst_relations, slots[i].worst_relations);
    for (const auto& [pairing, q] : slots[i].failures) {
      ++failures;
      if (a.common.json)
        out << identity_json(i, pairing, q, a.tol).dump() << '\n';
      else
        identity_text(out, i, pairing, q, a.tol);
    }
  }
  const std::size_t checks = a.trials * pairings.size();
  if (a.common.json) {
    out << json{{"summary",
                 {{"dim", a.dim},
                  {"mode", mode_name(mode_of<S>)},
                  {"seed", a.seed},
                  {"trials", a.trials},
                  {"checks", checks},
                  {"failures", failures},
                  {"max_identity_residual", worst_identity},
                  {"max_relations_residual", worst_relations}}}}
               .dump()
        << '\n';
  } else {
    out << fmt::format("dim {} mode {} seed {}: {} quads, {} labeled checks, {} failures\n", a.dim,
                       mode_name(mode_of<S>), a.seed, a.trials, checks, failures);
    out << fmt::format("max normalized residual: identity {:.3e}, midpoint relations {:.3e}\n", worst_identity,
                       worst_relations);
  }
  return failures ? kViolation : kOk;
}

int cmd_identity(const IdentityArgs& a, std::ostream& out) {
  if (!(a.tol > 0.0)) throw UsageError("--tol must be positive");
  if (!a.common.in_path.empty()) {
    if (a.trials > 0) throw UsageError("--in and --fuzz/--trials are mutually exclusive");
    return std::visit([&](const auto& c) { return identity_config(a, c, out); }, load(a.common));
  }
  if (a.trials == 0) throw UsageError("identity needs --in <file> or --fuzz <trials>");
  if (requested_mode(a.common).value_or(ScalarMode::Float) == ScalarMode::Rational)
    return identity_fuzz<Rational>(a, out);
  return identity_fuzz<double>(a, out);
}

// ---------------------------------------------------------------- iterate

struct IterateArgs {
  Common common;
  std::size_t dim = 2;
  std::uint64_t seed = 0;
  std::string cycle = "0,1,2,3,4";
  std::size_t steps = 30;
  double tol = kDerivedTolerance;
  bool decompose = false;
};

template <Scalar S>
int iterate_config(const IterateArgs& a, const Configuration<S>& c, std::ostream& out) {
  const Cycle e_cycle = Cycle::parse(a.cycle);
  if (a.decompose) {
    const auto dec = five_tetrahedra_decomposition(c, e_cycle);
    bool ok = true;
    const auto check = [&](const S& r) {
      if constexpr (is_exact<S>)
        ok = ok && is_zero(r);
      else
        ok = ok && normalized_residual(r, to_double(dec.terms[0].rhs)) <= a.tol;
    };
    if (a.common.json) {
      for (std::size_t i = 0; i < 5; ++i) {
        const auto& t = dec.terms[i];
        out << json{{"quad", i}, {"four_r2", scalar_json(S{4} * t.r2)}, {"lhs", scalar_json(t.lhs)},
                    {"rhs", scalar_json(t.rhs)}, {"residual", scalar_json(t.residual)}}
                   .dump()
            << '\n';
      }
    } else {
      out << "quad,four_r2,lhs,rhs,residual\n";
      for (std::size_t i = 0; i < 5; ++i) {
        const auto& t = dec.terms[i];
        out << fmt::format("{},{},{},{},{}\n", i, scalar_text(S{4} * t.r2), scalar_text(t.lhs), scalar_text(t.rhs),
                           scalar_text(t.residual));
      }
    }
    for (const auto& t : dec.terms) check(t.residual);
    check(dec.four_r2_minus_4e2);
    check(dec.diagonals_minus_2d1);
    check(dec.cycles_minus_3e1_d1);
    check(dec.core_residual);
    if (a.common.json)
      out << json{{"core_residual", scalar_json(dec.core_residual)}, {"holds", ok}}.dump() << '\n';
    else
      out << fmt::format("# d1 + 4 e2 - 3 e1 = {} ({})\n", scalar_text(dec.core_residual), ok ? "holds" : "violated");
    return ok ? kOk : kViolation;
  }

  const auto t = trace(c, e_cycle, a.steps);
  const auto cell = [](const std::vector<S>& v, std::size_t i) -> std::string {
    return i < v.size() ? format_scalar(v[i]) : std::string();
  };
  const auto cell_json = [](const std::vector<S>& v, std::size_t i) -> json {
    return i < v.size() ? scalar_json(v[i]) : json(nullptr);
  };
  if (!a.common.json) out << "level,d,e,resA,resB,resC\n";
  for (std::size_t i = 0; i < t.states.size(); ++i) {
    const auto& s = t.states[i];
    if (a.common.json)
      out << json{{"level", s.level},
                  {"d", scalar_json(s.d)},
                  {"e", scalar_json(s.e)},
                  {"resA", cell_json(t.residual_a, i)},
                  {"resB", cell_json(t.residual_b, i)},
                  {"resC", cell_json(t.residual_c, i)}}
                 .dump()
          << '\n';
    else
      out << fmt::format("{},{},{},{},{},{}\n", s.level, format_scalar(s.d), format_scalar(s.e),
                         cell(t.residual_a, i), cell(t.residual_b, i), cell(t.residual_c, i));
  }
  const bool ok = is_exact<S> ? t.all_residuals_zero() : t.max_relative_residual() <= a.tol;
  return ok ? kOk : kViolation;
}

int cmd_iterate(const IterateArgs& a, std::ostream& out) {
  if (!(a.tol > 0.0)) throw UsageError("--tol must be positive");
  AnyConfiguration config = a.common.in_path.empty() ? AnyConfiguration(random_config(a.seed, 5, a.dim)) : load(a.common);
  if (a.common.in_path.empty() && requested_mode(a.common) == ScalarMode::Rational)
    config = to_exact(std::get<FloatConfiguration>(config));
  return std::visit([&](const auto& c) { return iterate_config(a, c, out); }, config);
}

// ---------------------------------------------------------------- sequence

struct SequenceArgs {
  Common common;
  std::size_t terms = 10;
  bool check = false;
};

int cmd_sequence(const SequenceArgs& a, std::ostream& out) {
  if (a.terms < 2) throw UsageError("--terms must be at least 2");
  if (requested_mode(a.common) == ScalarMode::Float)
    throw UsageError("sequence terms are always exact; --mode float is not supported");
  const SequenceTable table(a.terms + 1);
  if (!a.common.json) out << "n,a_n,a_ratio,B_exact,B_decimal\n";
  for (std::size_t n = 0; n <= a.terms; ++n) {
    const std::string ratio = n >= 1 ? decimal(to_double(table.ratio(n))) : std::string();
    const std::string b_exact = n >= 2 ? format_scalar(table.bound(n)) : std::string();
    const std::string b_decimal = n >= 2 ? decimal(to_double(table.bound(n))) : std::string();
    if (a.common.json) {
      json row{{"n", n}, {"a_n", format_scalar(table.a(n))}};
      row["a_ratio"] = n >= 1 ? json(to_double(table.ratio(n))) : json(nullptr);
      row["B_exact"] = n >= 2 ? json(b_exact) : json(nullptr);
      row["B_decimal"] = n >= 2 ? json(to_double(table.bound(n))) : json(nullptr);
      out << row.dump() << '\n';
    } else {
      out << fmt::format("{},{},{},{},{}\n", n, format_scalar(table.a(n)), ratio, b_exact, b_decimal);
    }
  }
  if (!a.check) return kOk;
  const auto report = lemma1_checks(std::max<std::size_t>(a.terms, 3));
  if (a.common.json) {
    out << json{{"lemma1",
                 {{"through", report.checked_through},
                  {"positive_and_decreasing", report.positive_and_decreasing},
                  {"ratio_above_limit", report.ratio_above_limit},
                  {"ratio_non_increasing", report.ratio_non_increasing},
                  {"limit_gap", report.limit_gap}}}}
               .dump()
        << '\n';
  } else {
    out << fmt::format("# lemma checks through n = {}: positive/decreasing {}, ratio above (3+sqrt5)/8 {}, "
                       "ratio non-increasing {}, |ratio - limit| = {:.3e}\n",
                       report.checked_through, report.positive_and_decreasing ? "yes" : "no",
                       report.ratio_above_limit ? "yes" : "no", report.ratio_non_increasing ? "yes" : "no",
                       report.limit_gap);
  }
  return report.all_hold() ? kOk : kViolation;
}

// ---------------------------------------------------------------- optimize

struct OptimizeArgs {
  Common common;
  std::size_t n = 5;
  std::size_t dim = 2;
  std::uint64_t seed = 0;
  std::string objective = "maximize";
  std::size_t restarts = 20;
  std::size_t budget = 500;
  bool table = false;
  std::size_t n_min = 4;
  std::size_t n_max = 7;
};

json bound_json(const std::optional<ProvenBound>& b) {
  if (!b) return nullptr;
  return json{{"lower", b->lower}, {"upper", b->upper}, {"upper_attained", b->upper_attained}};
}

json result_json(const OptimizeOptions& o, const OptimizationResult& r) {
  json points = json::array();
  for (const auto& p : r.best.points()) {
    json row = json::array();
    for (double x : p.coords()) row.push_back(x);
    points.push_back(row);
  }
  return json{{"n", o.n},
              {"dim", o.dim},
              {"objective_kind", objective_name(o.objective)},
              {"value", r.value},
              {"bound", bound_json(r.bound)},
              {"witness_points", points},
              {"cycle", r.cycle.to_string()},
              {"restarts", r.restarts},
              {"best_restart", r.best_restart},
              {"sweeps", r.sweeps},
              {"total_sweeps", r.total_sweeps}};
}

bool within_bound(const OptimizationResult& r) {
  if (!r.bound) return true;
  return r.value >= r.bound->lower - kDerivedTolerance && r.value <= r.bound->upper + kDerivedTolerance;
}

int cmd_optimize(const OptimizeArgs& a, std::ostream& out) {
  if (a.common.mode == "rational") throw UsageError("optimize runs in float mode only");
  OptimizeOptions o;
  o.seed = a.seed;
  o.n = a.n;
  o.dim = a.dim;
  o.objective = parse_objective(a.objective);
  o.restarts = a.restarts;
  o.budget = a.budget;
  o.threads = a.common.threads;

  if (a.table) {
    const auto rows = conjecture_table(a.n_min, a.n_max, o);
    bool ok = true;
    if (!a.common.json)
      out << fmt::format("{:>2}  {:>14} {:>14}  {:>14} {:>14}  {}\n", "n", "min", "max", "best-cycle min",
                         "best-cycle max", "status");
    for (const auto& row : rows) {
      ok = ok && within_bound(row.minimum) && within_bound(row.maximum);
      std::string status = "conjecture";
      if (row.bound)
        status = fmt::format("proven [{}, {}{}", decimal(row.bound->lower), decimal(row.bound->upper),
                             row.bound->upper_attained ? "]" : ")");
      if (a.common.json) {
        OptimizeOptions on = o;
        on.n = row.n;
        on.objective = Objective::Minimize;
        json jmin = result_json(on, row.minimum);
        on.objective = Objective::Maximize;
        json jmax = result_json(on, row.maximum);
        out << json{{"n", row.n},
                    {"min", jmin},
                    {"max", jmax},
                    {"min_witness_best_cycle_ratio", row.min_witness_best_cycle_ratio},
                    {"max_witness_best_cycle_ratio", row.max_witness_best_cycle_ratio},
                    {"bound", bound_json(row.bound)},
                    {"status", row.conjecture ? "conjecture" : "proven"}}
                   .dump()
            << '\n';
      } else {
        out << fmt::format("{:>2}  {:>14} {:>14}  {:>14} {:>14}  {}\n", row.n, decimal(row.minimum.value),
                           decimal(row.maximum.value), decimal(row.min_witness_best_cycle_ratio),
                           decimal(row.max_witness_best_cycle_ratio), status);
      }
    }
    return ok ? kOk : kViolation;
  }

  const auto result = optimize(o);
  if (a.common.json) {
    out << result_json(o, result).dump() << '\n';
  } else {
    out << fmt::format("n {} dim {} {}: value {} (restart {}, {} sweeps, {} total)\n", o.n, o.dim,
                       objective_name(o.objective), decimal(result.value), result.best_restart, result.sweeps,
                       result.total_sweeps);
    if (result.bound)
      out << fmt::format("proven range [{}, {}{}\n", decimal(result.bound->lower), decimal(result.bound->upper),
                         result.bound->upper_attained ? "]" : ")");
    out << "witness (normalized, cycle " << result.cycle.to_string() << "):\n";
    write_point_set(out, result.best);
  }
  return within_bound(result) ? kOk : kViolation;
}

// ---------------------------------------------------------------- pentagon

struct PentagonArgs {
  Common common;
  std::size_t n = 5;
  double radius = 1.0;
  bool check = false;
};

int cmd_pentagon(const PentagonArgs& a, std::ostream& out) {
  if (a.n < 3 || a.n > 10) throw UsageError("--n must be between 3 and 10");
  if (a.check && a.n != 4 && a.n != 5) throw UsageError("--check applies to --n 4 (square) or --n 5 (pentagon)");
  const auto polygon = regular_polygon(a.n, a.radius);
  const auto cycles = enumerate_cycles(a.n);
  const double total = total_weight(polygon);

  double lo = 2.0;
  double hi = -1.0;
  for (const auto& c : cycles) {
    const double r = ratio(polygon, c);
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }

  json doc{{"n", a.n}, {"radius", a.radius}, {"total_weight", total}, {"min_ratio", lo}, {"max_ratio", hi}};
  std::ostringstream text;
  text << fmt::format("regular {}-gon, circumradius {}: w(K_{}) = {}\n", a.n, a.radius, a.n, decimal(total));
  text << fmt::format("cycle ratios range [{}, {}] over {} cycles\n", decimal(lo), decimal(hi), cycles.size());

  bool ok = true;
  if (a.n == 5) {
    const Cycle sides = Cycle::identity(5);
    const Cycle star = complement_cycle(sides);
    const auto report = check_theorem2(polygon);
    const auto row_of = [&](const Cycle& c) {
      return *std::find_if(report.rows.begin(), report.rows.end(), [&](const auto& r) { return r.cycle == c; });
    };
    const auto side_row = row_of(sides);
    const auto star_row = row_of(star);
    const auto state = init_state(polygon, sides);
    const double golden_square = (3.0 + std::sqrt(5.0)) / 2.0;
    const double d_over_e = state.d / state.e;
    const bool side_eq = side_row.verdict == Verdict::HoldsWithEquality &&
                         std::fabs(side_row.ratio - theorem2_lower()) <= kArithmeticTolerance;
    const bool star_eq = star_row.verdict == Verdict::HoldsWithEquality &&
                         std::fabs(star_row.ratio - theorem2_upper()) <= kArithmeticTolerance;
    const bool golden = std::fabs(d_over_e - golden_square) <= kArithmeticTolerance * golden_square;
    ok = side_eq && star_eq && golden;
    doc["side_cycle"] = {{"cycle", sides.to_string()}, {"ratio", side_row.ratio}, {"verdict", verdict_name(side_row.verdict)}};
    doc["pentagram_cycle"] = {{"cycle", star.to_string()}, {"ratio", star_row.ratio}, {"verdict", verdict_name(star_row.verdict)}};
    doc["d1_over_e1"] = d_over_e;
    text << fmt::format("side cycle      {}  ratio {}  (5-sqrt5)/10 = {}  {}\n", sides.to_string(),
                        decimal(side_row.ratio), decimal(theorem2_lower()), verdict_name(side_row.verdict));
    text << fmt::format("pentagram cycle {}  ratio {}  (5+sqrt5)/10 = {}  {}\n", star.to_string(),
                        decimal(star_row.ratio), decimal(theorem2_upper()), verdict_name(star_row.verdict));
    text << fmt::format("d1/e1 = {}  (3+sqrt5)/2 = {}\n", decimal(d_over_e), decimal(golden_square));
  } else if (a.n == 4) {
    const Cycle perimeter = Cycle::identity(4);
    const auto report = check_theorem1(polygon);
    const auto row = *std::find_if(report.rows.begin(), report.rows.end(), [&](const auto& r) { return r.cycle == perimeter; });
    ok = row.verdict == Verdict::HoldsWithEquality && std::fabs(row.ratio - 0.5) <= kArithmeticTolerance;
    doc["perimeter_cycle"] = {{"cycle", perimeter.to_string()}, {"ratio", row.ratio}, {"verdict", verdict_name(row.verdict)}};
    text << fmt::format("perimeter cycle {}  ratio {}  {}\n", perimeter.to_string(), decimal(row.ratio),
                        verdict_name(row.verdict));
  }
  if (a.check) {
    doc["check"] = ok ? "holds" : "violated";
    text << "check: " << (ok ? "equality cases reproduced" : "equality cases NOT reproduced") << '\n';
  }
  if (a.common.json)
    out << doc.dump() << '\n';
  else
    out << text.str();
  return (a.check && !ok) ? kViolation : kOk;
}

// ---------------------------------------------------------------- wiring

void add_common(CLI::App* sub, Common& c, bool with_input) {
  sub->add_flag("--json", c.json, "Machine-readable output");
  sub->add_option("--mode", c.mode, "Scalar mode")->check(CLI::IsMember({"float", "rational"}));
  sub->add_option("--out", c.out_path, "Write the report to this file instead of stdout");
  sub->add_option("--threads", c.threads, "Worker threads (output does not depend on it)")
      ->check(CLI::Range(std::size_t{1}, std::size_t{256}));
  if (with_input) sub->add_option("--in", c.in_path, "Point-set file");
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hamiltonian-cycle weight bounds on squared-distance complete graphs"};
  app.name("hamw");
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a random or regular-polygon point set");
  add_common(gen_cmd, gen.common, false);
  gen_cmd->add_option("--n", gen.n, "Number of points (3..10)");
  gen_cmd->add_option("--dim", gen.dim, "Dimension")->check(CLI::IsMember({2, 3}));
  gen_cmd->add_option("--seed", gen.seed, "SplitMix64 seed");
  gen_cmd->add_flag("--regular", gen.regular, "Regular polygon instead of random points");
  gen_cmd->add_option("--radius", gen.radius, "Circumradius for --regular");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check the K_4 / K_5 cycle-weight bounds");
  add_common(verify_cmd, verify.common, true);
  verify_cmd->add_option("--n", verify.n, "4 or 5 (fuzzing)");
  verify_cmd->add_option("--dim", verify.dim, "Dimension (fuzzing)")->check(CLI::IsMember({2, 3}));
  verify_cmd->add_option("--seed", verify.seed, "Base seed (fuzzing)");
  verify_cmd->add_option("--trials,--fuzz", verify.trials, "Number of random configurations");
  verify_cmd->add_option("--tol", verify.tol, "Relative tolerance for float verdicts");
  verify_cmd->add_flag("--all-rows", verify.all_rows, "Report every cycle row of a fuzz run");

  IdentityArgs identity;
  auto* identity_cmd = app.add_subcommand("identity", "Check the four-point midpoint identity");
  add_common(identity_cmd, identity.common, true);
  identity_cmd->add_option("--dim", identity.dim, "Dimension (fuzzing)")->check(CLI::IsMember({2, 3}));
  identity_cmd->add_option("--seed", identity.seed, "Base seed (fuzzing)");
  identity_cmd->add_option("--trials,--fuzz", identity.trials, "Number of random quadruples");
  identity_cmd->add_option("--tol", identity.tol, "Relative tolerance for float verdicts");
  identity_cmd->add_option("--pairing", identity.pairing, "Only this pairing (0, 1, 2)");

  IterateArgs iterate;
  auto* iterate_cmd = app.add_subcommand("iterate", "Trace the K_5 midpoint iteration as CSV");
  add_common(iterate_cmd, iterate.common, true);
  iterate_cmd->add_option("--dim", iterate.dim, "Dimension of the random configuration")->check(CLI::IsMember({2, 3}));
  iterate_cmd->add_option("--seed", iterate.seed, "Seed of the random configuration when --in is absent");
  iterate_cmd->add_option("--cycle", iterate.cycle, "E-cycle as a vertex list");
  iterate_cmd->add_option("--steps", iterate.steps, "Iteration steps (1..200)");
  iterate_cmd->add_option("--tol", iterate.tol, "Relative tolerance for float residuals");
  iterate_cmd->add_flag("--decompose", iterate.decompose, "Show the five four-point identities instead");

  SequenceArgs sequence;
  auto* sequence_cmd = app.add_subcommand("sequence", "Tabulate the contraction sequence and bound B(n)");
  add_common(sequence_cmd, sequence.common, false);
  sequence_cmd->add_option("--terms", sequence.terms, "Last index");
  sequence_cmd->add_flag("--check", sequence.check, "Run the exact monotonicity/ratio checks");

  OptimizeArgs optimize_args;
  auto* optimize_cmd = app.add_subcommand("optimize", "Pattern search for extremal cycle-weight ratios");
  add_common(optimize_cmd, optimize_args.common, false);
  optimize_cmd->add_option("--n", optimize_args.n, "Number of points (4..7)");
  optimize_cmd->add_option("--dim", optimize_args.dim, "Dimension")->check(CLI::IsMember({2, 3}));
  optimize_cmd->add_option("--seed", optimize_args.seed, "Base seed");
  optimize_cmd->add_option("--objective", optimize_args.objective, "maximize or minimize");
  optimize_cmd->add_option("--restarts", optimize_args.restarts, "Random restarts");
  optimize_cmd->add_option("--budget", optimize_args.budget, "Sweeps per restart");
  optimize_cmd->add_flag("--table", optimize_args.table, "Min/max table over --n-min..--n-max");
  optimize_cmd->add_option("--n-min", optimize_args.n_min, "First n of --table");
  optimize_cmd->add_option("--n-max", optimize_args.n_max, "Last n of --table");

  PentagonArgs pentagon;
  auto* pentagon_cmd = app.add_subcommand("pentagon", "Regular-polygon equality witnesses");
  add_common(pentagon_cmd, pentagon.common, false);
  pentagon_cmd->add_option("--n", pentagon.n, "Number of vertices (3..10)");
  pentagon_cmd->add_option("--radius", pentagon.radius, "Circumradius");
  pentagon_cmd->add_flag("--check", pentagon.check, "Exit 1 unless the equality cases are reproduced");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "hamw: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  const auto dispatch = [&](std::ostream& sink) -> int {
    if (gen_cmd->parsed()) return cmd_gen(gen, sink);
    if (verify_cmd->parsed()) return cmd_verify(verify, sink);
    if (identity_cmd->parsed()) return cmd_identity(identity, sink);
    if (iterate_cmd->parsed()) return cmd_iterate(iterate, sink);
    if (sequence_cmd->parsed()) return cmd_sequence(sequence, sink);
    if (optimize_cmd->parsed()) return cmd_optimize(optimize_args, sink);
    return cmd_pentagon(pentagon, sink);
  };

  const CLI::App* active = app.get_subcommands().front();
  std::string out_path;
  for (const Common* c : {&gen.common, &verify.common, &identity.common, &iterate.common, &sequence.common,
                          &optimize_args.common, &pentagon.common})
    if (!c->out_path.empty()) out_path = c->out_path;

  try {
    if (out_path.empty()) return dispatch(out);
    std::ostringstream buffer;
    const int code = dispatch(buffer);
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw UsageError("cannot write '" + out_path + "'");
    file << buffer.str();
    return code;
  } catch (const UsageError& e) {
    err << "hamw " << active->get_name() << ": " << e.what() << "\n\n" << active->help();
    return kUsage;
  } catch (const DegenerateError& e) {
    err << "hamw " << active->get_name() << ": degenerate input: " << e.what() << '\n';
    return kDegenerate;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.emplace_back("hamw");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  argv.push_back(nullptr);
  return run(static_cast<int>(storage.size()), argv.data(), out, err);
}

}  // namespace hamw::cli
