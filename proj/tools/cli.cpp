// Copyright 2026 The supchar Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <set>
#include <sstream>

#include "supchar/action.hpp"
#include "supchar/algebra_json.hpp"
#include "supchar/character_table.hpp"
#include "supchar/error.hpp"
#include "supchar/group.hpp"
#include "supchar/supercharacter.hpp"
#include "supchar/superclass.hpp"
#include "supchar/theory.hpp"
#include "supchar/triangular.hpp"

namespace supchar::cli {
namespace {

// A bad flag combination; always exit 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::set<std::string> kCheckNames{"axioms", "orbits", "counts", "oracle", "restriction"};

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kGroupTooLarge:
    case ErrorCode::kSpaceTooLarge:
    case ErrorCode::kTableTooLarge:
    case ErrorCode::kDegreeTooLarge:
      return kBoundExceeded;
    case ErrorCode::kNotPrime:
    case ErrorCode::kNotPrimitive:
    case ErrorCode::kMalformedSpec:
    case ErrorCode::kNotAssociative:
    case ErrorCode::kBadUnit:
    case ErrorCode::kBadIdempotents:
    case ErrorCode::kRadicalNotNilpotent:
    case ErrorCode::kNotDirectSum:
    case ErrorCode::kSNotCommutative:
    case ErrorCode::kBadSize:
      return kInvalidConfig;
    default:
      return kCheckFailed;
  }
}

std::uint64_t parse_bound(const std::string& text, const std::string& source) {
  try {
    std::size_t used = 0;
    const auto v = std::stoull(text, &used);
    if (used == text.size() && v > 0) return v;
  } catch (const std::exception&) {
  }
  throw ConfigError(source + " must be a positive integer, got '" + text + "'");
}

std::uint64_t group_bound(const RunConfig& c) {
  if (c.group_bound) return c.group_bound;
  if (const char* env = std::getenv("SUPCHAR_BOUND"); env && *env) return parse_bound(env, "SUPCHAR_BOUND");
  return kDefaultGroupBound;
}

std::uint64_t space_bound(const RunConfig& c) { return c.space_bound ? c.space_bound : kDefaultSpaceBound; }

bool triangular(const RunConfig& c) { return c.spec.empty(); }

void require_triangular(const RunConfig& c) {
  if (!c.spec.empty() && (c.n || c.p)) throw ConfigError("--spec cannot be combined with --n/--p");
  if (!triangular(c)) return;
  if (c.n < 2) throw ConfigError("--n must be at least 2 (got " + std::to_string(c.n) + ")");
  if (c.p == 0) throw ConfigError("--p is required");
  if (c.k == 0) throw ConfigError("--k must be at least 1");
}

FieldSpec field_of(const RunConfig& c) {
  try {
    return field_make(c.p, c.k);
  } catch (const Error& e) {
    throw Error(e.code(), e.detail(), e.code() == ErrorCode::kNotPrime ? "--p" : "--k");
  }
}

std::shared_ptr<const Algebra> algebra_of(const RunConfig& c) {
  if (triangular(c)) return std::make_shared<const Algebra>(make_triangular(c.n, field_of(c)));
  return std::make_shared<const Algebra>(load_algebra(c.spec));
}

void write_text(const std::string& path, const std::string& text, std::ostream& fallback) {
  if (path.empty() || path == "-") {
    fallback << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot open output file " + path);
  f << text;
  if (!f) throw ConfigError("failed writing " + path);
}

std::string render(const CharacterTable& t, const std::string& format) {
  return format == "json" ? to_json(t) + "\n" : to_csv(t);
}

std::string block_set(Idempotent e) {
  std::string s = "{";
  bool first = true;
  for (std::uint32_t i = 0; i < 32; ++i)
    if (e.has_block(i)) {
      s += (first ? "" : ",") + std::to_string(i);
      first = false;
    }
  return s + "}";
}

TriangularOptions tri_options(const RunConfig& c) {
  TriangularOptions o;
  o.group_bound = group_bound(c);
  o.space_bound = space_bound(c);
  o.jobs = c.jobs;
  o.exponent = c.exponent == "literal" ? TorusExponent::kLiteral : TorusExponent::kPath;
  return o;
}

TheoryOptions theory_options(const RunConfig& c) {
  TheoryOptions o;
  o.group_bound = group_bound(c);
  o.space_bound = space_bound(c);
  o.jobs = c.jobs;
  return o;
}

// Lazily built brute-force pipeline shared by the verify suites.
class Context {
 public:
  explicit Context(const RunConfig& c) : config_(c) {}

  const RunConfig& config() const { return config_; }

  const Algebra& algebra() {
    if (!alg_) alg_ = triangular(config_) ? brute().algebra : algebra_of(config_);
    return *alg_;
  }
  const Algebra& light_algebra() {
    if (!alg_) alg_ = algebra_of(config_);
    return *alg_;
  }

  BruteForce& brute() {
    if (!bf_) bf_ = std::make_unique<BruteForce>(brute_force(config_.n, field_of(config_), tri_options(config_)));
    return *bf_;
  }

  const Theory& theory() {
    if (triangular(config_)) return *brute().theory;
    if (!theory_) {
      algebra();
      theory_ = Theory::build(alg_, theory_options(config_));
    }
    return *theory_;
  }

  // Rows and columns in triangular label order when available.
  CharacterTable table() { return triangular(config_) ? brute().table : theory().table(); }

 private:
  RunConfig config_;
  std::shared_ptr<const Algebra> alg_;
  std::unique_ptr<BruteForce> bf_;
  std::unique_ptr<Theory> theory_;
};

using Report = std::vector<CheckResult>;

void perturb(CharacterTable& t) {
  if (t.values.empty() || t.values.back().empty()) return;
  const std::size_t c = t.identity_col + 1 < t.values.back().size() ? t.values.back().size() - 1 : 0;
  t.values.back()[c] += CycloNumber::one(t.order);
}

void check_axioms(Context& ctx, Report& report) {
  auto table = ctx.table();
  if (ctx.config().perturb) perturb(table);
  for (auto& r : axioms_report(table, ctx.theory().evidence())) report.push_back(std::move(r));
}

void census_checks(Context& ctx, Report& report) {
  const auto& alg = ctx.light_algebra();
  const auto bound = space_bound(ctx.config());
  const auto j = orbit_census(alg, Space::kJ, bound);
  const auto d = orbit_census(alg, Space::kDual, bound);
  report.push_back({"orbits.nE", j.n_regular == d.n_regular,
                    "n_E(J)=" + std::to_string(j.n_regular) + " n_E(J*)=" + std::to_string(d.n_regular)});
  for (const auto* c : {&j, &d}) {
    const std::string tag = c->space == Space::kJ ? "J" : "J*";
    report.push_back({"orbits.residual(" + tag + ")", c->residual == 0, "residual=" + std::to_string(c->residual)});

    std::uint64_t members = 0, bad = 0;
    const VectorCodec codec(alg.field().size(), alg.radical_dim());
    for (const auto& orb : c->orbits)
      for (auto key : orb.record.members) {
        ++members;
        if (is_singular(alg, codec.decode(key), c->space) != orb.singular) ++bad;
      }
    report.push_back({"orbits.singular(" + tag + ")", bad == 0,
                      std::to_string(members - bad) + "/" + std::to_string(members) + " members agree with their orbit"});

    const auto issues = verify_corner_counts(alg, *c, bound);
    report.push_back({"orbits.corners(" + tag + ")", issues.empty(),
                      issues.empty() ? "n(J_f) matches every corner algebra" : issues.front()});
  }
  if (triangular(ctx.config())) {
    std::size_t total = 0, bad = 0;
    for (const auto& d_set : basic_subsets(ctx.config().n)) {
      ++total;
      const bool regular = is_regular_d(d_set, ctx.config().n);
      const auto x = alg.radical_coords(x_of(alg, ctx.config().n, d_set));
      const auto lambda = lambda_of(alg, ctx.config().n, d_set);
      if (is_singular(alg, x, Space::kJ) == regular || is_singular(alg, lambda.coeffs, Space::kDual) == regular) {
        ++bad;
      }
    }
    report.push_back({"orbits.annihilator", bad == 0,
                      std::to_string(total - bad) + "/" + std::to_string(total) +
                          " basic subsets match the rook criterion"});
  }
}

void check_counts(Context& ctx, Report& report) {
  const auto& th = ctx.theory();
  const auto predicted = predicted_count(th.algebra(), th.j_census());
  const auto partition = th.superclasses().size();
  const auto labels = th.labels().size();
  bool ok = predicted == partition && partition == labels;
  std::string details = "predicted " + std::to_string(predicted) + " = partition " + std::to_string(partition) +
                        " = labels " + std::to_string(labels);
  if (triangular(ctx.config())) {
    const auto formula = triangular_label_count(ctx.config().n, th.algebra().field().size());
    ok = ok && formula == labels;
    details += " = formula " + std::to_string(formula);
  }
  report.push_back({"counts", ok, details});
}

void check_oracle(Context& ctx, Report& report) {
  const auto& cfg = ctx.config();
  const auto field = field_of(cfg);
  const auto closed = closed_form_table(cfg.n, field, tri_options(cfg));
  auto& bf = ctx.brute();
  const auto diffs = compare_tables(closed, bf.table);
  report.push_back({"oracle", diffs.empty(),
                    diffs.empty() ? std::to_string(closed.values.size()) + "x" + std::to_string(closed.sizes.size()) +
                                        " tables identical"
                                  : std::to_string(diffs.size()) + " differences, first: " + diffs.front()});

  // Degrees: closed value at 1 against q^{sum(j-i-1)} (q-1)^{|row(D) u col(D)|} and |G|/|G_lambda|.
  const auto& th = *bf.theory;
  const std::uint64_t q = field->size();
  std::size_t bad = 0;
  for (std::size_t r = 0; r < bf.labels.characters.size(); ++r) {
    const auto& d = bf.labels.characters[r].d;
    BigInt expected = 1;
    for (const auto& g : d.roots)
      for (std::uint32_t s = 0; s + 1 < g.j - g.i; ++s) expected *= q;
    for (int s = 0; s < std::popcount(d.touched()); ++s) expected *= q - 1;
    const auto& label = th.labels()[bf.row_of[r]];
    const auto stab = stabilizer_data(th.algebra(), th.group(), label.lambda_rep, label.e);
    const BigInt index = BigInt(th.group().size()) / BigInt(stab.g_lambda.size());
    const auto at_one = closed.values[r][closed.identity_col];
    if (!(at_one == CycloNumber::from_rational(closed.order, Rational(expected))) || index != expected) ++bad;
  }
  report.push_back({"degrees.formula", bad == 0,
                    std::to_string(bf.labels.characters.size() - bad) + "/" +
                        std::to_string(bf.labels.characters.size()) + " degrees equal |G|/|G_lambda|"});
}

void check_restriction(Context& ctx, Report& report) {
  const auto& th = ctx.theory();
  const auto n_group = FiniteGroup::unipotent(th.algebra(), group_bound(ctx.config()));
  const Restriction res(th.algebra(), th.group(), n_group, th.dual_census(), th.inducer().class_of());
  std::size_t bad = 0;
  std::string first_failure;
  for (std::size_t i = 0; i < th.labels().size(); ++i) {
    const auto r = res.report(th.labels()[i], th.characters()[i]);
    if (!r.ok()) {
      if (!bad) first_failure = label_string(th.algebra(), th.labels()[i]) + ": " + r.summary();
      ++bad;
    }
  }
  report.push_back({"restriction", bad == 0,
                    bad ? first_failure
                        : std::to_string(th.labels().size()) + " restrictions decompose over " +
                              std::to_string(res.n_character_count()) + " N-supercharacters"});
}

std::set<std::string> selected_checks(const RunConfig& c) {
  std::set<std::string> out;
  for (const auto& name : c.checks) {
    if (name == "all") {
      out.insert(kCheckNames.begin(), kCheckNames.end());
      if (!triangular(c)) out.erase("oracle");
    } else if (kCheckNames.count(name)) {
      out.insert(name);
    } else {
      throw ConfigError("--checks: unknown suite '" + name + "'");
    }
  }
  if (out.count("oracle") && !triangular(c)) throw ConfigError("--checks oracle needs --n/--p");
  return out;
}

void print_census(const Algebra& alg, const OrbitCensus& c, std::ostream& os) {
  const std::string tag = c.space == Space::kJ ? "J" : "J*";
  const auto blocks = alg.block_count();
  const auto full = Idempotent{(blocks >= 32 ? 0u : (1u << blocks)) - 1u};
  os << "space " << tag << "\n";
  os << "n(" << tag << ")=" << c.n << "\n";
  os << "n_E(" << tag << ")=" << c.n_regular << "\n";
  for (std::uint32_t f = 0; f <= full.mask; ++f)
    os << "n(" << tag << "_f) f=" << block_set({f}) << " " << c.n_within[f] << " exact " << c.n_exact[f] << "\n";
  os << "residual(" << tag << ")=" << c.residual << "\n";
  for (const auto& orb : c.orbits)
    os << "orbit rep=" << format_vector(orb.record.representative) << " size=" << orb.record.members.size()
       << " support=" << block_set(orb.support) << " " << (orb.singular ? "singular" : "regular") << "\n";
}

template <typename Body>
int guarded(std::ostream& err, Body body) {
  try {
    return body();
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidConfig;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
}

int finish(const Report& report, std::ostream& out) {
  bool ok = true;
  for (const auto& r : report) {
    out << r.line() << "\n";
    ok = ok && r.pass;
  }
  return ok ? kOk : kCheckFailed;
}

}  // namespace

int cmd_table(const RunConfig& c, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!c.spec.empty()) throw ConfigError("table works on T(n, q); use the algebra command for --spec");
    require_triangular(c);
    if (c.mode != "closed" && c.mode != "brute" && c.mode != "both")
      throw ConfigError("--mode must be closed, brute or both");
    const auto field = field_of(c);
    std::optional<CharacterTable> brute, closed;
    if (c.mode != "closed") brute = brute_force(c.n, field, tri_options(c)).table;
    if (c.mode != "brute") closed = closed_form_table(c.n, field, tri_options(c));
    write_text(c.out, render(closed ? *closed : *brute, c.format), out);
    if (c.mode != "both") return static_cast<int>(kOk);

    const auto diffs = compare_tables(*closed, *brute);
    std::ostringstream report;
    report << CheckResult{"oracle", diffs.empty(),
                          diffs.empty() ? "closed and brute tables identical"
                                        : std::to_string(diffs.size()) + " differences"}
                  .line()
           << "\n";
    for (const auto& d : diffs) report << "  " << d << "\n";
    write_text(c.diff, report.str(), c.out.empty() ? err : out);
    return static_cast<int>(diffs.empty() ? kOk : kCheckFailed);
  });
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    require_triangular(c);
    const auto checks = selected_checks(c);
    Context ctx(c);
    Report report;
    if (checks.count("axioms")) check_axioms(ctx, report);
    if (checks.count("orbits")) census_checks(ctx, report);
    if (checks.count("counts")) check_counts(ctx, report);
    if (checks.count("oracle")) check_oracle(ctx, report);
    if (checks.count("restriction")) check_restriction(ctx, report);
    return finish(report, out);
  });
}

int cmd_orbits(const RunConfig& c, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    require_triangular(c);
    if (c.space != "primal" && c.space != "dual" && c.space != "both")
      throw ConfigError("--space must be primal, dual or both");
    const auto alg = algebra_of(c);
    std::ostringstream os;
    if (c.space != "dual") print_census(*alg, orbit_census(*alg, Space::kJ, space_bound(c)), os);
    if (c.space != "primal") print_census(*alg, orbit_census(*alg, Space::kDual, space_bound(c)), os);
    write_text(c.out, os.str(), out);
    return static_cast<int>(kOk);
  });
}

int cmd_algebra(const RunConfig& c, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (c.spec.empty()) throw ConfigError("--spec is required");
    if (c.n || c.p) throw ConfigError("--spec cannot be combined with --n/--p");
    Context ctx(c);
    const auto& th = ctx.theory();
    auto table = th.table();
    if (c.perturb) perturb(table);
    std::ostringstream report;
    report << "group order " << th.group().size() << ", " << th.superclasses().size() << " superclasses\n";
    bool ok = true;
    for (const auto& r : axioms_report(table, th.evidence())) {
      report << r.line() << "\n";
      ok = ok && r.pass;
    }
    write_text(c.out, render(table, c.format), out);
    (c.out.empty() ? err : out) << report.str();
    return static_cast<int>(ok ? kOk : kCheckFailed);
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Supercharacter tables for unit groups of reduced algebras over finite fields"};
  app.require_subcommand(1);
  RunConfig c;

  auto add_field = [&](CLI::App* sub) {
    sub->add_option("--n", c.n, "matrix size of T(n, q)");
    sub->add_option("--p", c.p, "field characteristic");
    sub->add_option("--k", c.k, "field degree, q = p^k");
  };
  auto add_bounds = [&](CLI::App* sub) {
    sub->add_option("--bound", c.group_bound, "group enumeration bound (default 2^17, env SUPCHAR_BOUND)");
    sub->add_option("--space-bound", c.space_bound, "orbit space bound (default 2^20)");
    sub->add_option("--jobs", c.jobs, "worker threads")->check(CLI::Range(1u, 1024u));
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--out", c.out, "output file (stdout if omitted)");
    sub->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  };

  auto* table = app.add_subcommand("table", "build the supercharacter table of T(n, q)");
  add_field(table);
  add_bounds(table);
  add_output(table);
  table->add_option("--mode", c.mode, "closed, brute or both")->check(CLI::IsMember({"closed", "brute", "both"}));
  table->add_option("--diff", c.diff, "diff report file for --mode both");
  table->add_option("--exponent", c.exponent, "torus exponent of the closed form: path or literal")
      ->check(CLI::IsMember({"path", "literal"}));
  table->add_option("--spec", c.spec)->group("");

  auto* verify = app.add_subcommand("verify", "run property suites");
  add_field(verify);
  add_bounds(verify);
  verify->add_option("--spec", c.spec, "algebra spec file instead of T(n, q)");
  verify->add_option("--checks", c.checks, "all, axioms, orbits, counts, oracle, restriction")->delimiter(',');
  verify->add_option("--exponent", c.exponent, "torus exponent of the closed form: path or literal")
      ->check(CLI::IsMember({"path", "literal"}));
  verify->add_flag("--perturb", c.perturb)->group("");

  auto* orbits = app.add_subcommand("orbits", "orbit censuses on J and J*");
  add_field(orbits);
  add_bounds(orbits);
  orbits->add_option("--spec", c.spec, "algebra spec file instead of T(n, q)");
  orbits->add_option("--space", c.space, "primal, dual or both")->check(CLI::IsMember({"primal", "dual", "both"}));
  orbits->add_option("--out", c.out, "output file (stdout if omitted)");

  auto* algebra = app.add_subcommand("algebra", "run the generic pipeline on an algebra spec");
  add_field(algebra);
  add_bounds(algebra);
  add_output(algebra);
  algebra->add_option("--spec", c.spec, "algebra spec file")->required();
  algebra->add_flag("--perturb", c.perturb)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidConfig;
  }

  if (table->parsed()) return cmd_table(c, out, err);
  if (verify->parsed()) return cmd_verify(c, out, err);
  if (orbits->parsed()) return cmd_orbits(c, out, err);
  return cmd_algebra(c, out, err);
}

}  // namespace supchar::cli
