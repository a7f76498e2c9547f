#include "bcgroup/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "bcgroup/concrete_group.hpp"
#include "bcgroup/json_io.hpp"
#include "bcgroup/kernels.hpp"
#include "bcgroup/order.hpp"
#include "bcgroup/representation.hpp"
#include "bcgroup/subgroup.hpp"
#include "bcgroup/trace.hpp"

namespace bcgroup::cli {

namespace {

struct Options {
  std::uint32_t nodes = 0;
  std::uint32_t pools = 0;
  std::uint64_t cap = kDefaultCap;
  std::uint64_t seed = 0;
  std::uint64_t trials = 1000;
  std::uint64_t prime = 0;
  std::uint64_t epochs = 10;
  double churn = 0.1;
  std::string format = "text";
  std::string in;
  std::string out;
  std::string trace_out;
};

/// Raised for I/O and argument problems found after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr double kSha256InputBits = 512.0;

bool json_mode(const Options& o) { return o.format == "json"; }

GroupParams params_of(const Options& o) { return GroupParams(o.nodes, o.pools); }

/// Decimal string for big values, plain number otherwise.
Json big_number(const BigInt& v) {
  if (v <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(v);
  return v.str();
}

std::string fixed(double v, int digits = 4) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

Json factors_json(const OrderFactorization& f) {
  Json out = Json::array();
  for (const auto& pp : f.factors) out.push_back(Json::array({pp.prime, pp.exponent}));
  return out;
}

Json sylow_json(const OrderFactorization& f) {
  Json out = Json::array();
  for (const auto& s : sylow_forms(f)) {
    Json item;
    item["p"] = s.prime;
    item["p_part"] = s.p_part.str();
    item["cofactor"] = s.cofactor.str();
    out.push_back(std::move(item));
  }
  return out;
}

Json elements_json(const std::vector<PoolUpdate>& elements) {
  Json out = Json::array();
  for (const auto& a : elements) out.push_back(to_json(a));
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw UsageError("cannot write " + path);
  out << content;
  if (!out) throw UsageError("failed writing " + path);
}

void emit(std::ostream& out, const Json& report) { out << report.dump(2) << '\n'; }

// ---- analyze ---------------------------------------------------------------

int cmd_analyze(const Options& o, std::ostream& out) {
  const auto params = params_of(o);
  const auto paper = factorize_paper_order(params);
  const auto concrete = factorize_concrete_order(params);
  const double stirling_paper = stirling_log2(paper.order);
  const double stirling_concrete = stirling_log2(concrete.order);
  std::optional<double> exact_paper;
  if (paper.order <= kExactFactorialLimit) {
    exact_paper = exact_factorial_log2(static_cast<std::uint64_t>(paper.order));
  }

  Json r;
  r["n"] = params.node_count();
  r["r"] = params.pool_count();
  r["paper_order"] = paper.order.str();
  r["concrete_order"] = concrete.order.str();
  r["factors"] = factors_json(paper);
  r["sylow"] = sylow_json(paper);
  r["cauchy_primes"] = cauchy_primes(paper);
  r["stirling_log2_of_paper_order_factorial"] = stirling_paper;
  r["exact_log2_of_paper_order_factorial"] = exact_paper ? Json(*exact_paper) : Json(nullptr);
  r["exceeds_2_pow_512"] = stirling_paper > kSha256InputBits;
  r["min_subgroup_count"] = min_subgroup_count(paper);
  r["concrete_factors"] = factors_json(concrete);
  r["concrete_sylow"] = sylow_json(concrete);
  r["concrete_cauchy_primes"] = cauchy_primes(concrete);
  r["stirling_log2_of_concrete_order_factorial"] = stirling_concrete;
  r["orders_agree"] = paper.order == concrete.order;

  if (json_mode(o)) {
    emit(out, r);
    return kOk;
  }
  const std::string n_str = std::to_string(params.node_count());
  const std::string r_str = std::to_string(params.pool_count());
  out << "blockchain group B(" << n_str << "," << r_str << "): n = " << n_str << " nodes, r = " << r_str
      << " pools\n";
  out << "order |B| = n^r = " << paper.order.str() << "\n";
  out << "factorization: " << paper.order.str() << " = " << to_string(paper) << "\n";
  for (const auto& s : sylow_forms(paper)) {
    out << "sylow p=" << s.prime << ": " << paper.order.str() << " = " << s.p_part.str() << " * "
        << s.cofactor.str() << "  (p does not divide " << s.cofactor.str() << ")\n";
  }
  out << "cauchy primes:";
  for (auto p : cauchy_primes(paper)) out << ' ' << p;
  out << "\nat least k = " << min_subgroup_count(paper) << " Sylow subgroups\n";
  out << "stirling: log2((" << paper.order.str() << ")!) ~ " << fixed(stirling_paper)
      << (stirling_paper > kSha256InputBits ? " > 512 (exceeds 2^512)\n" : " <= 512\n");
  if (exact_paper) out << "exact: log2((" << paper.order.str() << ")!) = " << fixed(*exact_paper) << "\n";
  out << "concrete order (r!)^n = " << concrete.order.str() << " = " << to_string(concrete)
      << (paper.order == concrete.order ? "" : "  (differs from n^r)") << "\n";
  out << "stirling: log2((" << concrete.order.str() << ")!) ~ " << fixed(stirling_concrete) << "\n";
  return kOk;
}

// ---- axioms ----------------------------------------------------------------

struct NonCommutingPair {
  PoolUpdate a;
  PoolUpdate b;
};

/// First non-commuting pair among elements that move node 0 only.
std::optional<NonCommutingPair> noncommuting_witness(const GroupParams& params) {
  std::uint64_t local = 1;
  for (std::uint64_t k = 2; k <= params.pool_count(); ++k) local *= k;
  for (std::uint64_t i = 0; i < local; ++i) {
    const auto a = element_at(params, i);
    for (std::uint64_t j = i + 1; j < local; ++j) {
      const auto b = element_at(params, j);
      if (compose(a, b) != compose(b, a)) return NonCommutingPair{a, b};
    }
  }
  return std::nullopt;
}

int cmd_axioms(const Options& o, std::ostream& out) {
  const auto params = params_of(o);
  const auto tally = kernels::check_axioms(params, o.trials, o.seed);
  // Pools beyond 8 make the witness scan long; a 3-cycle pair always exists there.
  const auto witness = params.pool_count() <= 8 ? noncommuting_witness(params) : std::nullopt;
  const bool abelian = params.pool_count() <= 2;

  Json r;
  r["n"] = params.node_count();
  r["r"] = params.pool_count();
  r["trials"] = tally.trials;
  r["seed"] = o.seed;
  Json failures;
  failures["associativity"] = tally.associativity;
  failures["identity"] = tally.identity;
  failures["inverse"] = tally.inverse;
  failures["double_inverse"] = tally.double_inverse;
  failures["action"] = tally.action;
  r["failures"] = failures;
  r["result"] = tally.ok() ? "PASS" : "FAIL";
  r["abelian"] = abelian;
  if (witness) {
    Json w;
    w["a"] = to_json(witness->a);
    w["b"] = to_json(witness->b);
    w["ab"] = to_json(compose(witness->a, witness->b));
    w["ba"] = to_json(compose(witness->b, witness->a));
    r["noncommuting_witness"] = w;
  } else {
    r["noncommuting_witness"] = nullptr;
  }

  if (json_mode(o)) {
    emit(out, r);
  } else {
    out << "axioms for n=" << params.node_count() << ", r=" << params.pool_count() << ": "
        << tally.trials << " trials, seed " << o.seed << "\n";
    out << "  associativity failures: " << tally.associativity << "\n";
    out << "  identity failures:      " << tally.identity << "\n";
    out << "  inverse failures:       " << tally.inverse << "\n";
    out << "  double inverse failures: " << tally.double_inverse << "\n";
    out << "  action law failures:    " << tally.action << "\n";
    if (witness) {
      out << "non-commuting pair: a = " << to_string(witness->a) << ", b = " << to_string(witness->b)
          << "\n  a*b = " << to_string(compose(witness->a, witness->b))
          << "\n  b*a = " << to_string(compose(witness->b, witness->a)) << "\n";
    } else if (abelian) {
      out << "abelian: every node permutes at most 2 pools\n";
    }
    out << (tally.ok() ? "PASS" : "FAIL") << "\n";
  }
  return tally.ok() ? kOk : kPropertyViolation;
}

// ---- subgroups / sylow / cauchy ----------------------------------------------

Json subgroup_json(const Subgroup& h, std::optional<bool> normal) {
  Json r;
  r["order"] = h.order();
  r["elements"] = elements_json(h.elements());
  r["normal"] = normal ? Json(*normal) : Json(nullptr);
  r["index"] = big_number(concrete_order(h.params()) / h.order());
  return r;
}

int cmd_subgroups(const Options& o, std::ostream& out) {
  const auto params = params_of(o);
  const auto group = ConcreteGroup::enumerate(params, o.cap);
  const auto sets = kernels::subgroup_lattice(group.table());
  std::vector<bool> normal;
  for (const auto& s : sets) normal.push_back(kernels::is_normal(group.table(), s));

  Json r;
  r["n"] = params.node_count();
  r["r"] = params.pool_count();
  r["group_order"] = group.size();
  Json list = Json::array();
  for (std::size_t i = 0; i < sets.size(); ++i) list.push_back(subgroup_json(to_subgroup(group, sets[i]), normal[i]));
  r["subgroups"] = list;
  Json containment = Json::array();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (i != j && sets[i].count() < sets[j].count() && sets[i].is_subset_of(sets[j])) {
        containment.push_back(Json::array({i, j}));
      }
    }
  }
  r["containment"] = containment;

  if (json_mode(o)) {
    emit(out, r);
    return kOk;
  }
  out << "subgroups of the n=" << params.node_count() << ", r=" << params.pool_count()
      << " group (order " << group.size() << "): " << sets.size() << "\n";
  for (std::size_t i = 0; i < sets.size(); ++i) {
    out << "  #" << i << " order " << sets[i].count() << ", index " << group.size() / sets[i].count()
        << (normal[i] ? ", normal" : "") << ":";
    for (Index k : sets[i].indices()) out << ' ' << to_string(group.element(k));
    out << "\n";
  }
  out << "containment pairs: " << containment.size() << "\n";
  return kOk;
}

int cmd_sylow(const Options& o, std::ostream& out) {
  const auto params = params_of(o);
  const auto h = sylow_subgroup(params, o.prime, o.cap);
  const auto form = sylow_form(factorize_concrete_order(params), o.prime);
  std::optional<bool> normal;
  const auto size = enumeration_size(params);
  if (size && *size <= kDefaultCap) normal = is_normal(h, kDefaultCap);

  Json r;
  r["n"] = params.node_count();
  r["r"] = params.pool_count();
  r["prime"] = o.prime;
  r["p_part"] = form.p_part.str();
  r["subgroup"] = subgroup_json(h, normal);
  r["order_matches_p_part"] = BigInt(h.order()) == form.p_part;
  if (json_mode(o)) {
    emit(out, r);
    return kOk;
  }
  out << "Sylow " << o.prime << "-subgroup of the n=" << params.node_count() << ", r="
      << params.pool_count() << " group: order " << h.order() << " (p-part of "
      << concrete_order(params).str() << " is " << form.p_part.str() << ")\n";
  for (const auto& a : h.elements()) out << "  " << to_string(a) << "\n";
  return kOk;
}

int cmd_cauchy(const Options& o, std::ostream& out) {
  const auto params = params_of(o);
  const auto w = cauchy_witness(params, o.prime, o.cap);
  Json r;
  r["n"] = params.node_count();
  r["r"] = params.pool_count();
  r["prime"] = o.prime;
  r["witness"] = to_json(w);
  r["order"] = element_order(w);
  r["power_is_identity"] = is_identity(power(w, static_cast<std::int64_t>(o.prime)));
  if (json_mode(o)) {
    emit(out, r);
    return kOk;
  }
  out << "element of order " << o.prime << ": " << to_string(w) << "\n";
  out << "  sigma^" << o.prime << " = e: " << (is_identity(power(w, static_cast<std::int64_t>(o.prime))) ? "yes" : "no")
      << "\n";
  return kOk;
}

// ---- cayley / relabel --------------------------------------------------------

int cmd_cayley(const Options& o, std::ostream& out) {
  const auto params = params_of(o);
  const auto group = ConcreteGroup::enumerate(params, o.cap);
  const auto rep = cayley_embedding(group);
  const bool injective = kernels::pairwise_distinct(rep.images);
  const bool homomorphism = kernels::preserves_composition(group.table(), rep.images);

  if (json_mode(o)) {
    Json r;
    r["n"] = params.node_count();
    r["r"] = params.pool_count();
    r["order"] = group.size();
    r["elements"] = elements_json(group.elements());
    Json table = Json::array();
    for (Index a = 0; a < group.size(); ++a) {
      const auto row = group.table().row(a);
      table.push_back(std::vector<Index>(row.begin(), row.end()));
    }
    r["table"] = table;
    Json images = Json::array();
    for (const auto& p : rep.images) images.push_back(one_line(p));
    r["images"] = images;
    r["injective"] = injective;
    r["homomorphism"] = homomorphism;
    emit(out, r);
  } else {
    out << "Cayley table of the n=" << params.node_count() << ", r=" << params.pool_count()
        << " group (order " << group.size() << ")\n";
    out << to_text(group.table());
    out << "regular representation (x -> x*g):\n";
    for (Index g = 0; g < group.size(); ++g) {
      out << "  " << g << " " << to_string(group.element(g)) << ": " << one_line(rep.images[g]) << "\n";
    }
    out << "injective: " << (injective ? "yes" : "no") << "\n";
    out << "homomorphism: " << (homomorphism ? "yes" : "no") << "\n";
  }
  return injective && homomorphism ? kOk : kPropertyViolation;
}

int cmd_relabel(const Options& o, std::ostream& out) {
  const auto params = params_of(o);
  const auto h = uniform_relabel_subgroup(params);
  if (h.order() > o.cap) fail(ErrorKind::ClosureExceedsCap, "relabel subgroup exceeds cap");
  const bool closed = is_closed_subgroup(h);
  IsoVerdict verdict = IsoVerdict::Unknown;
  if (h.order() <= kScreeningIsomorphismLimit) {
    verdict = compare_groups(to_table(h), symmetric_group_table(params.pool_count(), kScreeningIsomorphismLimit));
  }
  const std::string node_claim = "unverified: the relabel subgroup has order r!, not n!";

  if (json_mode(o)) {
    Json r;
    r["n"] = params.node_count();
    r["r"] = params.pool_count();
    r["order"] = h.order();
    r["elements"] = elements_json(h.elements());
    r["closed"] = closed;
    r["symmetric_on_pools"] = to_string(verdict);
    r["symmetric_on_nodes"] = node_claim;
    emit(out, r);
  } else {
    out << "uniform pool-relabel subgroup, n=" << params.node_count() << ", r=" << params.pool_count()
        << ": order " << h.order() << (closed ? ", closed" : ", NOT closed") << "\n";
    out << "isomorphic to the symmetric group on " << params.pool_count() << " pools: " << to_string(verdict) << "\n";
    out << "symmetric group on " << params.node_count() << " nodes: " << node_claim << "\n";
  }
  return closed ? kOk : kPropertyViolation;
}

// ---- simulate / fold -----------------------------------------------------------

Json fold_report(const Trace& trace, const std::vector<Snapshot>& snapshots,
                 const std::vector<std::uint64_t>& closures) {
  Json r;
  r["n"] = trace.params.node_count();
  r["r"] = trace.params.pool_count();
  r["epochs"] = snapshots.size();
  r["events"] = trace.events.size();
  r["closure_epochs"] = closures;
  r["final_cumulative"] = to_json(snapshots.back().cumulative);
  return r;
}

void write_snapshots(const Options& o, const std::vector<Snapshot>& snapshots, Json& report, std::ostream& out) {
  if (!o.out.empty()) {
    write_file(o.out, serialize_snapshots(snapshots));
    return;
  }
  if (json_mode(o)) {
    Json lines = Json::array();
    for (const auto& s : snapshots) lines.push_back(to_json(s));
    report["snapshots"] = lines;
  } else {
    out << serialize_snapshots(snapshots);
  }
}

void print_closures(std::ostream& out, const std::vector<std::uint64_t>& closures) {
  out << "identity closure epochs:";
  if (closures.empty()) out << " none";
  for (auto t : closures) out << ' ' << t;
  out << "\n";
}

int cmd_fold(const Options& o, std::ostream& out) {
  const auto trace = parse_trace(read_file(o.in));
  const auto updates = fold_trace(trace);
  const auto snapshots = cumulative_snapshots(updates);
  const auto closures = detect_identity_closure(updates);
  Json r = fold_report(trace, snapshots, closures);
  if (!json_mode(o)) {
    out << "folded " << trace.events.size() << " events over " << snapshots.size() << " epochs\n";
    out << "cumulative update: " << to_string(snapshots.back().cumulative) << "\n";
    print_closures(out, closures);
  }
  write_snapshots(o, snapshots, r, out);
  if (json_mode(o)) emit(out, r);
  return kOk;
}

int cmd_simulate(const Options& o, std::ostream& out) {
  Trace trace = o.in.empty() ? generate_random_trace(params_of(o), o.epochs, o.churn, o.seed)
                             : parse_trace(read_file(o.in));
  const std::uint64_t epochs = o.in.empty() ? o.epochs : epoch_count(trace);
  if (epochs == 0) throw UsageError("--epochs must be >= 1");
  if (!o.trace_out.empty()) write_file(o.trace_out, serialize_trace(trace));

  const auto updates = fold_trace(trace, epochs);
  const auto snapshots = cumulative_snapshots(updates);
  const auto closures = detect_identity_closure(updates);
  const auto configs = evolve(trace, epochs);

  Json r = fold_report(trace, snapshots, closures);
  r["seed"] = o.seed;
  r["initial"] = to_json(trace.initial);
  r["final"] = to_json(configs.back());
  r["final_equals_initial"] = configs.back() == trace.initial;
  if (!json_mode(o)) {
    out << "simulated n=" << trace.params.node_count() << ", r=" << trace.params.pool_count() << ": "
        << trace.events.size() << " switch events over " << epochs << " epochs\n";
    out << "initial pools: " << to_json(trace.initial)["pools"].dump() << "\n";
    out << "final pools:   " << to_json(configs.back())["pools"].dump() << "\n";
    print_closures(out, closures);
  }
  write_snapshots(o, snapshots, r, out);
  if (json_mode(o)) emit(out, r);
  return kOk;
}

// ---- wiring ----------------------------------------------------------------------

void add_group_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--nodes", o.nodes, "number of nodes n")->required()->check(CLI::PositiveNumber);
  cmd->add_option("--pools", o.pools, "number of pools r")->required()->check(CLI::PositiveNumber);
}

void add_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
}

void add_cap(CLI::App* cmd, Options& o) {
  cmd->add_option("--cap", o.cap, "element cap for exhaustive work")->check(CLI::PositiveNumber);
}

}  // namespace

int exit_code_for(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument:
      return kBadArguments;
    case ErrorKind::GroupTooLarge:
    case ErrorKind::ClosureExceedsCap:
    case ErrorKind::StateSpaceTooLarge:
    case ErrorKind::TooLargeForExhaustive:
    case ErrorKind::TooLarge:
      return kCapExceeded;
    case ErrorKind::PrimeNotPresent:
    case ErrorKind::NotADivisor:
    case ErrorKind::NonPositive:
      return kPreconditionUnmet;
    case ErrorKind::MalformedLine:
    case ErrorKind::InvariantViolation:
    case ErrorKind::SourceMismatch:
    case ErrorKind::MalformedInput:
    case ErrorKind::NotABijection:
    case ErrorKind::ParamsMismatch:
    case ErrorKind::SizeMismatch:
      return kInvalidInput;
  }
  return kPropertyViolation;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pool-update group analysis and churn simulation"};
  app.name("bcgroup");
  app.require_subcommand(1);
  Options o;

  auto* analyze = app.add_subcommand("analyze", "order, factorization, Sylow forms and Stirling estimate");
  add_group_options(analyze, o);
  add_format(analyze, o);

  auto* axioms = app.add_subcommand("axioms", "randomized group-axiom checks");
  add_group_options(axioms, o);
  axioms->add_option("--trials", o.trials, "trials per law");
  axioms->add_option("--seed", o.seed, "random seed");
  add_format(axioms, o);

  auto* subgroups = app.add_subcommand("subgroups", "full subgroup lattice of a small group");
  add_group_options(subgroups, o);
  add_cap(subgroups, o);
  add_format(subgroups, o);

  auto* sylow = app.add_subcommand("sylow", "a Sylow p-subgroup");
  add_group_options(sylow, o);
  sylow->add_option("--prime", o.prime, "prime p")->required();
  sylow->add_option("--cap", o.cap, "listing cap")->check(CLI::PositiveNumber);
  add_format(sylow, o);

  auto* cauchy = app.add_subcommand("cauchy", "an element of prime order p");
  add_group_options(cauchy, o);
  cauchy->add_option("--prime", o.prime, "prime p")->required();
  add_cap(cauchy, o);
  add_format(cauchy, o);

  auto* cayley = app.add_subcommand("cayley", "Cayley table and regular representation");
  add_group_options(cayley, o);
  add_cap(cayley, o);
  add_format(cayley, o);

  auto* relabel = app.add_subcommand("relabel", "uniform pool-relabel subgroup");
  add_group_options(relabel, o);
  add_cap(relabel, o);
  add_format(relabel, o);

  auto* simulate = app.add_subcommand("simulate", "generate or replay a churn trace");
  simulate->add_option("--nodes", o.nodes, "number of nodes n")->check(CLI::PositiveNumber);
  simulate->add_option("--pools", o.pools, "number of pools r")->check(CLI::PositiveNumber);
  simulate->add_option("--epochs", o.epochs, "epochs to generate");
  simulate->add_option("--churn", o.churn, "per-node switch probability")->check(CLI::Range(0.0, 1.0));
  simulate->add_option("--seed", o.seed, "random seed");
  simulate->add_option("--in", o.in, "trace file to replay instead of generating");
  simulate->add_option("--out", o.out, "snapshot file (JSON lines)");
  simulate->add_option("--trace-out", o.trace_out, "write the generated trace here");
  add_format(simulate, o);

  auto* fold = app.add_subcommand("fold", "fold a trace file into per-epoch snapshots");
  fold->add_option("--in", o.in, "trace file")->required();
  fold->add_option("--out", o.out, "snapshot file (JSON lines)");
  add_format(fold, o);

  std::vector<std::string> argv_storage{"bcgroup"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadArguments;
  }

  try {
    if (*analyze) return cmd_analyze(o, out);
    if (*axioms) return cmd_axioms(o, out);
    if (*subgroups) return cmd_subgroups(o, out);
    if (*sylow) {
      if (sylow->count("--cap") == 0) o.cap = kListingCap;
      return cmd_sylow(o, out);
    }
    if (*cauchy) return cmd_cauchy(o, out);
    if (*cayley) return cmd_cayley(o, out);
    if (*relabel) return cmd_relabel(o, out);
    if (*simulate) {
      if (o.in.empty() && (o.nodes == 0 || o.pools == 0)) {
        throw UsageError("simulate needs --in or both --nodes and --pools");
      }
      return cmd_simulate(o, out);
    }
    if (*fold) return cmd_fold(o, out);
  } catch (const GroupError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kBadArguments;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kPropertyViolation;
  }
  return kBadArguments;
}

}  // namespace bcgroup::cli
