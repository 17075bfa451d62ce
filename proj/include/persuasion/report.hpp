#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "persuasion/bruteforce.hpp"
#include "persuasion/constructors.hpp"
#include "persuasion/downstream.hpp"
#include "persuasion/instances.hpp"
#include "persuasion/json_io.hpp"
#include "persuasion/lp_builders.hpp"

namespace persuasion {

inline constexpr const char* kToolVersion = "0.1.0";

// Exact value or a certified enclosure [lo, hi].
struct ValueOrInterval {
  Rational lo, hi;
  bool exact = true;

  static ValueOrInterval exact_value(Rational v) { return {v, v, true}; }
  static ValueOrInterval interval(Rational lo, Rational hi) {
    return {std::move(lo), std::move(hi), false};
  }
  std::string str() const { return exact ? lo.str() : lo.str() + ".." + hi.str(); }
};

struct BenchRow {
  int n = 0;
  int k = 0;
  std::string model;
  Rational opt_private, opt_persuasive_k, opt_public;
  ValueOrInterval opt_expected;
  Rational powr_k;
  ValueOrInterval podr;
  std::string method;  // how opt_expected was obtained
};

struct BenchmarkReport {
  std::string instance_id;
  std::uint64_t seed = 0;
  std::uint64_t mc_samples = 0;
  std::vector<BenchRow> rows;

  // Pinned column order; every artifact embeds version, hash and seed.
  static std::string csv_header() {
    return "instance_id,n,k,model,opt_private,opt_persuasive_k,opt_public,opt_expected,"
           "powr_k,podr,method,seed";
  }
  std::string to_csv() const {
    std::ostringstream os;
    os << "# persuasion-toolkit " << kToolVersion << "\n" << csv_header() << "\n";
    for (const auto& r : rows) {
      os << instance_id << ',' << r.n << ',' << r.k << ',' << r.model << ','
         << r.opt_private << ',' << r.opt_persuasive_k << ',' << r.opt_public << ','
         << r.opt_expected.str() << ',' << r.powr_k << ',' << r.podr.str() << ','
         << r.method << ',' << seed << "\n";
    }
    return os.str();
  }
};

// The LP-optimal k-worst-case persuasive scheme and value.
inline std::pair<Rational, SignalingScheme> solve_persuasive(const Instance& instance, int k) {
  const LpSolution sol = solve(build_persuasive_lp(instance, k));
  if (sol.status != LpStatus::optimal) throw std::logic_error("persuasive LP not optimal");
  return {sol.value, scheme_from_assignment(ProfileSpace::binary(instance.n()), sol.assignment)};
}

// opt_expected is exact only where an algorithm exists (fixed patterns at
// brute-force scale); otherwise the best downstream value over the stock
// constructions is reported as a lower bound, bracketed by OPT-private.
inline std::pair<ValueOrInterval, std::string> estimate_opt_expected(
    const Instance& instance, const LeakageModel& model, const Rational& opt_private,
    const SignalingScheme& persuasive_scheme) {
  const int n = instance.n();
  if (model.kind == LeakageModel::Kind::fixed && n <= 3) {
    const auto outcome = bruteforce_optimal_responses(instance, ProfileSpace::binary(n),
                                                      model.pattern,
                                                      BruteforceMode::per_information_set);
    return {ValueOrInterval::exact_value(outcome.value), "bruteforce"};
  }
  std::vector<SignalingScheme> candidates;
  candidates.push_back(optimal_private(instance).to_scheme());
  candidates.push_back(full_information(instance));
  candidates.push_back(persuasive_scheme);
  const int m = n / 2 + 1;
  if (instance.theta(m - 1) > Rational(0))
    candidates.push_back(
        mask_match(instance, MaskMatchParams(Rational(1, 2), Rational(1, 2), m)).to_scheme());
  Rational best(0);
  for (const auto& scheme : candidates) {
    const Rational v = downstream_utility_exact(instance, scheme, model);
    if (v > best) best = v;
  }
  return {ValueOrInterval::interval(best, opt_private), "construct-lb"};
}

inline BenchmarkReport bench(const Instance& instance, int k_lo, int k_hi,
                             const std::vector<std::pair<std::string, LeakageModel>>& models,
                             std::uint64_t seed) {
  BenchmarkReport report;
  report.instance_id = instance_hash(instance);
  report.seed = seed;
  const Rational opt_private = solve_persuasive(instance, 0).first;
  const Rational opt_public = solve_persuasive(instance, instance.n() - 1).first;
  for (int k = k_lo; k <= k_hi; ++k) {
    const auto [opt_k, scheme_k] = solve_persuasive(instance, k);
    for (const auto& [name, model] : models) {
      BenchRow row;
      row.n = instance.n();
      row.k = k;
      row.model = name;
      row.opt_private = opt_private;
      row.opt_persuasive_k = opt_k;
      row.opt_public = opt_public;
      auto [expected, method] = estimate_opt_expected(instance, model, opt_private, scheme_k);
      row.opt_expected = std::move(expected);
      row.method = method;
      row.powr_k = opt_k.is_zero() ? Rational(0) : opt_private / opt_k;
      if (row.opt_expected.exact)
        row.podr = row.opt_expected.lo.is_zero()
                       ? ValueOrInterval::exact_value(Rational(0))
                       : ValueOrInterval::exact_value(opt_private / row.opt_expected.lo);
      else
        row.podr = row.opt_expected.lo.is_zero()
                       ? ValueOrInterval::interval(Rational(1), Rational(0))
                       : ValueOrInterval::interval(Rational(1), opt_private / row.opt_expected.lo);
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

// Instantiates a parametric model template ("kstar", "kclique", "kbroadcast",
// "ker") at a given k; fixed/mixture models pass through.
inline LeakageModel instantiate_model(const std::string& name, int k, const LeakageModel* fixed) {
  if (name == "kstar") return LeakageModel::star(k);
  if (name == "kclique") return LeakageModel::clique(k);
  if (name == "kbroadcast") return LeakageModel::broadcast(k);
  if (name == "ker") return LeakageModel::erdos_renyi(k);
  if (fixed) return *fixed;
  throw std::invalid_argument("unknown model template \"" + name + "\"");
}

struct LowerBoundRow {
  std::string family;
  int n = 0;
  int k = 0;
  Rational opt_private, opt_persuasive_k, opt_public;
  Rational omega0_part;  // omega0 utility of the checked LP solution
  Rational bound;        // the proof's explicit upper bound on omega0_part
  bool ok = false;
  Rational powr_k;

  static std::string csv_header() {
    return "family,n,k,opt_private,opt_persuasive_k,opt_public,omega0_part,bound,ok,powr_k";
  }
  std::string to_csv() const {
    std::ostringstream os;
    os << family << ',' << n << ',' << k << ',' << opt_private << ',' << opt_persuasive_k << ','
       << opt_public << ',' << omega0_part << ',' << bound << ',' << (ok ? 1 : 0) << ','
       << powr_k;
    return os.str();
  }
};

// Certifies the explicit numeric bounds from the lower-bound proofs:
// on hard_supermodular(2^k) the omega0 part of the k-persuasive optimum is
// at most 2(1-lambda); on hard_submodular_public(n) the omega0 part of the
// public optimum is at most 1/n.
inline LowerBoundRow verify_lower_bound_row(const std::string& family, const Instance& instance,
                                            int k) {
  LowerBoundRow row;
  row.family = family;
  row.n = instance.n();
  row.k = k;
  row.opt_private = solve_persuasive(instance, 0).first;
  const auto [opt_k, scheme_k] = solve_persuasive(instance, k);
  row.opt_persuasive_k = opt_k;
  row.opt_public = solve_persuasive(instance, instance.n() - 1).first;
  row.omega0_part = on_path_utility_omega0(instance, scheme_k);
  row.bound = family == "hard-submodular-public"
                  ? Rational(1, instance.n())
                  : Rational(2) * (Rational(1) - instance.lambda());
  row.ok = row.omega0_part <= row.bound;
  row.powr_k = opt_k.is_zero() ? Rational(0) : row.opt_private / opt_k;
  return row;
}

}  // namespace persuasion
