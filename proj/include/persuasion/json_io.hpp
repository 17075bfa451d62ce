#pragma once

#include <json.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "persuasion/checks.hpp"
#include "persuasion/instance.hpp"
#include "persuasion/leakage.hpp"
#include "persuasion/scheme.hpp"

// Canonical on-disk formats (see docs/schema.md): rationals are "p/q"
// strings, profiles are strings of single-character symbols over the
// declared alphabets, receivers are 1-based.

namespace persuasion {

using nlohmann::json;

inline json to_json(const Rational& r) { return r.str(); }

inline Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw std::invalid_argument("malformed rational: expected \"p/q\" string");
  return Rational::parse(j.get<std::string>());
}

inline std::vector<Rational> rationals_from_json(const json& j) {
  std::vector<Rational> out;
  for (const auto& e : j) out.push_back(rational_from_json(e));
  return out;
}

inline json to_json(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& r : v) a.push_back(r.str());
  return a;
}

// ---------- UtilityFunction ----------

inline json to_json(const UtilityFunction& u) {
  json j;
  j["kind"] = to_string(u.kind());
  switch (u.kind()) {
    case UtilityKind::table: {
      json values = json::object();
      for (SubsetMask m = 0; m < (SubsetMask{1} << u.n()); ++m) {
        if (u.table_values()[m].is_zero()) continue;
        std::string key(static_cast<std::size_t>(u.n()), '0');
        for (int i = 0; i < u.n(); ++i)
          if (m >> i & 1) key[static_cast<std::size_t>(i)] = '1';
        values[key] = u.table_values()[m].str();
      }
      j["values"] = std::move(values);
      break;
    }
    case UtilityKind::prefix:
    case UtilityKind::anonymous_submodular:
      j[u.kind() == UtilityKind::prefix ? "weights" : "counts"] = to_json(u.weights());
      break;
    case UtilityKind::additive:
      j["weights"] = to_json(u.weights());
      break;
    case UtilityKind::xos: {
      json clauses = json::array();
      for (const auto& c : u.clauses()) clauses.push_back(to_json(c));
      j["clauses"] = std::move(clauses);
      break;
    }
  }
  return j;
}

inline UtilityFunction utility_from_json(const json& j, int n) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "table") {
    std::map<SubsetMask, Rational> values;
    for (const auto& [key, val] : j.at("values").items()) {
      if (static_cast<int>(key.size()) != n)
        throw std::invalid_argument("table subset key length mismatch");
      SubsetMask m = 0;
      for (int i = 0; i < n; ++i) {
        if (key[static_cast<std::size_t>(i)] == '1')
          m |= SubsetMask{1} << i;
        else if (key[static_cast<std::size_t>(i)] != '0')
          throw std::invalid_argument("table subset key must be a 0/1 string");
      }
      values[m] = rational_from_json(val);
    }
    return UtilityFunction::table(n, std::move(values));
  }
  if (kind == "prefix") return UtilityFunction::prefix(rationals_from_json(j.at("weights")));
  if (kind == "anonymous_submodular")
    return UtilityFunction::anonymous_submodular(rationals_from_json(j.at("counts")));
  if (kind == "additive") return UtilityFunction::additive(rationals_from_json(j.at("weights")));
  if (kind == "xos") {
    std::vector<std::vector<Rational>> clauses;
    for (const auto& c : j.at("clauses")) clauses.push_back(rationals_from_json(c));
    return UtilityFunction::xos(std::move(clauses));
  }
  throw std::invalid_argument("unknown utility kind \"" + kind + "\"");
}

// ---------- Instance ----------

inline json to_json(const Instance& instance) {
  json j;
  j["n"] = instance.n();
  j["lambda"] = instance.lambda().str();
  j["theta"] = to_json(instance.thetas());
  j["utility"] = to_json(instance.utility());
  return j;
}

inline Instance instance_from_json(const json& j) {
  const int n = j.at("n").get<int>();
  auto theta = rationals_from_json(j.at("theta"));
  if (static_cast<int>(theta.size()) != n)
    throw std::invalid_argument("theta length does not match n");
  return Instance(rational_from_json(j.at("lambda")), std::move(theta),
                  utility_from_json(j.at("utility"), n));
}

// ---------- SignalingScheme ----------

inline json to_json(const SignalingScheme& scheme) {
  json j;
  if (scheme.default_symbols()) {
    json a = json::array();
    for (int i = 0; i < scheme.n(); ++i) a.push_back(scheme.space().size(i));
    j["alphabets"] = std::move(a);
  } else {
    json a = json::array();
    for (const auto& names : scheme.symbols()) a.push_back(names);
    j["alphabets"] = std::move(a);
  }
  for (int state : {0, 1}) {
    json m = json::object();
    for (const auto& [rank, p] : scheme.mu(state)) {
      std::string key;
      for (int i = 0; i < scheme.n(); ++i)
        key += scheme.symbols()[static_cast<std::size_t>(i)]
                               [static_cast<std::size_t>(scheme.space().symbol_at(rank, i))];
      m[key] = p.str();
    }
    j[state == 0 ? "mu0" : "mu1"] = std::move(m);
  }
  return j;
}

inline SignalingScheme scheme_from_json(const json& j) {
  std::vector<int> sizes;
  std::vector<std::vector<std::string>> symbols;
  for (const auto& a : j.at("alphabets")) {
    if (a.is_number_integer()) {
      const int size = a.get<int>();
      std::vector<std::string> names;
      for (int s = 0; s < size; ++s) names.push_back(std::string(1, static_cast<char>('0' + s)));
      sizes.push_back(size);
      symbols.push_back(std::move(names));
    } else {
      std::vector<std::string> names = a.get<std::vector<std::string>>();
      sizes.push_back(static_cast<int>(names.size()));
      symbols.push_back(std::move(names));
    }
  }
  ProfileSpace space(sizes);
  auto parse_mu = [&](const json& m) {
    std::map<std::uint64_t, Rational> mu;
    for (const auto& [key, val] : m.items()) {
      if (static_cast<int>(key.size()) != space.n())
        throw std::invalid_argument("profile key length mismatch");
      std::vector<int> profile(static_cast<std::size_t>(space.n()));
      for (int i = 0; i < space.n(); ++i) {
        const auto& names = symbols[static_cast<std::size_t>(i)];
        int found = -1;
        for (int s = 0; s < static_cast<int>(names.size()); ++s)
          if (names[static_cast<std::size_t>(s)][0] == key[static_cast<std::size_t>(i)]) found = s;
        if (found < 0)
          throw std::invalid_argument("profile symbol outside the declared alphabet");
        profile[static_cast<std::size_t>(i)] = found;
      }
      mu[space.rank(profile)] = rational_from_json(val);
    }
    return mu;
  };
  auto mu0 = parse_mu(j.at("mu0"));
  auto mu1 = parse_mu(j.at("mu1"));
  return SignalingScheme(space, std::move(mu0), std::move(mu1), std::move(symbols));
}

// ---------- LeakagePattern / LeakageModel ----------

inline json to_json(const LeakagePattern& p) {
  json j;
  j["n"] = p.n();
  json edges = json::array();
  for (const auto& [from, to] : p.edges()) edges.push_back(json::array({from + 1, to + 1}));
  j["edges"] = std::move(edges);
  return j;
}

inline LeakagePattern pattern_from_json(const json& j) {
  const int n = j.at("n").get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be [from,to]");
    edges.emplace_back(e[0].get<int>() - 1, e[1].get<int>() - 1);
  }
  return LeakagePattern(n, edges);
}

inline json to_json(const LeakageModel& m) {
  json j;
  switch (m.kind) {
    case LeakageModel::Kind::fixed:
      j["kind"] = "fixed";
      j["pattern"] = to_json(m.pattern);
      break;
    case LeakageModel::Kind::mixture: {
      j["kind"] = "mixture";
      json parts = json::array();
      for (const auto& [w, p] : m.mixture)
        parts.push_back(json{{"weight", w.str()}, {"pattern", to_json(p)}});
      j["mixture"] = std::move(parts);
      break;
    }
    case LeakageModel::Kind::k_star: j["kind"] = "kstar"; j["k"] = m.k; break;
    case LeakageModel::Kind::k_clique: j["kind"] = "kclique"; j["k"] = m.k; break;
    case LeakageModel::Kind::k_broadcast: j["kind"] = "kbroadcast"; j["k"] = m.k; break;
    case LeakageModel::Kind::k_erdos_renyi: j["kind"] = "ker"; j["k"] = m.k; break;
  }
  return j;
}

inline LeakageModel model_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "fixed") return LeakageModel::fixed(pattern_from_json(j.at("pattern")));
  if (kind == "mixture") {
    std::vector<std::pair<Rational, LeakagePattern>> parts;
    for (const auto& p : j.at("mixture"))
      parts.emplace_back(rational_from_json(p.at("weight")), pattern_from_json(p.at("pattern")));
    return LeakageModel::mix(std::move(parts));
  }
  const int k = j.at("k").get<int>();
  if (kind == "kstar") return LeakageModel::star(k);
  if (kind == "kclique") return LeakageModel::clique(k);
  if (kind == "kbroadcast") return LeakageModel::broadcast(k);
  if (kind == "ker") return LeakageModel::erdos_renyi(k);
  throw std::invalid_argument("unknown leakage model kind \"" + kind + "\"");
}

// ---------- Verdict ----------

inline json to_json(const Verdict& v, const SignalingScheme* scheme = nullptr) {
  json j;
  j["ok"] = v.ok;
  if (v.violation) {
    json w;
    w["receiver"] = v.violation->receiver + 1;
    if (v.violation->signal) w["signal"] = *v.violation->signal;
    json leaked = json::array();
    for (const auto& [sender, symbol] : v.violation->leaked) {
      std::string name = scheme ? scheme->symbols()[static_cast<std::size_t>(sender)]
                                                   [static_cast<std::size_t>(symbol)]
                                : std::to_string(symbol);
      leaked.push_back(json::array({sender + 1, name}));
    }
    w["leaked"] = std::move(leaked);
    w["m0"] = v.violation->m0.str();
    w["m1"] = v.violation->m1.str();
    j["violation"] = std::move(w);
  }
  if (v.degenerate_ties > 0) j["degenerate_ties"] = v.degenerate_ties;
  return j;
}

// FNV-1a over the canonical JSON dump; used as the instance id in reports.
inline std::string content_hash(const json& j) {
  const std::string s = j.dump();
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline std::string instance_hash(const Instance& instance) {
  return content_hash(to_json(instance));
}

}  // namespace persuasion
