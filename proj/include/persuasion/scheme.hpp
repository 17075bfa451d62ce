#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "persuasion/profiles.hpp"
#include "persuasion/rational.hpp"

namespace persuasion {

// State-conditional signal distributions (mu0, mu1) over joint profiles,
// stored sparsely by profile rank. Symbols carry display names for I/O;
// binary schemes default to "0"/"1".
class SignalingScheme {
 public:
  SignalingScheme(ProfileSpace space,
                  std::map<std::uint64_t, Rational> mu0,
                  std::map<std::uint64_t, Rational> mu1,
                  std::vector<std::vector<std::string>> symbols = {})
      : space_(std::move(space)), symbols_(std::move(symbols)) {
    mu_[0] = std::move(mu0);
    mu_[1] = std::move(mu1);
    if (symbols_.empty()) {
      symbols_.reserve(static_cast<std::size_t>(space_.n()));
      for (int i = 0; i < space_.n(); ++i) {
        std::vector<std::string> names;
        for (int s = 0; s < space_.size(i); ++s)
          names.push_back(std::string(1, static_cast<char>('0' + s)));
        symbols_.push_back(std::move(names));
      }
    }
    validate();
  }

  static SignalingScheme binary(int n, std::map<SubsetMask, Rational> mu0_by_mask,
                                std::map<SubsetMask, Rational> mu1_by_mask) {
    ProfileSpace space = ProfileSpace::binary(n);
    std::map<std::uint64_t, Rational> mu0, mu1;
    for (auto& [m, p] : mu0_by_mask) mu0[space.mask_to_rank(m)] = std::move(p);
    for (auto& [m, p] : mu1_by_mask) mu1[space.mask_to_rank(m)] = std::move(p);
    return SignalingScheme(std::move(space), std::move(mu0), std::move(mu1));
  }

  const ProfileSpace& space() const { return space_; }
  int n() const { return space_.n(); }
  const std::map<std::uint64_t, Rational>& mu(int state) const {
    return mu_[static_cast<std::size_t>(state)];
  }
  const std::vector<std::vector<std::string>>& symbols() const { return symbols_; }

  Rational mass(int state, std::uint64_t rank) const {
    const auto& m = mu(state);
    const auto it = m.find(rank);
    return it == m.end() ? Rational(0) : it->second;
  }

  bool default_symbols() const {
    for (int i = 0; i < space_.n(); ++i)
      for (int s = 0; s < space_.size(i); ++s)
        if (symbols_[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)] !=
            std::string(1, static_cast<char>('0' + s)))
          return false;
    return true;
  }

  friend bool operator==(const SignalingScheme& a, const SignalingScheme& b) {
    return a.space_ == b.space_ && a.mu_[0] == b.mu_[0] && a.mu_[1] == b.mu_[1] &&
           a.symbols_ == b.symbols_;
  }

 private:
  void validate() const {
    if (static_cast<int>(symbols_.size()) != space_.n())
      throw std::invalid_argument("symbol table receiver count mismatch");
    for (int i = 0; i < space_.n(); ++i) {
      const auto& names = symbols_[static_cast<std::size_t>(i)];
      if (static_cast<int>(names.size()) != space_.size(i))
        throw std::invalid_argument("symbol names do not match alphabet size");
      for (const auto& s : names)
        if (s.size() != 1)
          throw std::invalid_argument("alphabet symbols must be single characters");
    }
    for (int state : {0, 1}) {
      Rational sum(0);
      for (const auto& [rank, p] : mu_[static_cast<std::size_t>(state)]) {
        if (rank >= space_.total())
          throw std::invalid_argument("profile outside the alphabets");
        if (p.sign() < 0) throw std::invalid_argument("negative probability");
        sum += p;
      }
      if (sum != Rational(1))
        throw std::invalid_argument(state == 0 ? "mu0 does not sum to 1"
                                               : "mu1 does not sum to 1");
    }
  }

  ProfileSpace space_;
  std::map<std::uint64_t, Rational> mu_[2];
  std::vector<std::vector<std::string>> symbols_;
};

// Scheme supported on the empty set and the nested prefixes [1],...,[n];
// index j holds the mass of the length-j prefix. Keeps n up to ~60 feasible
// where a 2^n table would not be.
struct PrefixScheme {
  std::vector<Rational> mu0_prefix;  // length n+1, entry j = mass of [j]
  std::vector<Rational> mu1_prefix;

  PrefixScheme(std::vector<Rational> m0, std::vector<Rational> m1)
      : mu0_prefix(std::move(m0)), mu1_prefix(std::move(m1)) {
    if (mu0_prefix.size() != mu1_prefix.size() || mu0_prefix.size() < 2)
      throw std::invalid_argument("prefix scheme needs n+1 masses per state");
    for (int state : {0, 1}) {
      const auto& v = state == 0 ? mu0_prefix : mu1_prefix;
      Rational sum(0);
      for (const auto& p : v) {
        if (p.sign() < 0) throw std::invalid_argument("negative probability");
        sum += p;
      }
      if (sum != Rational(1))
        throw std::invalid_argument(state == 0 ? "mu0 does not sum to 1"
                                               : "mu1 does not sum to 1");
    }
  }

  int n() const { return static_cast<int>(mu0_prefix.size()) - 1; }

  const std::vector<Rational>& mu(int state) const {
    return state == 0 ? mu0_prefix : mu1_prefix;
  }

  SignalingScheme to_scheme() const {
    std::map<SubsetMask, Rational> m0, m1;
    for (int j = 0; j <= n(); ++j) {
      if (!mu0_prefix[static_cast<std::size_t>(j)].is_zero())
        m0[prefix_mask(j)] += mu0_prefix[static_cast<std::size_t>(j)];
      if (!mu1_prefix[static_cast<std::size_t>(j)].is_zero())
        m1[prefix_mask(j)] += mu1_prefix[static_cast<std::size_t>(j)];
    }
    return SignalingScheme::binary(n(), std::move(m0), std::move(m1));
  }
};

}  // namespace persuasion
