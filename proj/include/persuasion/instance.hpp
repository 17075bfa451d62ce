#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "persuasion/rational.hpp"
#include "persuasion/utility.hpp"

namespace persuasion {

// Persuasion level from a posterior threshold: theta = lambda/(1-lambda) *
// p/(1-p). Receiver i adopts iff Pr[omega_0 | info] <= p_i.
inline Rational theta_from_threshold(const Rational& lambda, const Rational& p) {
  if (p < Rational(0) || p >= Rational(1))
    throw std::domain_error("threshold p must lie in [0,1)");
  return lambda / (Rational(1) - lambda) * p / (Rational(1) - p);
}

// One persuasion problem: prior lambda = Pr[omega_1], persuasion levels
// sorted 1 >= theta_1 >= ... >= theta_n >= 0, and a monotone sender utility.
// Immutable after construction; receivers are 0-based internally and 1-based
// in all I/O.
class Instance {
 public:
  Instance(Rational lambda, std::vector<Rational> theta, UtilityFunction utility)
      : lambda_(std::move(lambda)), theta_(std::move(theta)), utility_(std::move(utility)) {
    if (theta_.empty()) throw std::invalid_argument("instance needs n >= 1");
    if (utility_.n() != n())
      throw std::invalid_argument("utility receiver count mismatch");
    if (lambda_ <= Rational(0) || lambda_ >= Rational(1))
      throw std::invalid_argument("lambda not in (0,1)");
    if (theta_.front() > Rational(1) || theta_.back() < Rational(0))
      throw std::invalid_argument("theta not within [0,1]");
    for (std::size_t i = 1; i < theta_.size(); ++i)
      if (theta_[i] > theta_[i - 1])
        throw std::invalid_argument("theta not sorted descending");
  }

  int n() const { return static_cast<int>(theta_.size()); }
  const Rational& lambda() const { return lambda_; }
  // 0-based receiver index; theta(n) is the sentinel theta_{n+1} = 0.
  Rational theta(int receiver) const {
    if (receiver == n()) return Rational(0);
    return theta_.at(static_cast<std::size_t>(receiver));
  }
  const std::vector<Rational>& thetas() const { return theta_; }
  const UtilityFunction& utility() const { return utility_; }

  Rational state_weight(int state) const {
    return state == 1 ? lambda_ : Rational(1) - lambda_;
  }

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.lambda_ == b.lambda_ && a.theta_ == b.theta_ && a.utility_ == b.utility_;
  }

 private:
  Rational lambda_;
  std::vector<Rational> theta_;
  UtilityFunction utility_;
};

}  // namespace persuasion
