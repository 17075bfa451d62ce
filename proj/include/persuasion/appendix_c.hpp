#pragma once

#include <utility>
#include <vector>

#include "persuasion/instance.hpp"
#include "persuasion/json_io.hpp"
#include "persuasion/leakage.hpp"
#include "persuasion/scheme.hpp"

// The hand-built three-receiver separations: literal scheme tables kept as
// JSON constants and parsed through the regular deserializer, so the CLI
// emits byte-identical artifacts.

namespace persuasion::appendix_c {

// lambda = 1/2, theta = (3/4, 2/4, 1/4), V(S) = length of the longest
// prefix contained in S.
inline Instance instance() {
  return Instance(Rational(1, 2),
                  {Rational(3, 4), Rational(2, 4), Rational(1, 4)},
                  UtilityFunction::prefix({0, 1, 2, 3}));
}

// The 3-cycle: receiver 1 sees 2's signal, 2 sees 3's, 3 sees 1's.
inline LeakagePattern cycle_pattern() {
  return LeakagePattern(3, {{1, 0}, {2, 1}, {0, 2}});
}

inline SignalingScheme three_signal() {
  return scheme_from_json(json::parse(R"({
    "alphabets": [["+","-","0"], ["X","Y"], ["+","-","0"]],
    "mu1": {"+X+": "1/2", "-X-": "1/2"},
    "mu0": {"+X+": "1/8", "-X-": "1/8",
            "+X-": "1/8", "-X+": "1/8",
            "+X0": "1/8", "-X0": "1/8",
            "+Y0": "1/4"}
  })"));
}

inline SignalingScheme best_two_signal() {
  return scheme_from_json(json::parse(R"({
    "alphabets": [["+","-"], ["X","Y"], ["+","-"]],
    "mu1": {"+X+": "1/2", "-X-": "1/2"},
    "mu0": {"+X+": "1/8", "-X-": "1/8",
            "+X-": "1/8", "-X+": "1/8",
            "+Y-": "1/4", "-Y+": "1/4"}
  })"));
}

// The somewhat-indirect separation of C.1 is stated with persuasion levels
// (0, 0, 1/2); receivers are relabeled here so theta is sorted descending
// (new receiver 1 = original receiver 3). Utility V(S) = |S| is symmetric,
// so all values are unchanged.
inline Instance somewhat_indirect_instance() {
  return Instance(Rational(1, 2), {Rational(1, 2), Rational(0), Rational(0)},
                  UtilityFunction::additive({1, 1, 1}));
}

inline SignalingScheme somewhat_indirect() {
  return scheme_from_json(json::parse(R"({
    "alphabets": [["+","-"], ["+","-"], ["+","-"]],
    "mu1": {"+++": "1/2", "+--": "1/2"},
    "mu0": {"++-": "1/4", "+-+": "1/4", "-+-": "1/4", "--+": "1/4"}
  })"));
}

// Receivers 2 and 3 (the original 1 and 2) always see each other; receiver 1
// (the original 3) sees one of them, each with probability 1/2.
inline LeakageModel somewhat_indirect_model() {
  LeakagePattern a(3, {{2, 1}, {1, 2}, {1, 0}});
  LeakagePattern b(3, {{2, 1}, {1, 2}, {2, 0}});
  return LeakageModel::mix({{Rational(1, 2), std::move(a)}, {Rational(1, 2), std::move(b)}});
}

}  // namespace persuasion::appendix_c
