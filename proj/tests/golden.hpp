#ifndef AFLUX_TESTS_GOLDEN_HPP_
#define AFLUX_TESTS_GOLDEN_HPP_

// Printed shape functions and upwind difference formulas for N = 2..6,
// transcribed in factored form and expanded exactly. Entries follow the
// library's dof order: right point, left point, moments 0..N-2.

#include <stdexcept>
#include <vector>

#include "test_support.hpp"

namespace golden {

using testing_support::expand;
using testing_support::q;
using testing_support::Q;
using testing_support::QPoly;

inline std::vector<QPoly> shapes(int n) {
  const QPoly l{q(1), q(2)};   // 1 + 2 xi
  const QPoly m{q(-1), q(2)};  // -1 + 2 xi
  const QPoly x{q(0), q(1)};   // xi
  switch (n) {
    case 2:
      return {expand(q(1, 4), {l, {q(-1), q(6)}}), expand(q(1, 4), {m, {q(1), q(6)}}), expand(q(-3, 2), {m, l})};
    case 3:
      return {expand(q(1, 4), {l, {q(-1), q(-4), q(20)}}), expand(q(-1, 4), {m, {q(-1), q(4), q(20)}}),
              expand(q(-3, 2), {m, l}), expand(q(-15, 2), {x, m, l})};
    case 4:
      return {expand(q(1, 16), {l, {q(3), q(-30), q(-60), q(280)}}),
              expand(q(1, 16), {m, {q(-3), q(-30), q(60), q(280)}}),
              expand(q(15, 16), {m, l, {q(-3), q(0), q(28)}}), expand(q(-15, 2), {x, m, l}),
              expand(q(-35, 16), {m, l, {q(-1), q(0), q(20)}})};
    case 5:
      return {expand(q(1, 16), {l, {q(3), q(24), q(-168), q(-224), q(1008)}}),
              expand(q(-1, 16), {m, {q(3), q(-24), q(-168), q(224), q(1008)}}),
              expand(q(15, 16), {m, l, {q(-3), q(0), q(28)}}),
              expand(q(105, 16), {x, m, l, {q(-5), q(0), q(36)}}),
              expand(q(-35, 16), {m, l, {q(-1), q(0), q(20)}}),
              expand(q(-315, 32), {x, m, l, {q(-3), q(0), q(28)}})};
    case 6:
      return {expand(q(1, 32), {l, {q(-5), q(70), q(280), q(-1680), q(-1680), q(7392)}}),
              expand(q(1, 32), {m, {q(5), q(70), q(-280), q(-1680), q(1680), q(7392)}}),
              expand(q(-105, 128), {m, l, {q(5), q(0), q(-120), q(0), q(528)}}),
              expand(q(105, 16), {x, m, l, {q(-5), q(0), q(36)}}),
              expand(q(105, 64), {m, l, {q(5), q(0), q(-232), q(0), q(1232)}}),
              expand(q(-315, 32), {x, m, l, {q(-3), q(0), q(28)}}),
              expand(q(-693, 128), {m, l, {q(1), q(0), q(-56), q(0), q(336)}})};
    default:
      throw std::invalid_argument("no printed shape functions for this degree");
  }
}

struct Fd {
  std::vector<Q> d;      // over cell i: q_{i+1/2}, q_{i-1/2}, q_i^{(k)}
  std::vector<Q> dstar;  // over cell i+1: q_{i+3/2}, q_{i+1/2}, q_{i+1}^{(k)}
};

inline Fd fd(int n) {
  switch (n) {
    case 2:
      return {{q(4), q(2), q(-6)}, {q(-2), q(-4), q(6)}};
    case 3:
      return {{q(9), q(-3), q(-6), q(-15)}, {q(3), q(-9), q(6), q(-15)}};
    case 4:
      return {{q(16), q(4), q(15), q(-15), q(-35)}, {q(-4), q(-16), q(-15), q(-15), q(35)}};
    case 5:
      return {{q(25), q(-5), q(15), q(105, 2), q(-35), q(-315, 4)},
              {q(5), q(-25), q(-15), q(105, 2), q(35), q(-315, 4)}};
    case 6:
      return {{q(36), q(6), q(-105, 4), q(105, 2), q(315, 2), q(-315, 4), q(-693, 4)},
              {q(-6), q(-36), q(105, 4), q(105, 2), q(-315, 2), q(-315, 4), q(693, 4)}};
    default:
      throw std::invalid_argument("no printed difference formulas for this degree");
  }
}

}  // namespace golden

#endif  // AFLUX_TESTS_GOLDEN_HPP_
