#include "swvortex/runge_kutta.hpp"

namespace swvortex {

ButcherTableau ButcherTableau::rk65() {
  ButcherTableau t;
  t.name = "rk65";
  t.stages = 6;
  t.a = {{},
         {{1, 4}},
         {{1, 8}, {1, 8}},
         {{0, 1}, {0, 1}, {1, 2}},
         {{3, 16}, {-3, 8}, {3, 8}, {9, 16}},
         {{-3, 7}, {8, 7}, {6, 7}, {-12, 7}, {8, 7}}};
  for (auto& row : t.a) row.resize(6, Rational{0, 1});
  t.b = {{7, 90}, {0, 1}, {16, 45}, {2, 15}, {16, 45}, {7, 90}};
  t.c = {{0, 1}, {1, 4}, {1, 4}, {1, 2}, {3, 4}, {1, 1}};
  return t;
}

ButcherTableau ButcherTableau::rk4() {
  ButcherTableau t;
  t.name = "rk4";
  t.stages = 4;
  t.a = {{}, {{1, 2}}, {{0, 1}, {1, 2}}, {{0, 1}, {0, 1}, {1, 1}}};
  for (auto& row : t.a) row.resize(4, Rational{0, 1});
  t.b = {{1, 6}, {1, 3}, {1, 3}, {1, 6}};
  t.c = {{0, 1}, {1, 2}, {1, 2}, {1, 1}};
  return t;
}

void RkWorkspace::resize(std::size_t stages, std::size_t n) {
  if (n_ == n && k_.size() == stages * n) return;
  n_ = n;
  k_.assign(stages * n, 0.0);
  temp_.assign(n, 0.0);
}

}  // namespace swvortex
