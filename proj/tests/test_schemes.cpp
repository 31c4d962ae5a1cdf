#include "advect/schemes.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace advect;
using namespace advect::testing;

namespace {

struct Segment {
  Q a, b, value;
};

// Piecewise constant reconstruction of cells [lo, hi) in physical coordinates,
// rebuilt from scratch: each cell carries u_{j-1} on its left part and u_{j+1}
// on its right part, split so the cell mass is kept.
std::vector<Segment> oracle_segments(const GridState<Q>& s, std::int64_t lo, std::int64_t hi) {
  const Q off = s.phase() == Phase::shifted_left ? s.lambda() : Q(0);
  std::vector<Segment> out;
  for (std::int64_t j = lo; j < hi; ++j) {
    const Q left(Q(j) - off - Q(1, 2));
    const Q a = s.cell_value(j - 1), b = s.cell_value(j), c = s.cell_value(j + 1);
    const bool between = (a < b && b < c) || (a > b && b > c);
    if (!between) {
      out.push_back({left, Q(left + 1), b});
      continue;
    }
    const Q w = (c - b) / (c - a);
    out.push_back({left, Q(left + w), a});
    out.push_back({Q(left + w), Q(left + 1), c});
  }
  return out;
}

Q oracle_integral(const std::vector<Segment>& segs, const Q& shift, const Q& x0, const Q& x1) {
  Q sum(0);
  for (const auto& g : segs) {
    const Q lo = std::max(Q(g.a + shift), x0);
    const Q hi = std::min(Q(g.b + shift), x1);
    if (lo < hi) sum += (hi - lo) * g.value;
  }
  return sum;
}

Q random_q(std::mt19937_64& rng, int lo, int hi) {
  std::uniform_int_distribution<int> num(lo * 12, hi * 12);
  Q r(num(rng), 12);
  r.canonicalize();
  return r;
}

GridState<Q> random_state(std::mt19937_64& rng, const Q& lambda, Phase phase = Phase::integer_grid) {
  std::uniform_int_distribution<int> len(1, 9);
  std::vector<Q> v(static_cast<std::size_t>(len(rng)));
  for (auto& x : v) x = random_q(rng, -3, 3);
  return infinite_q(std::move(v), -4, Q(0), Q(0), lambda, phase);
}

const std::vector<Q> kLambdas = {Q(1, 5), Q(1, 3), Q(2, 5), Q(1, 2)};

}  // namespace

TEST(Upwind, JumpCellTakesTheUpwindShare) {
  const SchemeParams<Q> p(SchemeKind::upwind, Ratio{2, 5});
  const auto out = upwind_step(infinite_q({Q(0), Q(1)}, -1, Q(0), Q(0), q("2/5")), p);
  EXPECT_EQ(out.cell_value(-1), 0);
  EXPECT_EQ(out.cell_value(0), q("3/5"));
  EXPECT_EQ(out.cell_value(1), 1);
}

TEST(Upwind, UnitCourantNumberShiftsExactly) {
  const SchemeParams<Q> p(SchemeKind::upwind, Ratio{1, 1});
  const auto u = infinite_q({Q(0), Q(3), Q(-1), q("1/2")}, 0, Q(0), Q(0), Q(1));
  const auto out = run(u, p, 3);
  for (std::int64_t j = -5; j < 12; ++j) EXPECT_EQ(out.cell_value(j), u.cell_value(j - 3)) << j;
}

TEST(LaxWendroff, ConstantStateIsFixed) {
  const SchemeParams<Q> p(SchemeKind::lax_wendroff, Ratio{2, 5});
  const auto u = GridState<Q>::periodic({Q(7), Q(7), Q(7), Q(7)}, q("2/5"));
  EXPECT_EQ(lax_wendroff_step(u, p), u);
}

TEST(LaxWendroff, UnitCourantNumberShiftsExactly) {
  const SchemeParams<Q> p(SchemeKind::lax_wendroff, Ratio{1, 1});
  const auto u = GridState<Q>::periodic({Q(0), Q(3), Q(-1), q("1/2"), Q(2)}, Q(1));
  const auto out = lax_wendroff_step(u, p);
  for (std::int64_t j = 0; j < 5; ++j) EXPECT_EQ(out.cell_value(j), u.cell_value(j - 1));
}

TEST(LaxWendroff, OvershootAheadOfAJump) {
  // stencil (0, 0, 1): -1/5 * 1 + 2/25 * 1
  const SchemeParams<Q> p(SchemeKind::lax_wendroff, Ratio{2, 5});
  const auto out = lax_wendroff_step(infinite_q({Q(0), Q(1)}, 0, Q(0), Q(0), q("2/5")), p);
  EXPECT_EQ(out.cell_value(0), q("-3/25"));
}

TEST(DlFixed, MatchesGeometricOracle) {
  std::mt19937_64 rng(11);
  for (const auto& lam : kLambdas) {
    const Ratio r{lam.get_num().get_si(), lam.get_den().get_si()};
    const SchemeParams<Q> p(SchemeKind::dl_fixed, r);
    for (int trial = 0; trial < 60; ++trial) {
      const auto u = random_state(rng, lam);
      const auto out = dl_fixed_step(u, p);
      const auto segs = oracle_segments(u, -20, 20);
      for (std::int64_t j = -12; j < 12; ++j) {
        EXPECT_EQ(out.cell_value(j), oracle_integral(segs, lam, Q(Q(j) - Q(1, 2)), Q(Q(j) + Q(1, 2))))
            << "lambda " << lam << " cell " << j;
      }
    }
  }
}

TEST(DlFixed, SingleJumpSplitsByLambda) {
  const SchemeParams<Q> p(SchemeKind::dl_fixed, Ratio{2, 5});
  const auto out = dl_fixed_step(infinite_q({Q(0), Q(1)}, -1, Q(0), Q(0), q("2/5")), p);
  EXPECT_EQ(window(out, -2, 2), (std::vector<Q>{0, 0, q("3/5"), 1}));
}

TEST(DlFixed, PlateausTravelExactly) {
  // plateaus of width >= 3 are reconstructed as their exact profile
  const SchemeParams<Q> p(SchemeKind::dl_fixed, Ratio{1, 3});
  auto u = GridState<Q>::periodic({Q(0), Q(0), Q(0), Q(2), Q(2), Q(2), Q(2), Q(-1), Q(-1), Q(-1)}, q("1/3"));
  const auto u0 = u;
  u = run(u, p, 30);  // ten cells of travel = one period
  EXPECT_EQ(u, u0);
}

TEST(Shifted, MatchesGeometricOracle) {
  std::mt19937_64 rng(12);
  for (const auto& lam : kLambdas) {
    const Ratio r{lam.get_num().get_si(), lam.get_den().get_si()};
    const SchemeParams<Q> p(SchemeKind::dl_shifted, r);
    for (int trial = 0; trial < 40; ++trial) {
      const auto even = random_state(rng, lam);
      const auto odd = shifted_step(even, p);
      ASSERT_EQ(odd.phase(), Phase::shifted_left);
      auto segs = oracle_segments(even, -20, 20);
      for (std::int64_t j = -12; j < 12; ++j) {
        const Q left(Q(j) - lam - Q(1, 2));
        EXPECT_EQ(odd.cell_value(j), oracle_integral(segs, Q(0), left, Q(left + 1))) << lam << " " << j;
      }
      const auto back = shifted_step(odd, p);
      ASSERT_EQ(back.phase(), Phase::integer_grid);
      segs = oracle_segments(odd, -20, 20);
      for (std::int64_t j = -12; j < 12; ++j) {
        EXPECT_EQ(back.cell_value(j), oracle_integral(segs, Q(0), Q(Q(j) - Q(1, 2)), Q(Q(j) + Q(1, 2))))
            << lam << " " << j;
      }
    }
  }
}

TEST(Shifted, ConstantStateOnlyTogglesPhase) {
  const SchemeParams<Q> p(SchemeKind::dl_shifted, Ratio{1, 3});
  const auto u = GridState<Q>::periodic({Q(4), Q(4), Q(4), Q(4)}, q("1/3"));
  const auto odd = shifted_step(u, p);
  EXPECT_EQ(odd.phase(), Phase::shifted_left);
  for (const auto& v : odd.values()) EXPECT_EQ(v, 4);
  EXPECT_EQ(shifted_step(odd, p), u);
}

TEST(Shifted, HalfCourantSplitsTheCellInHalves) {
  // odd cell 0 is the right half of cell -1 (0) plus the left half of cell 0 (1/6);
  // odd cell 1 is the right half of cell 0 (1/2) plus half of a flat 1
  const SchemeParams<Q> p(SchemeKind::dl_shifted, Ratio{1, 2});
  const auto odd = shifted_step(infinite_q({Q(0), q("2/3"), Q(1)}, -1), p);
  EXPECT_EQ(odd.cell_value(0), q("1/6"));
  EXPECT_EQ(odd.cell_value(1), 1);
}

TEST(Shifted, LeftBorderOfAPlateau) {
  // a sharp step smears into one cell and sharpens again on the way back
  const SchemeParams<Q> p(SchemeKind::dl_shifted, Ratio{2, 5});
  const auto u = infinite_q({Q(0), Q(1)}, -1, Q(0), Q(0), q("2/5"));
  const auto odd = shifted_step(u, p);
  EXPECT_EQ(window(odd, -2, 3), (std::vector<Q>{0, 0, q("3/5"), 1, 1}));
  EXPECT_EQ(shifted_step(odd, p), u);
}

TEST(Run, ZeroStepsIsIdentity) {
  const SchemeParams<Q> p(SchemeKind::dl_fixed, Ratio{1, 2});
  const auto u = infinite_q({Q(0), Q(1), q("1/3")});
  EXPECT_EQ(run(u, p, 0), u);
  EXPECT_THROW(run(u, p, -1), std::invalid_argument);
}

TEST(Run, ShiftedPhaseAlternates) {
  const SchemeParams<Q> p(SchemeKind::dl_shifted, Ratio{1, 3});
  std::vector<Phase> seen;
  run(infinite_q({Q(0), Q(1)}, 0, Q(0), Q(0), q("1/3")), p, 4,
      [&](std::int64_t, const GridState<Q>& s) { seen.push_back(s.phase()); });
  EXPECT_EQ(seen, (std::vector<Phase>{Phase::shifted_left, Phase::integer_grid, Phase::shifted_left,
                                      Phase::integer_grid}));
}

TEST(Run, ExactTravel) {
  EXPECT_EQ(exact_travel(SchemeParams<Q>(SchemeKind::upwind, Ratio{2, 5}), 10), 4);
  EXPECT_EQ(exact_travel(SchemeParams<Q>(SchemeKind::dl_shifted, Ratio{2, 5}), 10), 0);
}

TEST(SchemeParams, Validation) {
  EXPECT_THROW(SchemeParams<Q>(SchemeKind::dl_shifted, Ratio{3, 5}), std::invalid_argument);
  EXPECT_NO_THROW(SchemeParams<Q>(SchemeKind::dl_fixed, Ratio{3, 5}));
  EXPECT_THROW(SchemeParams<Q>(SchemeKind::upwind, Ratio{0, 1}), std::invalid_argument);
  EXPECT_THROW(SchemeParams<Q>(SchemeKind::upwind, Ratio{6, 5}), std::invalid_argument);
  EXPECT_EQ(SchemeParams<Q>(SchemeKind::upwind, Ratio{4, 10}).lambda(), q("2/5"));
}

TEST(SchemeParams, WrongPhaseOrLambda) {
  const auto odd = infinite_q({Q(0), Q(1)}, 0, Q(0), Q(0), q("1/2"), Phase::shifted_left);
  EXPECT_THROW(upwind_step(odd, SchemeParams<Q>(SchemeKind::upwind, Ratio{1, 2})), std::logic_error);
  EXPECT_THROW(lax_wendroff_step(odd, SchemeParams<Q>(SchemeKind::lax_wendroff, Ratio{1, 2})), std::logic_error);
  EXPECT_THROW(dl_fixed_step(odd, SchemeParams<Q>(SchemeKind::dl_fixed, Ratio{1, 2})), std::logic_error);
  EXPECT_THROW(shifted_step(odd, SchemeParams<Q>(SchemeKind::dl_shifted, Ratio{1, 3})), std::logic_error);
}

TEST(SchemeKind, NamesRoundTrip) {
  for (auto k : {SchemeKind::upwind, SchemeKind::lax_wendroff, SchemeKind::dl_fixed, SchemeKind::dl_shifted}) {
    EXPECT_EQ(parse_scheme(to_string(k)), k);
  }
  EXPECT_THROW(parse_scheme("bogus"), std::invalid_argument);
}
