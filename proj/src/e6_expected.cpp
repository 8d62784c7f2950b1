#include "hhcoh/e6/family.hpp"

namespace hhcoh::e6 {

using formula::residue;

namespace {

struct Deg {
  long long l, r, m, v;  // v = l(n+s)+m mod 2s
  bool even;
};

Deg split(int s, int t) {
  Deg d{t / 11, t % 11, (t % 11) / 2, 0, false};
  d.v = residue(d.l * (kN + s) + d.m, 2LL * s);
  d.even = d.l % 2 == 0;
  return d;
}

bool is(const Deg& d, int s, long long rhs) { return d.v == residue(rhs, 2LL * s); }

}  // namespace

long long expected_hom(int s, int t) {
  auto d = split(s, t);
  const long long S = s;
  if (s == 1) {
    switch (d.r) {
      case 1: return d.even ? 7 : 5;
      case 2: return d.even ? 2 : 6;
      case 4: return d.even ? 9 : 11;
      case 6: return d.even ? 11 : 9;
      case 8: return d.even ? 6 : 2;
      case 9: return d.even ? 5 : 7;
      default: return 8;
    }
  }
  switch (d.r) {
    case 0:
      if (is(d, s, 0) || is(d, s, 1)) return 6 * S;
      if (is(d, s, s) || is(d, s, s + 1)) return 2 * S;
      return 0;
    case 1:
      if (is(d, s, 0)) return 7 * S;
      if (is(d, s, s)) return 5 * S;
      return 0;
    case 2:
    case 8:
      if (is(d, s, 0) || is(d, s, s + 1)) return 3 * S;
      if (is(d, s, s) || is(d, s, 1)) return S;
      return 0;
    case 3:
    case 5:
    case 7:
      return residue(d.l * kN + d.m, S) == 0 ? 8 * S : 0;
    case 4:
      if (is(d, s, 0)) return 2 * S;
      if (is(d, s, s)) return 6 * S;
      if (is(d, s, 1)) return 5 * S;
      if (is(d, s, s + 1)) return 7 * S;
      return 0;
    case 6:
      if (is(d, s, 0)) return 7 * S;
      if (is(d, s, s)) return 5 * S;
      if (is(d, s, 1)) return 6 * S;
      if (is(d, s, s + 1)) return 2 * S;
      return 0;
    case 9:
      if (is(d, s, 0)) return 5 * S;
      if (is(d, s, s)) return 7 * S;
      return 0;
    default:
      if (is(d, s, 0) || is(d, s, 1)) return 2 * S;
      if (is(d, s, s) || is(d, s, s + 1)) return 6 * S;
      return 0;
  }
}

long long expected_image(int s, unsigned characteristic, int t) {
  auto d = split(s, t);
  const long long S = s;
  const bool c2 = characteristic == 2, c3 = characteristic == 3;
  // branches are tried in printed order; "x or y" is read inclusively
  switch (d.r) {
    case 0:
      if (is(d, s, 0)) return (d.even || c2) ? 6 * S - 1 : 6 * S;
      if (is(d, s, s)) return 2 * S;
      return 0;
    case 1:
      if (is(d, s, 0)) return S;
      if (is(d, s, s)) return (!d.even || c2) ? 3 * S - 1 : 3 * S;
      return 0;
    case 2:
      if (is(d, s, 0)) return 3 * S;
      if (is(d, s, s)) return S;
      return 0;
    case 3:
      if (is(d, s, 0)) return 5 * S - 1;
      if (is(d, s, s)) return c2 ? 7 * S - 1 : 7 * S;
      return 0;
    case 4:
      if (is(d, s, 0)) return 2 * S;
      if (is(d, s, s)) return (!d.even && c3) ? 6 * S - 1 : 6 * S;
      return 0;
    case 5:
      if (is(d, s, 0)) return (d.even && c3) ? 6 * S - 1 : 6 * S;
      if (is(d, s, s)) return 2 * S;
      return 0;
    case 6:
      if (is(d, s, 0)) return c2 ? 7 * S - 1 : 7 * S;
      if (is(d, s, s)) return 5 * S - 1;
      return 0;
    case 7:
      if (is(d, s, 0)) return S;
      if (is(d, s, s)) return 3 * S;
      return 0;
    case 8:
      if (is(d, s, 0)) return (d.even || c2) ? 3 * S - 1 : 3 * S;
      if (is(d, s, s)) return S;
      return 0;
    case 9:
      if (is(d, s, 0)) return 2 * S;
      if (is(d, s, s)) return (!d.even || c2) ? 6 * S - 1 : 6 * S;
      return 0;
    default:
      if (is(d, s, 0)) return (!d.even && c3) ? 2 * S - 1 : 2 * S;
      if (is(d, s, s)) return 6 * S;
      return 0;
  }
}

long long expected_hh(int s, unsigned characteristic, int t) {
  auto d = split(s, t);
  const bool c2 = characteristic == 2, c3 = characteristic == 3;
  const long long r = d.r;
  auto in = [r](std::initializer_list<long long> set) {
    for (auto x : set)
      if (x == r) return true;
    return false;
  };
  if (s == 1) {
    if (t == 0) return 3;
    bool lm_even = (d.l + d.m) % 2 == 0;
    if (in({0, 10}) && lm_even && c3) return 2;
    if (in({4, 6}) && !lm_even && c3) return 2;
    if (in({0, 10}) && lm_even && !c3) return 1;
    if (in({1, 9})) return 1;
    if (in({2, 8}) && lm_even) return 1;
    if (r == 3 && (lm_even || c2)) return 1;
    if (in({4, 6}) && lm_even && c2) return 1;
    if (in({4, 6}) && !lm_even && !c3) return 1;
    if (r == 5 && c3) return 1;
    if (r == 7 && (!lm_even || c2)) return 1;
    return 0;
  }
  bool hit = (in({0, 1, 8, 9}) && is(d, s, 0) && (d.even || c2)) ||
             (r == 0 && is(d, s, s + 1) && d.even && c3) ||
             (in({1, 9}) && is(d, s, s) && (!d.even || c2)) ||
             (in({2, 10}) && is(d, s, s + 1) && (!d.even || c2)) ||
             (r == 3 && is(d, s, 0)) ||
             (r == 3 && is(d, s, s) && c2) ||
             (in({4, 5}) && is(d, s, s) && !d.even && c3) ||
             (r == 4 && is(d, s, 1)) ||
             (r == 4 && is(d, s, s + 1) && c2) ||
             (r == 5 && is(d, s, 0) && d.even && c3) ||
             (in({6, 7}) && is(d, s, 0) && c2) ||
             (in({6, 7}) && is(d, s, s)) ||
             (r == 6 && is(d, s, 1) && d.even && c3) ||
             (r == 10 && is(d, s, 0) && !d.even && c3);
  return hit ? 1 : 0;
}

ExpectedDims expected_dims(int s, unsigned characteristic, int t) {
  ExpectedDims e;
  e.hom = expected_hom(s, t);
  e.image = expected_image(s, characteristic, t);
  e.hh = expected_hh(s, characteristic, t);
  e.hh_from_ranks = e.hom - e.image - (t > 0 ? expected_image(s, characteristic, t - 1) : 0);
  return e;
}

}  // namespace hhcoh::e6
