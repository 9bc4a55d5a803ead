#include "lattice_count.hpp"

#include <algorithm>

namespace reflex::detail {

namespace {

i128 floor_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

i128 ceil_div(i128 a, i128 b) { return -floor_div(-a, b); }

i128 mod(i128 a, i128 m) {
  const i128 r = a % m;
  return r < 0 ? r + m : r;
}

// A rational abscissa num/den with den > 0.
struct Frac {
  i128 num, den;
  bool operator<(const Frac& o) const { return num * o.den < o.num * den; }
  bool operator==(const Frac& o) const { return num * o.den == o.num * den; }
};

}  // namespace

i128 floor_sum(i128 n, i128 m, i128 a, i128 b) {
  i128 ans = 0;
  if (a < 0 || a >= m) {
    const i128 a2 = mod(a, m);
    ans += n * (n - 1) / 2 * ((a - a2) / m);
    a = a2;
  }
  if (b < 0 || b >= m) {
    const i128 b2 = mod(b, m);
    ans += n * ((b - b2) / m);
    b = b2;
  }
  while (true) {
    if (a >= m) {
      ans += n * (n - 1) / 2 * (a / m);
      a %= m;
    }
    if (b >= m) {
      ans += n * (b / m);
      b %= m;
    }
    const i128 top = a * n + b;
    if (top < m) break;
    n = top / m;
    b = top % m;
    std::swap(m, a);
  }
  return ans;
}

i128 count_polygon(const std::vector<Line>& lines, std::int64_t ylo_in, std::int64_t yhi_in, std::int64_t zlo,
                   std::int64_t zhi) {
  i128 ylo = ylo_in, yhi = yhi_in;
  std::vector<Line> upper{{0, 1, zhi}}, lower{{0, -1, -zlo}};
  for (const Line& l : lines) {
    if (l.b > 0) {
      upper.push_back(l);
    } else if (l.b < 0) {
      lower.push_back(l);
    } else if (l.a > 0) {
      yhi = std::min(yhi, floor_div(l.c, l.a));
    } else if (l.a < 0) {
      ylo = std::max(ylo, ceil_div(l.c, l.a));
    } else if (l.c < 0) {
      return 0;
    }
  }
  if (ylo > yhi || zlo > zhi) return 0;

  std::vector<Frac> cuts{{ylo, 1}, {yhi, 1}};
  std::vector<Line> all(upper);
  all.insert(all.end(), lower.begin(), lower.end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      i128 det = i128(all[i].a) * all[j].b - i128(all[j].a) * all[i].b;
      if (det == 0) continue;
      i128 num = i128(all[i].c) * all[j].b - i128(all[j].c) * all[i].b;
      if (det < 0) {
        det = -det;
        num = -num;
      }
      const Frac f{num, det};
      if (Frac{ylo, 1} < f && f < Frac{yhi, 1}) cuts.push_back(f);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  // Upper lines bound z by ⌊(c - a y) / b⌋, lower lines by ⌈(a y - c) / -b⌉.
  auto at = [&](i128 y) -> i128 {
    i128 hi = floor_div(upper[0].c - upper[0].a * y, upper[0].b);
    for (const Line& l : upper) hi = std::min(hi, floor_div(l.c - l.a * y, l.b));
    i128 lo = ceil_div(lower[0].a * y - lower[0].c, -lower[0].b);
    for (const Line& l : lower) lo = std::max(lo, ceil_div(l.a * y - l.c, -l.b));
    return std::max<i128>(0, hi - lo + 1);
  };

  // No two lines cross strictly inside (p, q), so the binding lines found at
  // s hold on the whole run s..e and the real interval is empty throughout or nowhere.
  auto run = [&](i128 s, i128 e) -> i128 {
    const Line* up = &upper[0];
    for (const Line& l : upper)
      if ((l.c - l.a * s) * up->b < (up->c - up->a * s) * l.b) up = &l;
    const Line* down = &lower[0];
    for (const Line& l : lower)
      if ((l.a * s - l.c) * -down->b > (down->a * s - down->c) * -l.b) down = &l;
    if ((up->c - up->a * s) * -down->b < (down->a * s - down->c) * up->b) return 0;
    const i128 len = e - s + 1;
    return floor_sum(len, up->b, -i128(up->a), up->c - up->a * s) +
           floor_sum(len, -i128(down->b), -i128(down->a), down->c - down->a * s) + len;
  };

  i128 total = 0;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const Frac& p = cuts[k];
    const Frac& q = cuts[k + 1];
    if (p.num % p.den == 0) total += at(p.num / p.den);
    const i128 s = floor_div(p.num, p.den) + 1;
    const i128 e = ceil_div(q.num, q.den) - 1;
    if (s <= e) total += run(s, e);
  }
  total += at(cuts.back().num / cuts.back().den);
  return total;
}

}  // namespace reflex::detail
