#include "soficlab/group_table.hpp"

#include <set>

#include "soficlab/errors.hpp"

namespace soficlab {

GroupTable GroupTable::from_rows(std::vector<std::vector<int>> rows) {
  GroupTable t;
  t.order = static_cast<int>(rows.size());
  if (t.order < 1) throw InvalidTable("group table: empty");
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != t.order)
      throw InvalidTable("group table: not square");
    for (int v : row)
      if (v < 0 || v >= t.order) throw InvalidTable("group table: entry out of range");
  }
  t.mul = std::move(rows);

  int e = -1;
  for (int c = 0; c < t.order; ++c) {
    bool left_id = true, right_id = true;
    for (int x = 0; x < t.order; ++x) {
      left_id = left_id && t.mul[c][x] == x;
      right_id = right_id && t.mul[x][c] == x;
    }
    if (left_id && right_id) {
      e = c;
      break;
    }
  }
  if (e < 0) throw InvalidTable("group table: no identity element");
  t.identity = e;

  t.inverse.assign(t.order, -1);
  for (int a = 0; a < t.order; ++a) {
    for (int b = 0; b < t.order; ++b) {
      if (t.mul[a][b] == e && t.mul[b][a] == e) {
        t.inverse[a] = b;
        break;
      }
    }
    if (t.inverse[a] < 0) throw InvalidTable("group table: missing inverse");
  }

  for (int a = 0; a < t.order; ++a)
    for (int b = 0; b < t.order; ++b)
      for (int c = 0; c < t.order; ++c)
        if (t.mul[t.mul[a][b]][c] != t.mul[a][t.mul[b][c]])
          throw InvalidTable("group table: associativity fails");
  return t;
}

bool GroupTable::generates(const std::vector<int>& elems) const {
  std::set<int> closure{identity};
  for (int v : elems) closure.insert(v);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> current(closure.begin(), closure.end());
    for (int a : current)
      for (int b : current)
        if (closure.insert(mul[a][b]).second) grew = true;
  }
  return static_cast<int>(closure.size()) == order;
}

std::vector<int> GroupTable::generating_set() const {
  std::vector<int> gens;
  if (order == 1) return {identity};
  std::set<int> closure{identity};
  for (int cand = 0; cand < order; ++cand) {
    if (closure.count(cand)) continue;
    gens.push_back(cand);
    bool grew = true;
    closure.insert(cand);
    while (grew) {
      grew = false;
      std::vector<int> current(closure.begin(), closure.end());
      for (int a : current)
        for (int b : current)
          if (closure.insert(mul[a][b]).second) grew = true;
    }
    if (static_cast<int>(closure.size()) == order) break;
  }
  return gens;
}

GroupTable GroupTable::trivial() { return cyclic(1); }

GroupTable GroupTable::cyclic(int n) {
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) rows[a][b] = (a + b) % n;
  return from_rows(std::move(rows));
}

GroupTable GroupTable::dihedral(int n) {
  // Element 2i = rotation r^i, element 2i+1 = reflection r^i s.
  const int order = 2 * n;
  auto enc = [&](int rot, int flip) { return 2 * ((rot % n + n) % n) + flip; };
  std::vector<std::vector<int>> rows(order, std::vector<int>(order));
  for (int a = 0; a < order; ++a) {
    int ra = a / 2, fa = a % 2;
    for (int b = 0; b < order; ++b) {
      int rb = b / 2, fb = b % 2;
      // (r^ra s^fa)(r^rb s^fb): s r^k = r^{-k} s.
      int rot = fa == 0 ? ra + rb : ra - rb;
      rows[a][b] = enc(rot, fa ^ fb);
    }
  }
  return from_rows(std::move(rows));
}

GroupTable GroupTable::symmetric3() { return dihedral(3); }

GroupTable GroupTable::quaternion8() {
  // Elements: 1, -1, i, -i, j, -j, k, -k as 0..7.
  auto neg = [](int x) { return x ^ 1; };
  std::vector<std::vector<int>> rows(8, std::vector<int>(8));
  // Base products on {1, i, j, k} = {0, 2, 4, 6} with sign tracked.
  auto base_mul = [&](int a, int b, int& sign) {
    if (a == 0) return b;
    if (b == 0) return a;
    if (a == b) {
      sign = -sign;  // i^2 = j^2 = k^2 = -1
      return 0;
    }
    // ij=k, jk=i, ki=j and anticommutativity.
    if (a == 2 && b == 4) return 6;
    if (a == 4 && b == 6) return 2;
    if (a == 6 && b == 2) return 4;
    sign = -sign;
    if (a == 4 && b == 2) return 6;
    if (a == 6 && b == 4) return 2;
    return 4;  // a == 2 && b == 6
  };
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      int sign = 1;
      if (a & 1) sign = -sign;
      if (b & 1) sign = -sign;
      int p = base_mul(a & ~1, b & ~1, sign);
      rows[a][b] = sign == 1 ? p : neg(p);
    }
  }
  return from_rows(std::move(rows));
}

GroupTable GroupTable::product(const GroupTable& a, const GroupTable& b) {
  const int order = a.order * b.order;
  auto enc = [&](int x, int y) { return x * b.order + y; };
  std::vector<std::vector<int>> rows(order, std::vector<int>(order));
  for (int x1 = 0; x1 < a.order; ++x1)
    for (int y1 = 0; y1 < b.order; ++y1)
      for (int x2 = 0; x2 < a.order; ++x2)
        for (int y2 = 0; y2 < b.order; ++y2)
          rows[enc(x1, y1)][enc(x2, y2)] = enc(a.mul[x1][x2], b.mul[y1][y2]);
  return from_rows(std::move(rows));
}

}  // namespace soficlab
