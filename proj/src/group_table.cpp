#include "stackzeta/group_table.hpp"

#include <numeric>

namespace stackzeta {

void GroupTable::validate() {
  size_t un = static_cast<size_t>(n);
  if (n <= 0 || mul.size() != un)
    throw InvalidGroupError("GroupTable: bad multiplication table size");
  for (const auto& row : mul) {
    if (row.size() != un) throw InvalidGroupError("GroupTable: ragged table");
    for (int x : row)
      if (x < 0 || x >= n) throw InvalidGroupError("GroupTable: entry out of range");
  }

  identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int g = 0; g < n && ok; ++g) ok = op(e, g) == g && op(g, e) == g;
    if (ok) { identity = e; break; }
  }
  if (identity < 0) throw InvalidGroupError("GroupTable: no identity element");

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (op(op(a, b), c) != op(a, op(b, c)))
          throw InvalidGroupError("GroupTable: not associative");

  if (inv.empty()) {
    inv.assign(un, -1);
    for (int g = 0; g < n; ++g)
      for (int h = 0; h < n; ++h)
        if (op(g, h) == identity && op(h, g) == identity) { inv[static_cast<size_t>(g)] = h; break; }
  }
  for (int g = 0; g < n; ++g) {
    int h = inv.at(static_cast<size_t>(g));
    if (h < 0 || h >= n || op(g, h) != identity || op(h, g) != identity)
      throw InvalidGroupError("GroupTable: missing or wrong inverse");
  }

  if (sigma.empty()) {
    sigma.resize(un);
    std::iota(sigma.begin(), sigma.end(), 0);
  }
  if (sigma.size() != un) throw InvalidGroupError("GroupTable: sigma size mismatch");
  std::vector<bool> seen(un, false);
  for (int x : sigma) {
    if (x < 0 || x >= n || seen[static_cast<size_t>(x)])
      throw InvalidGroupError("GroupTable: sigma is not a bijection");
    seen[static_cast<size_t>(x)] = true;
  }
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      if (sigma[static_cast<size_t>(op(g, h))] !=
          op(sigma[static_cast<size_t>(g)], sigma[static_cast<size_t>(h)]))
        throw InvalidGroupError("GroupTable: sigma is not an automorphism");
}

int GroupTable::frob(int g, int v) const {
  for (int i = 0; i < v; ++i) g = sigma[static_cast<size_t>(g)];
  return g;
}

GroupTable GroupTable::cyclic(int n) {
  GroupTable t;
  t.n = n;
  t.mul.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t.mul[static_cast<size_t>(a)][static_cast<size_t>(b)] = (a + b) % n;
  t.validate();
  return t;
}

GroupTable GroupTable::direct_product(const GroupTable& a, const GroupTable& b) {
  GroupTable t;
  t.n = a.n * b.n;
  size_t un = static_cast<size_t>(t.n);
  t.mul.assign(un, std::vector<int>(un));
  auto idx = [&](int x, int y) { return x * b.n + y; };
  for (int x1 = 0; x1 < a.n; ++x1)
    for (int y1 = 0; y1 < b.n; ++y1)
      for (int x2 = 0; x2 < a.n; ++x2)
        for (int y2 = 0; y2 < b.n; ++y2)
          t.mul[static_cast<size_t>(idx(x1, y1))][static_cast<size_t>(idx(x2, y2))] =
              idx(a.op(x1, x2), b.op(y1, y2));
  t.validate();
  return t;
}

GroupTable GroupTable::symmetric3() {
  // Permutations of {0,1,2} listed in a fixed order; composition p*q = p after q.
  static const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                  {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  auto find = [&](const int p[3]) {
    for (int i = 0; i < 6; ++i)
      if (perms[i][0] == p[0] && perms[i][1] == p[1] && perms[i][2] == p[2]) return i;
    return -1;
  };
  GroupTable t;
  t.n = 6;
  t.mul.assign(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      int comp[3];
      for (int x = 0; x < 3; ++x) comp[x] = perms[i][perms[j][x]];
      t.mul[static_cast<size_t>(i)][static_cast<size_t>(j)] = find(comp);
    }
  t.validate();
  return t;
}

GroupTable GroupTable::dihedral4() {
  // Elements r^i s^j, i in 0..3, j in 0..1, index = i + 4j; s r = r^-1 s.
  GroupTable t;
  t.n = 8;
  t.mul.assign(8, std::vector<int>(8));
  auto idx = [](int i, int j) { return i + 4 * j; };
  for (int i1 = 0; i1 < 4; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < 4; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          // (r^i1 s^j1)(r^i2 s^j2) = r^(i1 + i2 * (-1)^j1) s^(j1+j2)
          int i = ((i1 + (j1 ? -i2 : i2)) % 4 + 4) % 4;
          int j = (j1 + j2) % 2;
          t.mul[static_cast<size_t>(idx(i1, j1))][static_cast<size_t>(idx(i2, j2))] = idx(i, j);
        }
  t.validate();
  return t;
}

GroupTable GroupTable::quaternion() {
  // {1,-1,i,-i,j,-j,k,-k} as 0..7: sign = index&1, axis = index>>1 (0:none).
  auto enc = [](int axis, int sign) { return axis * 2 + sign; };
  GroupTable t;
  t.n = 8;
  t.mul.assign(8, std::vector<int>(8));
  // axis of a*b, with 1,i,j,k as 0..3
  static const int axis_tab[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  // i*j=k, j*k=i, k*i=j; i*i=-1 etc.
  static const int sgn2[4][4] = {
      {0, 0, 0, 0},   // 1 * x
      {0, 1, 0, 1},   // i: i*i=-1, i*j=+k, i*k=-j
      {0, 1, 1, 0},   // j: j*i=-k, j*j=-1, j*k=+i
      {0, 0, 1, 1}};  // k: k*i=+j, k*j=-i, k*k=-1
  for (int a = 0; a < 4; ++a)
    for (int sa = 0; sa < 2; ++sa)
      for (int b = 0; b < 4; ++b)
        for (int sb = 0; sb < 2; ++sb) {
          int axis = axis_tab[a][b];
          int sign = (sa + sb + sgn2[a][b]) % 2;
          t.mul[static_cast<size_t>(enc(a, sa))][static_cast<size_t>(enc(b, sb))] = enc(axis, sign);
        }
  t.validate();
  return t;
}

Rat count_bg_finite(const GroupTable& g, int v) {
  if (g.identity < 0)
    throw InvalidGroupError("count_bg_finite: table not validated");
  size_t un = static_cast<size_t>(g.n);
  std::vector<bool> visited(un, false);
  Rat total(0);
  for (int start = 0; start < g.n; ++start) {
    if (visited[static_cast<size_t>(start)]) continue;
    // orbit of `start` under h: x -> sigma^v(h^-1) x h
    std::vector<int> orbit{start};
    visited[static_cast<size_t>(start)] = true;
    for (size_t k = 0; k < orbit.size(); ++k) {
      int x = orbit[k];
      for (int h = 0; h < g.n; ++h) {
        int y = g.op(g.op(g.frob(g.inv[static_cast<size_t>(h)], v), x), h);
        if (!visited[static_cast<size_t>(y)]) {
          visited[static_cast<size_t>(y)] = true;
          orbit.push_back(y);
        }
      }
    }
    int stab = 0;
    for (int h = 0; h < g.n; ++h)
      if (g.op(g.op(g.frob(g.inv[static_cast<size_t>(h)], v), start), h) == start) ++stab;
    total += Rat(1, stab);
  }
  return total;
}

}  // namespace stackzeta
