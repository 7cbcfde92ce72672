#include "tubealg/group.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace tubealg {

FiniteGroup FiniteGroup::trivial() {
  FiniteGroup g;
  g.names = {"1"};
  g.mult = {{0}};
  g.inv = {0};
  g.factor_orders = {1};
  g.components = {{0}};
  return g;
}

FiniteGroup FiniteGroup::cyclic(int n, const std::string& prefix) {
  FiniteGroup g;
  g.names.resize(n);
  g.mult.assign(n, std::vector<int>(n));
  g.inv.resize(n);
  for (int i = 0; i < n; ++i) {
    g.names[i] = prefix + std::to_string(i);
    g.inv[i] = (n - i) % n;
    for (int j = 0; j < n; ++j) g.mult[i][j] = (i + j) % n;
  }
  g.factor_orders = {n};
  g.components.resize(n);
  for (int i = 0; i < n; ++i) g.components[i] = {i};
  return g;
}

FiniteGroup FiniteGroup::product(const FiniteGroup& a, const FiniteGroup& b) {
  FiniteGroup g;
  int na = a.size(), nb = b.size();
  int n = na * nb;
  g.names.resize(n);
  g.mult.assign(n, std::vector<int>(n));
  g.inv.resize(n);
  auto pack = [nb](int i, int j) { return i * nb + j; };
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) {
      int e = pack(i, j);
      g.names[e] = a.names[i] + b.names[j];
      g.inv[e] = pack(a.inv[i], b.inv[j]);
      for (int k = 0; k < na; ++k)
        for (int l = 0; l < nb; ++l) g.mult[e][pack(k, l)] = pack(a.mult[i][k], b.mult[j][l]);
    }
  if (!a.factor_orders.empty() && !b.factor_orders.empty()) {
    g.factor_orders = a.factor_orders;
    g.factor_orders.insert(g.factor_orders.end(), b.factor_orders.begin(), b.factor_orders.end());
    g.components.resize(n);
    for (int i = 0; i < na; ++i)
      for (int j = 0; j < nb; ++j) {
        auto c = a.components[i];
        c.insert(c.end(), b.components[j].begin(), b.components[j].end());
        g.components[pack(i, j)] = c;
      }
  }
  return g;
}

FiniteGroup FiniteGroup::symmetric3() {
  // Presentation <s, r | s^2 = r^3 = (sr)^2 = 1>; elements 1, r, rr, s, sr, srr.
  // Encode g = (i, j) ~ s^i r^j with (i,j)(k,l) = (i+k, (-1)^k j + l).
  FiniteGroup g;
  const char* nm[6] = {"1", "r", "rr", "s", "sr", "srr"};
  auto pack = [](int i, int j) { return i * 3 + j; };
  g.names.assign(nm, nm + 6);
  g.mult.assign(6, std::vector<int>(6));
  g.inv.resize(6);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 3; ++l) {
          int jj = (k ? (3 - j) % 3 : j);
          g.mult[pack(i, j)][pack(k, l)] = pack((i + k) % 2, (jj + l) % 3);
        }
    }
  for (int e = 0; e < 6; ++e)
    for (int f = 0; f < 6; ++f)
      if (g.mult[e][f] == 0) g.inv[e] = f;
  return g;
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::string>& elements,
                                    const std::vector<std::vector<std::string>>& table) {
  FiniteGroup g;
  g.names = elements;
  int n = g.size();
  std::map<std::string, int> idx;
  for (int i = 0; i < n; ++i) {
    if (idx.count(elements[i]))
      throw Error(ErrorKind::MalformedInput, "duplicate group element name '" + elements[i] + "'");
    idx[elements[i]] = i;
  }
  if (static_cast<int>(table.size()) != n)
    throw Error(ErrorKind::MalformedInput, "group multiplication table has wrong row count");
  g.mult.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n)
      throw Error(ErrorKind::MalformedInput, "group multiplication table has wrong column count");
    for (int j = 0; j < n; ++j) {
      auto it = idx.find(table[i][j]);
      if (it == idx.end())
        throw Error(ErrorKind::MalformedInput, "unknown element '" + table[i][j] + "' in group table");
      g.mult[i][j] = it->second;
    }
  }
  g.inv.assign(n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (g.mult[i][j] == 0) g.inv[i] = j;
  g.validate();
  return g;
}

void FiniteGroup::validate() const {
  int n = size();
  for (int i = 0; i < n; ++i) {
    if (mult[0][i] != i || mult[i][0] != i)
      throw Error(ErrorKind::MalformedInput, "group element 0 is not an identity");
    if (inv[i] < 0 || mult[i][inv[i]] != 0 || mult[inv[i]][i] != 0)
      throw Error(ErrorKind::MalformedInput, "group element '" + names[i] + "' has no two-sided inverse");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (mult[mult[i][j]][k] != mult[i][mult[j][k]])
          throw Error(ErrorKind::MalformedInput, "group multiplication table is not associative");
}

int FiniteGroup::element_by_name(const std::string& n) const {
  for (int i = 0; i < size(); ++i)
    if (names[i] == n) return i;
  throw Error(ErrorKind::MalformedInput, "unknown group element '" + n + "'");
}

bool FiniteGroup::is_subgroup(const std::vector<int>& subset) const {
  std::set<int> s(subset.begin(), subset.end());
  if (!s.count(0)) return false;
  for (int a : s)
    for (int b : s)
      if (!s.count(mult[a][b])) return false;
  return true;
}

bool FiniteGroup::is_normal(const std::vector<int>& subgroup) const {
  if (!is_subgroup(subgroup)) return false;
  std::set<int> s(subgroup.begin(), subgroup.end());
  for (int g = 0; g < size(); ++g)
    for (int n : s)
      if (!s.count(conj(g, n))) return false;
  return true;
}

std::vector<std::vector<int>> FiniteGroup::conjugacy_classes() const {
  std::vector<std::vector<int>> classes;
  std::vector<bool> seen(size(), false);
  for (int g = 0; g < size(); ++g) {
    if (seen[g]) continue;
    std::set<int> cls;
    for (int h = 0; h < size(); ++h) cls.insert(conj(h, g));
    classes.emplace_back(cls.begin(), cls.end());
    for (int e : cls) seen[e] = true;
  }
  return classes;
}

std::vector<int> FiniteGroup::centralizer(int g) const {
  std::vector<int> z;
  for (int h = 0; h < size(); ++h)
    if (mult[h][g] == mult[g][h]) z.push_back(h);
  return z;
}

std::pair<FiniteGroup, std::vector<int>> FiniteGroup::quotient(const std::vector<int>& nsub) const {
  if (!is_normal(nsub))
    throw Error(ErrorKind::NotNormal, "subgroup is not normal");
  std::set<int> ns(nsub.begin(), nsub.end());
  int n = size();
  std::vector<int> coset_of(n, -1);
  std::vector<int> reps;
  for (int g = 0; g < n; ++g) {
    if (coset_of[g] >= 0) continue;
    int c = static_cast<int>(reps.size());
    reps.push_back(g);
    for (int m : ns) coset_of[mult[g][m]] = c;
  }
  FiniteGroup q;
  int k = static_cast<int>(reps.size());
  q.names.resize(k);
  q.mult.assign(k, std::vector<int>(k));
  q.inv.resize(k);
  for (int i = 0; i < k; ++i) {
    q.names[i] = names[reps[i]] + "N";
    q.inv[i] = coset_of[inv[reps[i]]];
    for (int j = 0; j < k; ++j) q.mult[i][j] = coset_of[mult[reps[i]][reps[j]]];
  }
  q.names[0] = "1N";
  q.validate();
  return {q, coset_of};
}

double ThreeCocycle::cocycle_residual() const {
  const FiniteGroup& G = group;
  double res = 0;
  for (int f = 0; f < G.size(); ++f)
    for (int g = 0; g < G.size(); ++g)
      for (int h = 0; h < G.size(); ++h)
        for (int k = 0; k < G.size(); ++k) {
          Cplx lhs = (*this)(f, g, h) * (*this)(f, G.op(g, h), k) * (*this)(g, h, k);
          Cplx rhs = (*this)(G.op(f, g), h, k) * (*this)(f, g, G.op(h, k));
          res = std::max(res, std::abs(lhs - rhs));
        }
  return res;
}

bool ThreeCocycle::is_normalized(double tol) const {
  const FiniteGroup& G = group;
  for (int g = 0; g < G.size(); ++g)
    for (int h = 0; h < G.size(); ++h) {
      if (std::abs((*this)(0, g, h) - 1.0) > tol) return false;
      if (std::abs((*this)(g, 0, h) - 1.0) > tol) return false;
      if (std::abs((*this)(g, h, 0) - 1.0) > tol) return false;
    }
  return true;
}

void ThreeCocycle::check(double tol) const {
  for (const Cplx& v : table)
    if (std::abs(std::abs(v) - 1.0) > tol)
      throw Error(ErrorKind::InvalidCocycle, "cocycle entry is not a phase");
  if (!is_normalized(tol))
    throw Error(ErrorKind::InvalidCocycle, "cocycle is not normalized");
  double r = cocycle_residual();
  if (r > tol)
    throw Error(ErrorKind::InvalidCocycle, "3-cocycle equation violated, residual " + std::to_string(r));
}

ThreeCocycle ThreeCocycle::trivial(const FiniteGroup& g) {
  ThreeCocycle c;
  c.group = g;
  c.table.assign(static_cast<size_t>(g.size()) * g.size() * g.size(), Cplx(1, 0));
  return c;
}

ThreeCocycle ThreeCocycle::times(const ThreeCocycle& other) const {
  ThreeCocycle c = *this;
  for (size_t i = 0; i < table.size(); ++i) c.table[i] *= other.table[i];
  return c;
}

ThreeCocycle ThreeCocycle::power(int k) const {
  ThreeCocycle c = trivial(group);
  for (size_t i = 0; i < table.size(); ++i) c.table[i] = std::pow(table[i], k);
  return c;
}

namespace {

// Propitius type-I cocycle on cyclic factor i with exponent k.
ThreeCocycle type_one(const FiniteGroup& G, int factor, int k) {
  ThreeCocycle c = ThreeCocycle::trivial(G);
  int n = G.factor_orders[factor];
  int N = G.size();
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      for (int cc = 0; cc < N; ++cc) {
        int ai = G.components[a][factor], bi = G.components[b][factor], ci = G.components[cc][factor];
        double phase = 2.0 * M_PI * k * ai * ((bi + ci) / n) / static_cast<double>(n);
        c.table[(a * N + b) * N + cc] = std::polar(1.0, phase);
      }
  return c;
}

// Propitius type-II cocycle on the factor pair (i, j) with exponent k.
ThreeCocycle type_two(const FiniteGroup& G, int fi, int fj, int k) {
  ThreeCocycle c = ThreeCocycle::trivial(G);
  int ni = G.factor_orders[fi], nj = G.factor_orders[fj];
  int N = G.size();
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      for (int cc = 0; cc < N; ++cc) {
        int ai = G.components[a][fi], bj = G.components[b][fj], cj = G.components[cc][fj];
        double phase = 2.0 * M_PI * k * ai * ((bj + cj) / nj) / static_cast<double>(ni);
        c.table[(a * N + b) * N + cc] = std::polar(1.0, phase);
      }
  return c;
}

// Propitius type-III cocycle on Z2^3.
ThreeCocycle type_three(const FiniteGroup& G) {
  ThreeCocycle c = ThreeCocycle::trivial(G);
  int N = G.size();
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      for (int cc = 0; cc < N; ++cc) {
        int e = G.components[a][0] * G.components[b][1] * G.components[cc][2];
        c.table[(a * N + b) * N + cc] = (e % 2) ? Cplx(-1, 0) : Cplx(1, 0);
      }
  return c;
}

}  // namespace

ThreeCocycle cocycle_library(const FiniteGroup& group, const std::string& name) {
  if (name == "trivial") return ThreeCocycle::trivial(group);
  if (group.factor_orders.empty() || group.components.empty())
    throw Error(ErrorKind::Unsupported,
                "cocycle library needs a product-of-cyclic group, got a bare table");
  int nf = static_cast<int>(group.factor_orders.size());
  auto is_z2cube = [&] {
    return nf == 3 && group.factor_orders[0] == 2 && group.factor_orders[1] == 2 &&
           group.factor_orders[2] == 2;
  };
  // Grammar: "I" or "I^k" (single cyclic factor), "I(i)" or "I(i)^k" (factor i,
  // 1-based), "II" (= II(1,2)), "II(i,j)", "III" (Z2^3 only).
  auto parse_power = [](const std::string& s, size_t pos) {
    if (pos >= s.size()) return 1;
    if (s[pos] != '^') throw Error(ErrorKind::UnknownName, "bad cocycle name suffix '" + s + "'");
    return std::stoi(s.substr(pos + 1));
  };
  if (name.rfind("III", 0) == 0) {
    if (!is_z2cube()) throw Error(ErrorKind::Unsupported, "type-III cocycle needs Z2^3");
    ThreeCocycle c = type_three(group).power(parse_power(name, 3));
    c.check();
    return c;
  }
  if (name.rfind("II", 0) == 0) {
    if (nf < 2) throw Error(ErrorKind::Unsupported, "type-II cocycle needs at least two factors");
    int i = 0, j = 1;
    size_t pos = 2;
    if (pos < name.size() && name[pos] == '(') {
      size_t close = name.find(')', pos);
      if (close == std::string::npos) throw Error(ErrorKind::UnknownName, "bad cocycle name '" + name + "'");
      std::string args = name.substr(pos + 1, close - pos - 1);
      size_t comma = args.find(',');
      if (comma == std::string::npos) throw Error(ErrorKind::UnknownName, "bad cocycle name '" + name + "'");
      i = std::stoi(args.substr(0, comma)) - 1;
      j = std::stoi(args.substr(comma + 1)) - 1;
      pos = close + 1;
    }
    if (i < 0 || j < 0 || i >= nf || j >= nf || i == j)
      throw Error(ErrorKind::UnknownName, "bad factor pair in cocycle name '" + name + "'");
    ThreeCocycle c = type_two(group, i, j, parse_power(name, pos));
    c.check();
    return c;
  }
  if (name.rfind("I", 0) == 0) {
    int i = 0;
    size_t pos = 1;
    if (pos < name.size() && name[pos] == '(') {
      size_t close = name.find(')', pos);
      if (close == std::string::npos) throw Error(ErrorKind::UnknownName, "bad cocycle name '" + name + "'");
      i = std::stoi(name.substr(pos + 1, close - pos - 1)) - 1;
      pos = close + 1;
    }
    if (i < 0 || i >= nf) throw Error(ErrorKind::UnknownName, "bad factor index in cocycle name '" + name + "'");
    ThreeCocycle c = type_one(group, i, parse_power(name, pos));
    c.check();
    return c;
  }
  throw Error(ErrorKind::UnknownName, "unknown cocycle name '" + name + "'");
}

}  // namespace tubealg
