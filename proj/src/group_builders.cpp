#include <sstream>

#include "haarcay/error.hpp"
#include "haarcay/group.hpp"

namespace haarcay {

namespace {

std::string power_name(const char *gen, std::size_t k) {
  if (k == 0) return "1";
  if (k == 1) return gen;
  return std::string(gen) + "^" + std::to_string(k);
}

long long mod(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

} // namespace

FiniteGroup build_cyclic(std::size_t n) {
  if (n == 0) fail(ErrorCode::invalid_parameter, "cyclic group needs n >= 1");
  if (n > kMaxGroupOrder) fail(ErrorCode::resource_limit, "cyclic group too large");
  std::vector<Elem> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = static_cast<Elem>((i + j) % n);
  return FiniteGroup(n, std::move(table), {});
}

FiniteGroup build_dihedral(std::size_t n) {
  if (n < 2) fail(ErrorCode::invalid_parameter, "dihedral group needs n >= 2");
  if (2 * n > kMaxGroupOrder) fail(ErrorCode::resource_limit, "dihedral group too large");
  const std::size_t order = 2 * n;
  std::vector<Elem> table(order * order);
  // a^i b^e * a^j b^f = a^(i + (-1)^e j) b^(e+f)
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t i = x % n, e = x / n;
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t j = y % n, f = y / n;
      const std::size_t k = e ? (i + n - j) % n : (i + j) % n;
      table[x * order + y] = static_cast<Elem>(k + n * (e ^ f));
    }
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(power_name("a", i));
  for (std::size_t i = 0; i < n; ++i)
    names.push_back(i == 0 ? std::string("b") : power_name("a", i) + "*b");
  return FiniteGroup(order, std::move(table), std::move(names));
}

FiniteGroup build_generalized_dihedral(const FiniteGroup &a) {
  if (!a.is_abelian())
    fail(ErrorCode::invalid_parameter, "generalized dihedral group needs an abelian group");
  const std::size_t n = a.order(), order = 2 * n;
  if (order > kMaxGroupOrder)
    fail(ErrorCode::resource_limit, "generalized dihedral group too large");
  std::vector<Elem> table(order * order);
  // (x,e)(y,f) = (x * y^((-1)^e), e+f)
  for (Elem x = 0; x < order; ++x) {
    const Elem xa = x % n, e = x / n;
    for (Elem y = 0; y < order; ++y) {
      const Elem ya = y % n, f = y / n;
      const Elem prod = a.mul(xa, e ? a.inv(ya) : ya);
      table[x * order + y] = prod + static_cast<Elem>(n) * (e ^ f);
    }
  }
  std::vector<std::string> names;
  for (Elem x = 0; x < n; ++x) names.push_back(a.name(x));
  for (Elem x = 0; x < n; ++x)
    names.push_back(x == a.identity() ? std::string("t") : a.name(x) + "*t");
  return FiniteGroup(order, std::move(table), std::move(names));
}

FiniteGroup build_direct_product(const FiniteGroup &g, const FiniteGroup &h) {
  const std::size_t m = g.order(), n = h.order(), order = m * n;
  if (order > kMaxGroupOrder) fail(ErrorCode::resource_limit, "direct product too large");
  std::vector<Elem> table(order * order);
  for (Elem x = 0; x < order; ++x)
    for (Elem y = 0; y < order; ++y) {
      const Elem a = g.mul(x / static_cast<Elem>(n), y / static_cast<Elem>(n));
      const Elem b = h.mul(x % static_cast<Elem>(n), y % static_cast<Elem>(n));
      table[x * order + y] = a * static_cast<Elem>(n) + b;
    }
  std::vector<std::string> names;
  for (Elem x = 0; x < m; ++x)
    for (Elem y = 0; y < n; ++y) names.push_back("(" + g.name(x) + "," + h.name(y) + ")");
  return FiniteGroup(order, std::move(table), std::move(names));
}

FiniteGroup build_quaternion() {
  // unit u in {1,i,j,k} = 0..3 with sign; index = 2u + (negative ? 1 : 0)
  static constexpr int unit_mul[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int unit_sign[4][4] = {
      {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  std::vector<Elem> table(64);
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      const int ux = x / 2, uy = y / 2;
      int sign = (x % 2 ? -1 : 1) * (y % 2 ? -1 : 1) * unit_sign[ux][uy];
      table[x * 8 + y] = static_cast<Elem>(2 * unit_mul[ux][uy] + (sign < 0 ? 1 : 0));
    }
  return FiniteGroup(8, std::move(table), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

FiniteGroup build_metacyclic(long long m, long long r, long long s, long long t) {
  if (m < 1 || s < 1)
    fail(ErrorCode::invalid_presentation, "metacyclic presentation needs m >= 1 and s >= 1");
  if (m * s > static_cast<long long>(kMaxGroupOrder))
    fail(ErrorCode::resource_limit, "metacyclic group too large");
  r = mod(r, m);
  t = mod(t, m);
  const long long order = m * s;
  std::vector<long long> rpow(static_cast<std::size_t>(s) + 1, 1);
  for (long long l = 1; l <= s; ++l) rpow[l] = mod(rpow[l - 1] * r, m);

  // b^j a^i * b^l a^k = b^(j+l) a^(i r^l + k); b^s = a^t.
  std::vector<Elem> table(static_cast<std::size_t>(order * order));
  for (long long x = 0; x < order; ++x) {
    const long long j = x / m, i = x % m;
    for (long long y = 0; y < order; ++y) {
      const long long l = y / m, k = y % m;
      long long bj = j + l, ai = i * rpow[l] + k;
      if (bj >= s) {
        bj -= s;
        ai += t;
      }
      table[static_cast<std::size_t>(x * order + y)] = static_cast<Elem>(bj * m + mod(ai, m));
    }
  }
  std::vector<std::string> names;
  for (long long j = 0; j < s; ++j)
    for (long long i = 0; i < m; ++i) {
      if (j == 0) names.push_back(power_name("a", static_cast<std::size_t>(i)));
      else if (i == 0) names.push_back(power_name("b", static_cast<std::size_t>(j)));
      else
        names.push_back(power_name("b", static_cast<std::size_t>(j)) + "*" +
                        power_name("a", static_cast<std::size_t>(i)));
    }
  try {
    return FiniteGroup(static_cast<std::size_t>(order), std::move(table), std::move(names));
  } catch (const Error &e) {
    if (e.code() != ErrorCode::invalid_presentation) throw;
    std::ostringstream os;
    os << "metacyclic:" << m << "," << r << "," << s << "," << t
       << " is inconsistent: " << e.what();
    fail(ErrorCode::invalid_presentation, os.str());
  }
}

FiniteGroup read_table_group(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::size_t n = 0;
  if (!(in >> n) || n == 0) fail(ErrorCode::parse_error, "table: missing group order");
  if (n > kMaxGroupOrder) fail(ErrorCode::resource_limit, "table: group order exceeds cap");
  std::vector<Elem> table(n * n);
  for (auto &v : table) {
    long long x;
    if (!(in >> x)) fail(ErrorCode::parse_error, "table: expected order^2 entries");
    if (x < 0 || static_cast<std::size_t>(x) >= n)
      fail(ErrorCode::parse_error, "table: entry out of range");
    v = static_cast<Elem>(x);
  }
  std::vector<std::string> names;
  std::string name;
  while (in >> name) names.push_back(name);
  if (!names.empty() && names.size() != n)
    fail(ErrorCode::parse_error, "table: names line must list exactly `order` names");
  return FiniteGroup(n, std::move(table), std::move(names));
}

} // namespace haarcay
