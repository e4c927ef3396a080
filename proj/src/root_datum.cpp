#include "zipcox/root_datum.hpp"

#include <algorithm>
#include <deque>

namespace zipcox {

namespace {

std::string idx(std::size_t i, std::size_t j) {
  return "[" + std::to_string(i) + "][" + std::to_string(j) + "]";
}

std::int64_t pair_int(const QVector& a, const QVector& b) {
  Rational r = dot(a, b);
  if (r.get_den() != 1 || !r.get_num().fits_slong_p())
    fail_input("pairing is not a 64-bit integer");
  return r.get_num().get_si();
}

IntVector ints(const QVector& v) {
  IntVector r;
  for (const Rational& x : v)
    r.push_back(x.get_num().get_si());
  return r;
}

std::int64_t dot_int(const IntVector& a, const IntVector& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

// Position of v in the list, or -1.
long find_vector(const std::vector<QVector>& vs, const QVector& v) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (vs[i] == v)
      return static_cast<long>(i);
  return -1;
}

} // namespace

bool is_prime(std::int64_t p) {
  if (p < 2)
    return false;
  for (std::int64_t q = 2; q * q <= p; ++q)
    if (p % q == 0)
      return false;
  return true;
}

void validate(const RootDatumSpec& s) {
  if (!is_prime(s.p))
    fail_input("p = " + std::to_string(s.p) + " is not a prime");
  std::size_t n = s.rank, r = s.simple_roots.size();
  if (s.simple_coroots.size() != r)
    fail_input("simple_roots has " + std::to_string(r) + " entries but simple_coroots has " +
               std::to_string(s.simple_coroots.size()));
  for (std::size_t i = 0; i < r; ++i) {
    for (const QVector* v : {&s.simple_roots[i], &s.simple_coroots[i]}) {
      if (v->size() != n)
        fail_input("simple (co)root " + std::to_string(i) + " has length " +
                   std::to_string(v->size()) + ", expected rank " + std::to_string(n));
      if (!v->is_integral())
        fail_input("simple (co)root " + std::to_string(i) + " is not integral");
    }
  }
  if (s.sigma_char.size() != n)
    fail_input("sigma_char must have " + std::to_string(n) + " rows");
  for (std::size_t i = 0; i < n; ++i)
    if (s.sigma_char[i].size() != n)
      fail_input("sigma_char row " + std::to_string(i) + " must have " + std::to_string(n) +
                 " entries");

  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      std::int64_t c = pair_int(s.simple_roots[i], s.simple_coroots[j]);
      std::int64_t ct = pair_int(s.simple_roots[j], s.simple_coroots[i]);
      if (i == j && c != 2)
        fail_input("Cartan diagonal: C" + idx(i, i) + " = " + std::to_string(c) + ", expected 2");
      if (i != j && c > 0)
        fail_input("Cartan off-diagonal: C" + idx(i, j) + " = " + std::to_string(c) +
                   " is positive");
      if (i != j && (c == 0) != (ct == 0))
        fail_input("Cartan zero pattern: C" + idx(i, j) + " = " + std::to_string(c) + " but C" +
                   idx(j, i) + " = " + std::to_string(ct));
    }
  if (r > 0) {
    if (rank(QMatrix(s.simple_roots, n)) != r)
      fail_input("simple roots are linearly dependent");
    if (rank(QMatrix(s.simple_coroots, n)) != r)
      fail_input("simple coroots are linearly dependent");
  }

  IMatrix S = IMatrix::from_rows(s.sigma_char);
  IMatrix Sinv;
  try {
    Sinv = S.inverse();
  } catch (const InputError&) {
    fail_input("sigma_char is not invertible over Z");
  }
  {
    IMatrix power = S;
    bool finite = false;
    for (int k = 1; k <= 5040; ++k) {
      if (power == IMatrix::identity(n)) {
        finite = true;
        break;
      }
      try {
        power = power * S;
      } catch (const ResourceError&) {
        break;
      }
    }
    if (!finite)
      fail_input("sigma_char does not have finite order");
  }
  IMatrix Scochar = Sinv.transpose();
  std::vector<bool> hit(r, false);
  for (std::size_t i = 0; i < r; ++i) {
    long j = find_vector(s.simple_roots, S * s.simple_roots[i]);
    if (j < 0)
      fail_input("sigma_char does not permute simple roots: sigma(alpha" + std::to_string(i + 1) +
                 ") = " + (S * s.simple_roots[i]).str() + " is not simple");
    if (hit[j])
      fail_input("sigma_char maps two simple roots to alpha" + std::to_string(j + 1));
    hit[j] = true;
    if (Scochar * s.simple_coroots[i] != s.simple_coroots[j])
      fail_input("sigma_cochar does not match on coroots: index pair (" + std::to_string(i) + "," +
                 std::to_string(j) + ")");
  }
}

BasedRootDatum::BasedRootDatum(RootDatumSpec spec) : spec_(std::move(spec)) {
  validate(spec_);
  std::size_t n = spec_.rank, r = num_simple();
  cartan_.assign(r, IntVector(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      cartan_[i][j] = pair_int(spec_.simple_roots[i], spec_.simple_coroots[j]);
  sigma_char_ = IMatrix::from_rows(spec_.sigma_char);
  sigma_char_inv_ = sigma_char_.inverse();
  sigma_cochar_ = sigma_char_inv_.transpose();
  sigma_cochar_inv_ = sigma_char_.transpose();
  perm_.resize(r);
  perm_inv_.resize(r);
  for (std::size_t i = 0; i < r; ++i) {
    perm_[i] = find_vector(spec_.simple_roots, sigma_char_ * spec_.simple_roots[i]);
    perm_inv_[perm_[i]] = i;
  }
  for (std::size_t i = 0; i < r; ++i) {
    IntVector a = ints(spec_.simple_roots[i]), c = ints(spec_.simple_coroots[i]);
    IMatrix s = IMatrix::identity(n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        s(x, y) = checked_add(s(x, y), -checked_mul(a[x], c[y]));
    reflections_.push_back(std::move(s));
  }
}

std::string simple_name(std::size_t i) { return "alpha" + std::to_string(i + 1); }

QVector frobenius_char(const BasedRootDatum& d, const QVector& lambda) {
  return d.sigma_char() * lambda;
}
QVector frobenius_cochar(const BasedRootDatum& d, const QVector& delta) {
  return d.sigma_cochar() * delta;
}
QVector frobenius_char_inverse(const BasedRootDatum& d, const QVector& lambda) {
  return d.sigma_char_inverse() * lambda;
}
QVector frobenius_cochar_inverse(const BasedRootDatum& d, const QVector& delta) {
  return d.sigma_cochar_inverse() * delta;
}

// --- roots ------------------------------------------------------------------

std::vector<QVector> RootSystem::all_roots() const {
  std::vector<QVector> all = positive_roots;
  for (const QVector& b : positive_roots)
    all.push_back(-b);
  return all;
}

std::optional<QVector> RootSystem::coroot_of(const QVector& root) const {
  if (!root.is_integral())
    return std::nullopt;
  auto it = index.find(ints(root));
  if (it == index.end())
    return std::nullopt;
  std::int64_t k = it->second;
  return k > 0 ? positive_coroots[k - 1] : -positive_coroots[-k - 1];
}

int RootSystem::sign(const IntVector& root) const {
  auto it = index.find(root);
  if (it == index.end())
    return 0;
  return it->second > 0 ? 1 : -1;
}

std::vector<std::size_t> RootSystem::levi_positive(const SimpleSet& I) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < positive_roots.size(); ++k) {
    bool inside = true;
    for (std::size_t j = 0; j < simple_coordinates[k].size(); ++j)
      if (simple_coordinates[k][j] != 0 && !std::binary_search(I.begin(), I.end(), j))
        inside = false;
    if (inside)
      out.push_back(k);
  }
  return out;
}

RootSystem generate_roots(const BasedRootDatum& d, std::size_t limit) {
  std::size_t r = d.num_simple();
  struct Entry {
    IntVector root, coroot, coords;
  };
  std::vector<IntVector> a(r), c(r);
  for (std::size_t i = 0; i < r; ++i) {
    a[i] = ints(d.simple_root(i));
    c[i] = ints(d.simple_coroot(i));
  }
  std::map<IntVector, Entry> seen;
  std::deque<IntVector> queue;
  for (std::size_t i = 0; i < r; ++i) {
    IntVector e(r, 0);
    e[i] = 1;
    seen[a[i]] = Entry{a[i], c[i], e};
    queue.push_back(a[i]);
  }
  while (!queue.empty()) {
    Entry cur = seen.at(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < r; ++i) {
      std::int64_t k = dot_int(cur.root, c[i]);     // ⟨β, α_i∨⟩
      std::int64_t kc = dot_int(a[i], cur.coroot);  // ⟨α_i, β∨⟩
      Entry nxt = cur;
      for (std::size_t x = 0; x < a[i].size(); ++x) {
        nxt.root[x] = checked_add(nxt.root[x], -checked_mul(k, a[i][x]));
        nxt.coroot[x] = checked_add(nxt.coroot[x], -checked_mul(kc, c[i][x]));
      }
      nxt.coords[i] = checked_add(nxt.coords[i], -k);
      if (seen.count(nxt.root))
        continue;
      if (seen.size() >= limit)
        throw ResourceError("root enumeration exceeded the limit of " + std::to_string(limit));
      seen.emplace(nxt.root, nxt);
      queue.push_back(nxt.root);
    }
  }

  std::vector<Entry> pos;
  for (auto& [key, e] : seen) {
    bool nonneg = std::all_of(e.coords.begin(), e.coords.end(), [](auto x) { return x >= 0; });
    bool nonpos = std::all_of(e.coords.begin(), e.coords.end(), [](auto x) { return x <= 0; });
    if (nonneg == nonpos)
      fail_defect("root with mixed-sign simple coordinates; datum is not of finite type");
    if (nonneg)
      pos.push_back(e);
  }
  auto height = [](const Entry& e) {
    std::int64_t h = 0;
    for (auto x : e.coords)
      h += x;
    return h;
  };
  std::sort(pos.begin(), pos.end(), [&](const Entry& x, const Entry& y) {
    if (height(x) != height(y))
      return height(x) < height(y);
    return x.coords > y.coords;
  });
  RootSystem rs;
  for (std::size_t k = 0; k < pos.size(); ++k) {
    rs.positive_roots.push_back(QVector::from_ints(pos[k].root));
    rs.positive_coroots.push_back(QVector::from_ints(pos[k].coroot));
    rs.simple_coordinates.push_back(pos[k].coords);
    rs.index[pos[k].root] = static_cast<std::int64_t>(k + 1);
    IntVector neg = pos[k].root;
    for (auto& x : neg)
      x = -x;
    rs.index[neg] = -static_cast<std::int64_t>(k + 1);
  }
  if (rs.index.size() != seen.size())
    fail_defect("root system is not symmetric under negation");
  return rs;
}

IMatrix longest_element_matrix(const BasedRootDatum& d, const RootSystem& roots,
                               const SimpleSet& I) {
  std::size_t n = d.rank();
  IMatrix w = IMatrix::identity(n), winv = IMatrix::identity(n);
  std::vector<IntVector> a;
  for (std::size_t i = 0; i < d.num_simple(); ++i)
    a.push_back(ints(d.simple_root(i)));
  for (;;) {
    bool grew = false;
    for (std::size_t i : I) {
      if (roots.sign(winv * a[i]) > 0) {   // ℓ(s_i w) > ℓ(w)
        w = d.reflection(i) * w;
        winv = winv * d.reflection(i);
        grew = true;
        break;
      }
    }
    if (!grew)
      return w;
  }
}

// --- builders ---------------------------------------------------------------

RootDatumSpec gl_spec(std::size_t n, std::int64_t p) {
  RootDatumSpec s;
  s.p = p;
  s.rank = n;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    QVector a(n);
    a[i] = 1;
    a[i + 1] = -1;
    s.simple_roots.push_back(a);
    s.simple_coroots.push_back(a);
  }
  s.sigma_char.assign(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    s.sigma_char[i][i] = 1;
  return s;
}

RootDatumSpec unitary_spec(std::size_t n, std::int64_t p) {
  RootDatumSpec s = gl_spec(n, p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      s.sigma_char[i][j] = (i + j == n - 1) ? -1 : 0;
  return s;
}

RootDatumSpec sl2_spec(std::int64_t p) {
  RootDatumSpec s;
  s.p = p;
  s.rank = 1;
  s.simple_roots = {QVector{2}};
  s.simple_coroots = {QVector{1}};
  s.sigma_char = {{1}};
  return s;
}

RootDatumSpec weil_restriction_spec(const RootDatumSpec& base, std::size_t k) {
  if (k == 0)
    fail_input("Weil restriction degree must be positive");
  std::size_t m = base.rank;
  RootDatumSpec s;
  s.p = base.p;
  s.rank = m * k;
  for (std::size_t b = 0; b < k; ++b)
    for (std::size_t i = 0; i < base.simple_roots.size(); ++i) {
      QVector a(s.rank), c(s.rank);
      for (std::size_t x = 0; x < m; ++x) {
        a[b * m + x] = base.simple_roots[i][x];
        c[b * m + x] = base.simple_coroots[i][x];
      }
      s.simple_roots.push_back(a);
      s.simple_coroots.push_back(c);
    }
  // block b goes to block b+1; the last block wraps around through base σ
  s.sigma_char.assign(s.rank, IntVector(s.rank, 0));
  for (std::size_t b = 0; b < k; ++b) {
    std::size_t to = (b + 1) % k;
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = 0; y < m; ++y) {
        std::int64_t v = (to == 0) ? base.sigma_char[x][y] : (x == y ? 1 : 0);
        s.sigma_char[to * m + x][b * m + y] = v;
      }
  }
  return s;
}

RootDatumSpec direct_sum(const RootDatumSpec& a, const RootDatumSpec& b) {
  if (a.p != b.p)
    fail_input("direct product needs equal p, got " + std::to_string(a.p) + " and " +
               std::to_string(b.p));
  RootDatumSpec s;
  s.p = a.p;
  s.rank = a.rank + b.rank;
  for (std::size_t i = 0; i < a.simple_roots.size(); ++i) {
    s.simple_roots.push_back(concat(a.simple_roots[i], QVector(b.rank)));
    s.simple_coroots.push_back(concat(a.simple_coroots[i], QVector(b.rank)));
  }
  for (std::size_t i = 0; i < b.simple_roots.size(); ++i) {
    s.simple_roots.push_back(concat(QVector(a.rank), b.simple_roots[i]));
    s.simple_coroots.push_back(concat(QVector(a.rank), b.simple_coroots[i]));
  }
  s.sigma_char.assign(s.rank, IntVector(s.rank, 0));
  for (std::size_t i = 0; i < a.rank; ++i)
    for (std::size_t j = 0; j < a.rank; ++j)
      s.sigma_char[i][j] = a.sigma_char[i][j];
  for (std::size_t i = 0; i < b.rank; ++i)
    for (std::size_t j = 0; j < b.rank; ++j)
      s.sigma_char[a.rank + i][a.rank + j] = b.sigma_char[i][j];
  return s;
}

} // namespace zipcox
