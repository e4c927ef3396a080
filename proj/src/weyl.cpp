#include "zipcox/weyl.hpp"

#include <algorithm>

namespace zipcox {

namespace {

std::string key_of(const IMatrix& m) {
  const auto& d = m.data();
  return std::string(reinterpret_cast<const char*>(d.data()), d.size() * sizeof(std::int64_t));
}

} // namespace

std::string word_string(const std::vector<std::size_t>& word) {
  if (word.empty())
    return "e";
  std::string s;
  for (std::size_t i : word)
    s += "s" + std::to_string(i + 1);
  return s;
}

WeylGroup::WeylGroup(const BasedRootDatum& d, const RootSystem& roots, std::size_t limit)
    : datum_(&d), roots_(&roots) {
  std::size_t r = d.num_simple();
  elems_.push_back(WeylElement{IMatrix::identity(d.rank()), 0, {}});
  lookup_[key_of(elems_[0].action)] = 0;
  std::size_t level_begin = 0, level_end = 1;
  int len = 0;
  while (level_begin < level_end) {
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t w = level_begin; w < level_end; ++w) {
        IMatrix m = d.reflection(i) * elems_[w].action;
        std::string k = key_of(m);
        if (lookup_.count(k))
          continue;
        if (elems_.size() >= limit)
          throw ResourceError("Weyl group enumeration exceeded the limit of " +
                              std::to_string(limit));
        std::vector<std::size_t> word{i};
        word.insert(word.end(), elems_[w].reduced_word.begin(), elems_[w].reduced_word.end());
        lookup_.emplace(std::move(k), elems_.size());
        elems_.push_back(WeylElement{std::move(m), len + 1, std::move(word)});
      }
    level_begin = level_end;
    level_end = elems_.size();
    ++len;
  }

  std::size_t N = elems_.size();
  left_.assign(r, std::vector<std::size_t>(N));
  right_.assign(r, std::vector<std::size_t>(N));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t w = 0; w < N; ++w) {
      left_[i][w] = find(d.reflection(i) * elems_[w].action);
      right_[i][w] = find(elems_[w].action * d.reflection(i));
    }
  sigma_.resize(N);
  sigma_inv_.resize(N);
  for (std::size_t w = 0; w < N; ++w) {
    sigma_[w] = find(d.sigma_char() * elems_[w].action * d.sigma_char_inverse());
    sigma_inv_[sigma_[w]] = w;
  }
}

std::size_t WeylGroup::find(const IMatrix& action) const {
  auto it = lookup_.find(key_of(action));
  if (it == lookup_.end())
    fail_defect("matrix is not an element of the Weyl group");
  return it->second;
}

std::size_t WeylGroup::multiply(std::size_t a, std::size_t b) const {
  const auto& word = elems_[a].reduced_word;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    b = left_[*it][b];
  return b;
}

std::size_t WeylGroup::inverse(std::size_t w) const {
  std::size_t r = 0;
  for (std::size_t i : elems_[w].reduced_word)
    r = left_[i][r];
  return r;
}

std::size_t WeylGroup::sigma(std::size_t w) const { return sigma_[w]; }
std::size_t WeylGroup::sigma_inverse(std::size_t w) const { return sigma_inv_[w]; }

int WeylGroup::inversion_count(std::size_t w) const {
  const IMatrix& winv = elems_[inverse(w)].action;
  int count = 0;
  for (const QVector& b : roots_->positive_roots)
    if (roots_->sign(winv * b.to_ints()) < 0)
      ++count;
  return count;
}

bool WeylGroup::in_parabolic(std::size_t w, const SimpleSet& I) const {
  for (std::size_t i : elems_[w].reduced_word)
    if (!std::binary_search(I.begin(), I.end(), i))
      return false;
  return true;
}

std::vector<std::size_t> WeylGroup::parabolic_subgroup(const SimpleSet& I) const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < size(); ++w)
    if (in_parabolic(w, I))
      out.push_back(w);
  return out;
}

std::size_t WeylGroup::longest_element(const SimpleSet& I) const {
  std::size_t best = 0;
  for (std::size_t w : parabolic_subgroup(I))
    if (length(w) > length(best))
      best = w;
  return best;
}

bool WeylGroup::bruhat_leq(std::size_t a, std::size_t b) const {
  if (a == b)
    return true;
  if (length(a) >= length(b))
    return false;
  // lifting property along the first letter of b, which is a left descent
  std::size_t i = elems_[b].reduced_word.front();
  std::size_t a2 = is_left_descent(i, a) ? left_mult(i, a) : a;
  return bruhat_leq(a2, left_mult(i, b));
}

std::vector<std::size_t> WeylGroup::minimal_coset_reps(const SimpleSet& I) const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < size(); ++w) {
    bool minimal = true;
    for (std::size_t i : I)
      if (is_left_descent(i, w))
        minimal = false;
    if (minimal)
      out.push_back(w);
  }
  return out;
}

bool WeylGroup::twisted_leq(std::size_t a, std::size_t b, const SimpleSet& I) const {
  // conjugate the smaller element; conjugating b instead is not antisymmetric
  for (std::size_t w1 : parabolic_subgroup(I)) {
    std::size_t c = multiply(multiply(w1, a), inverse(sigma(w1)));
    if (bruhat_leq(c, b))
      return true;
  }
  return false;
}

std::vector<std::pair<std::size_t, std::size_t>> StrataPoset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::size_t n = strata.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !order[a][b])
        continue;
      bool direct = true;
      for (std::size_t c = 0; c < n && direct; ++c)
        if (c != a && c != b && order[a][c] && order[c][b])
          direct = false;
      if (direct)
        out.emplace_back(a, b);
    }
  return out;
}

StrataPoset strata_poset(const ZipDatum& z, const WeylGroup& W) {
  StrataPoset P;
  P.dim_P = z.dim_P();
  P.dim_G = z.dim_G();
  std::vector<std::size_t> reps = W.minimal_coset_reps(z.levi());
  for (std::size_t w : reps)
    P.strata.push_back(Stratum{w, W.length(w), W.length(w) + P.dim_P, W[w].reduced_word});
  std::size_t n = reps.size();
  P.order.assign(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      P.order[a][b] = W.twisted_leq(reps[a], reps[b], z.levi());

  SimpleSet all(z.datum().num_simple());
  for (std::size_t i = 0; i < all.size(); ++i)
    all[i] = i;
  std::size_t w0 = W.longest_element(all), w0I = W.longest_element(z.levi());
  auto position = [&](std::size_t w) {
    auto it = std::find(reps.begin(), reps.end(), w);
    if (it == reps.end())
      fail_defect("expected element " + word_string(W[w].reduced_word) + " to lie in IW");
    return static_cast<std::size_t>(it - reps.begin());
  };
  P.top = position(W.multiply(w0I, w0));
  for (std::size_t a : z.parabolic())
    P.codim_one.push_back(position(W.multiply(W.multiply(w0I, W.left_mult(a, 0)), w0)));
  return P;
}

std::size_t z_element(const ZipDatum& z, const WeylGroup& W) {
  SimpleSet all(z.datum().num_simple());
  for (std::size_t i = 0; i < all.size(); ++i)
    all[i] = i;
  return W.multiply(W.sigma(W.longest_element(z.levi())), W.longest_element(all));
}

} // namespace zipcox
