#include "covercalc/quotient.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <queue>

#include "covercalc/errors.hpp"

namespace covercalc {

Permutation::Permutation(std::vector<int> images) : map_(std::move(images)) {
  std::vector<char> seen(map_.size(), 0);
  for (int v : map_) {
    if (v < 0 || v >= degree() || seen[static_cast<std::size_t>(v)])
      throw input_error("not a permutation");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> m(static_cast<std::size_t>(degree));
  std::iota(m.begin(), m.end(), 0);
  return Permutation(std::move(m));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree()) throw input_error("permutation degree mismatch");
  std::vector<int> m(map_.size());
  for (int i = 0; i < degree(); ++i)
    m[static_cast<std::size_t>(i)] = map_[static_cast<std::size_t>(rhs(i))];
  return Permutation(std::move(m));
}

Permutation Permutation::inverse() const {
  std::vector<int> m(map_.size());
  for (int i = 0; i < degree(); ++i) m[static_cast<std::size_t>(map_[static_cast<std::size_t>(i)])] = i;
  return Permutation(std::move(m));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

std::vector<long long> Permutation::cycle_lengths() const {
  std::vector<long long> lens;
  std::vector<char> seen(map_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    long long len = 0;
    int j = i;
    while (!seen[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = 1;
      j = (*this)(j);
      ++len;
    }
    lens.push_back(len);
  }
  return lens;
}

long long Permutation::order() const {
  long long o = 1;
  for (long long len : cycle_lengths()) o = std::lcm(o, len);
  return o;
}

bool Permutation::transitive() const { return cycle_lengths().size() == 1; }

bool AbelianTarget::finite() const {
  return std::all_of(moduli.begin(), moduli.end(), [](long long n) { return n > 0; });
}

long long AbelianTarget::order() const {
  long long o = 1;
  for (long long n : moduli) {
    if (n <= 0) throw input_error("abelian target is infinite");
    o *= n;
  }
  return o;
}

namespace {

std::vector<long long> reduce_vec(std::vector<long long> v, const std::vector<long long>& moduli) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (moduli[i] > 0) {
      long long r = v[i] % moduli[i];
      if (r < 0) r += moduli[i];
      v[i] = r;
    }
  }
  return v;
}

std::string vec_name(const std::vector<long long>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

}  // namespace

FiniteQuotientHom FiniteQuotientHom::to_abelian(int ambient_rank, AbelianTarget t,
                                                std::vector<std::vector<long long>> images) {
  if (static_cast<int>(images.size()) != ambient_rank)
    throw input_error("abelian hom: need one image per ambient generator");
  for (auto& img : images) {
    if (img.size() != t.moduli.size())
      throw input_error("abelian hom: image length must match target rank");
    img = reduce_vec(std::move(img), t.moduli);
  }
  FiniteQuotientHom h;
  h.ambient_rank = ambient_rank;
  h.target = std::move(t);
  h.abelian_images = std::move(images);
  h.regular = true;  // abelian quotients give regular covers
  return h;
}

FiniteQuotientHom FiniteQuotientHom::to_permutations(int ambient_rank, int degree,
                                                     std::vector<Permutation> images,
                                                     bool regular) {
  if (static_cast<int>(images.size()) != ambient_rank)
    throw input_error("permutation hom: need one image per ambient generator");
  for (const auto& p : images)
    if (p.degree() != degree) throw input_error("permutation hom: degree mismatch");
  FiniteQuotientHom h;
  h.ambient_rank = ambient_rank;
  h.target = PermutationTarget{degree};
  h.perm_images = std::move(images);
  h.regular = regular;
  return h;
}

FiniteQuotientHom FiniteQuotientHom::trivial(int ambient_rank) {
  return to_abelian(ambient_rank, AbelianTarget{{1}},
                    std::vector<std::vector<long long>>(
                        static_cast<std::size_t>(ambient_rank), {0}));
}

std::vector<long long> FiniteQuotientHom::eval_abelian(const Word& w) const {
  const auto& t = std::get<AbelianTarget>(target);
  std::vector<long long> v(t.moduli.size(), 0);
  for (Letter l : w.letters()) {
    int idx = std::abs(l);
    if (idx > ambient_rank) throw input_error("word letter outside ambient basis");
    const auto& img = abelian_images[static_cast<std::size_t>(idx - 1)];
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += (l > 0 ? img[i] : -img[i]);
  }
  return reduce_vec(std::move(v), t.moduli);
}

Permutation FiniteQuotientHom::eval_perm(const Word& w) const {
  const auto& t = std::get<PermutationTarget>(target);
  Permutation p = Permutation::identity(t.degree);
  for (Letter l : w.letters()) {
    int idx = std::abs(l);
    if (idx > ambient_rank) throw input_error("word letter outside ambient basis");
    const Permutation& g = perm_images[static_cast<std::size_t>(idx - 1)];
    p = p * (l > 0 ? g : g.inverse());
  }
  return p;
}

bool FiniteQuotientHom::kills(const Word& w) const {
  if (abelian()) {
    auto v = eval_abelian(w);
    return std::all_of(v.begin(), v.end(), [](long long c) { return c == 0; });
  }
  return eval_perm(w).is_identity();
}

long long FiniteQuotientHom::image_order(const Word& w) const {
  if (abelian()) {
    const auto& t = std::get<AbelianTarget>(target);
    if (!t.finite()) throw input_error("image_order: infinite abelian target");
    auto v = eval_abelian(w);
    long long o = 1;
    for (std::size_t i = 0; i < v.size(); ++i) {
      long long n = t.moduli[i];
      o = std::lcm(o, n / std::gcd(n, v[i] == 0 ? n : v[i]));
    }
    return o;
  }
  return eval_perm(w).order();
}

namespace {

// Enumerate the subgroup of the abelian target generated by the images.
std::vector<std::vector<long long>> enumerate_abelian(const FiniteQuotientHom& hom,
                                                      long long bound) {
  const auto& t = std::get<AbelianTarget>(hom.target);
  if (!t.finite()) throw input_error("coset_action: abelian target is infinite");
  std::map<std::vector<long long>, int> index;
  std::vector<std::vector<long long>> elems;
  std::vector<long long> id(t.moduli.size(), 0);
  elems.push_back(id);
  index[id] = 0;
  std::queue<std::size_t> work;
  work.push(0);
  while (!work.empty()) {
    auto cur = elems[work.front()];
    work.pop();
    for (const auto& img : hom.abelian_images) {
      std::vector<long long> nxt(cur.size());
      for (std::size_t i = 0; i < cur.size(); ++i) nxt[i] = cur[i] + img[i];
      nxt = reduce_vec(std::move(nxt), t.moduli);
      if (!index.count(nxt)) {
        if (static_cast<long long>(elems.size()) >= bound)
          throw resource_error("coset_action: group order bound exceeded");
        index[nxt] = static_cast<int>(elems.size());
        elems.push_back(nxt);
        work.push(elems.size() - 1);
      }
    }
  }
  return elems;
}

std::vector<Permutation> enumerate_permutation_group(const FiniteQuotientHom& hom,
                                                     long long bound) {
  std::map<std::vector<long long>, int> index;  // keyed by image list widened
  auto key = [](const Permutation& p) {
    std::vector<long long> k(static_cast<std::size_t>(p.degree()));
    for (int i = 0; i < p.degree(); ++i) k[static_cast<std::size_t>(i)] = p(i);
    return k;
  };
  const auto& t = std::get<PermutationTarget>(hom.target);
  std::vector<Permutation> elems{Permutation::identity(t.degree)};
  index[key(elems[0])] = 0;
  std::queue<std::size_t> work;
  work.push(0);
  while (!work.empty()) {
    Permutation cur = elems[work.front()];
    work.pop();
    for (const auto& g : hom.perm_images) {
      for (const Permutation& step : {g, g.inverse()}) {
        Permutation nxt = cur * step;  // right multiplication
        auto k = key(nxt);
        if (!index.count(k)) {
          if (static_cast<long long>(elems.size()) >= bound)
            throw resource_error("coset_action: group order bound exceeded");
          index[k] = static_cast<int>(elems.size());
          elems.push_back(nxt);
          work.push(elems.size() - 1);
        }
      }
    }
  }
  return elems;
}

}  // namespace

CosetAction coset_action(const FiniteQuotientHom& hom, long long order_bound) {
  CosetAction action;
  if (hom.abelian()) {
    const auto& t = std::get<AbelianTarget>(hom.target);
    if (!t.finite()) throw input_error("coset_action: infinite target unsupported");
    auto elems = enumerate_abelian(hom, order_bound);
    std::map<std::vector<long long>, int> index;
    for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
    action.group_order = static_cast<long long>(elems.size());
    for (const auto& img : hom.abelian_images) {
      std::vector<int> m(elems.size());
      for (std::size_t i = 0; i < elems.size(); ++i) {
        std::vector<long long> nxt(elems[i].size());
        for (std::size_t c = 0; c < nxt.size(); ++c) nxt[c] = elems[i][c] + img[c];
        nxt = reduce_vec(std::move(nxt), t.moduli);
        m[i] = index.at(nxt);
      }
      action.generator_action.emplace_back(std::move(m));
    }
    for (const auto& e : elems) action.element_names.push_back(vec_name(e));
    return action;
  }
  auto elems = enumerate_permutation_group(hom, order_bound);
  std::map<std::vector<int>, int> index;
  auto raw = [](const Permutation& p) {
    std::vector<int> k(static_cast<std::size_t>(p.degree()));
    for (int i = 0; i < p.degree(); ++i) k[static_cast<std::size_t>(i)] = p(i);
    return k;
  };
  for (std::size_t i = 0; i < elems.size(); ++i) index[raw(elems[i])] = static_cast<int>(i);
  action.group_order = static_cast<long long>(elems.size());
  for (const auto& g : hom.perm_images) {
    std::vector<int> m(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) m[i] = index.at(raw(elems[i] * g));
    action.generator_action.emplace_back(std::move(m));
  }
  for (std::size_t i = 0; i < elems.size(); ++i)
    action.element_names.push_back("q" + std::to_string(i));
  return action;
}

long long image_group_order(const FiniteQuotientHom& hom, long long order_bound) {
  if (hom.abelian()) return static_cast<long long>(enumerate_abelian(hom, order_bound).size());
  return static_cast<long long>(enumerate_permutation_group(hom, order_bound).size());
}

}  // namespace covercalc
