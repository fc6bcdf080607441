#include "covercalc/group_spec.hpp"

#include <algorithm>
#include <cstdlib>

#include "covercalc/errors.hpp"

namespace covercalc {

GroupSpec GroupSpec::zk(int k) {
  if (k < 1) throw input_error("Zk: k must be positive");
  GroupSpec g;
  g.spec_ = Zk{k};
  return g;
}

GroupSpec GroupSpec::free_group(int rank) {
  if (rank < 1) throw input_error("free group: rank must be positive");
  GroupSpec g;
  g.spec_ = Free{rank};
  return g;
}

GroupSpec GroupSpec::free_product(std::vector<long long> factors) {
  if (factors.size() < 2) throw input_error("free product: need at least two factors");
  for (long long f : factors)
    if (f != 0 && f < 2) throw input_error("free product: factors are Z (0) or Z/n, n >= 2");
  GroupSpec g;
  g.spec_ = FreeProduct{std::move(factors)};
  return g;
}

GroupSpec GroupSpec::finite_table(std::vector<std::vector<int>> table, std::vector<int> gens) {
  int n = static_cast<int>(table.size());
  if (n == 0) throw input_error("finite table: empty");
  for (const auto& row : table)
    if (static_cast<int>(row.size()) != n) throw input_error("finite table: not square");
  for (int i = 0; i < n; ++i)
    if (table[0][static_cast<std::size_t>(i)] != i || table[static_cast<std::size_t>(i)][0] != i)
      throw input_error("finite table: element 0 must be the identity");
  if (gens.empty()) throw input_error("finite table: need generators");
  GroupSpec g;
  g.spec_ = FiniteTable{std::move(table), std::move(gens)};
  return g;
}

GroupSpec GroupSpec::cyclic(long long n) {
  if (n < 1) throw input_error("cyclic: order must be positive");
  std::vector<std::vector<int>> table(static_cast<std::size_t>(n),
                                      std::vector<int>(static_cast<std::size_t>(n)));
  for (long long a = 0; a < n; ++a)
    for (long long b = 0; b < n; ++b)
      table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          static_cast<int>((a + b) % n);
  return finite_table(std::move(table), {n == 1 ? 0 : 1});
}

int GroupSpec::generator_count() const {
  if (auto* z = std::get_if<Zk>(&spec_)) return z->k;
  if (auto* f = std::get_if<Free>(&spec_)) return f->rank;
  if (auto* p = std::get_if<FreeProduct>(&spec_)) return static_cast<int>(p->factors.size());
  return static_cast<int>(std::get<FiniteTable>(spec_).generators.size());
}

std::string GroupSpec::generator_name(int index) const {
  static const char* kFactorNames = "stuv";
  if (std::holds_alternative<FreeProduct>(spec_) && index <= 4)
    return std::string(1, kFactorNames[index - 1]);
  return "g" + std::to_string(index);
}

GroupSpec::Elem GroupSpec::identity() const {
  if (std::holds_alternative<FiniteTable>(spec_)) return {0};
  if (auto* z = std::get_if<Zk>(&spec_)) return Elem(static_cast<std::size_t>(z->k), 0);
  return {};
}

GroupSpec::Elem GroupSpec::generator(int index) const {
  if (index < 1 || index > generator_count())
    throw input_error("generator index out of range");
  if (auto* z = std::get_if<Zk>(&spec_)) {
    Elem e(static_cast<std::size_t>(z->k), 0);
    e[static_cast<std::size_t>(index - 1)] = 1;
    return e;
  }
  if (std::holds_alternative<Free>(spec_)) return {index};
  if (std::holds_alternative<FreeProduct>(spec_)) return {index - 1, 1};
  return {std::get<FiniteTable>(spec_).generators[static_cast<std::size_t>(index - 1)]};
}

namespace {

// Normalize one syllable exponent for a factor (0 = Z): finite factors live
// in [1, n-1]; returns 0 when the syllable dies.
long long norm_exp(long long factor, long long e) {
  if (factor == 0) return e;
  e %= factor;
  if (e < 0) e += factor;
  return e;
}

}  // namespace

GroupSpec::Elem GroupSpec::multiply(const Elem& a, const Elem& b) const {
  if (auto* z = std::get_if<Zk>(&spec_)) {
    Elem out(static_cast<std::size_t>(z->k));
    for (int i = 0; i < z->k; ++i)
      out[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)] + b[static_cast<std::size_t>(i)];
    return out;
  }
  if (std::holds_alternative<Free>(spec_)) {
    Elem out = a;
    for (int l : b) {
      if (!out.empty() && out.back() == -l)
        out.pop_back();
      else
        out.push_back(l);
    }
    return out;
  }
  if (auto* p = std::get_if<FreeProduct>(&spec_)) {
    Elem out = a;
    for (std::size_t i = 0; i + 1 < b.size() + 1 && i < b.size(); i += 2) {
      int factor = b[i];
      long long exp = b[i + 1];
      if (!out.empty() && out[out.size() - 2] == factor) {
        long long merged = norm_exp(p->factors[static_cast<std::size_t>(factor)],
                                    out.back() + exp);
        if (merged == 0) {
          out.pop_back();
          out.pop_back();
        } else {
          out.back() = static_cast<int>(merged);
        }
      } else {
        long long e = norm_exp(p->factors[static_cast<std::size_t>(factor)], exp);
        if (e != 0) {
          out.push_back(factor);
          out.push_back(static_cast<int>(e));
        }
      }
    }
    return out;
  }
  const auto& t = std::get<FiniteTable>(spec_);
  return {t.table[static_cast<std::size_t>(a[0])][static_cast<std::size_t>(b[0])]};
}

GroupSpec::Elem GroupSpec::inverse(const Elem& a) const {
  if (std::holds_alternative<Zk>(spec_)) {
    Elem out = a;
    for (int& x : out) x = -x;
    return out;
  }
  if (std::holds_alternative<Free>(spec_)) {
    Elem out(a.rbegin(), a.rend());
    for (int& x : out) x = -x;
    return out;
  }
  if (auto* p = std::get_if<FreeProduct>(&spec_)) {
    Elem out;
    for (std::size_t i = a.size(); i >= 2; i -= 2) {
      int factor = a[i - 2];
      long long e = norm_exp(p->factors[static_cast<std::size_t>(factor)],
                             -static_cast<long long>(a[i - 1]));
      out.push_back(factor);
      out.push_back(static_cast<int>(e));
    }
    return out;
  }
  const auto& t = std::get<FiniteTable>(spec_);
  for (std::size_t j = 0; j < t.table.size(); ++j)
    if (t.table[static_cast<std::size_t>(a[0])][j] == 0) return {static_cast<int>(j)};
  throw internal_error("finite table has no inverse");
}

GroupSpec::Elem GroupSpec::eval(const Word& w) const {
  Elem out = identity();
  for (Letter l : w.letters()) {
    Elem g = generator(std::abs(l));
    if (l < 0) g = inverse(g);
    out = multiply(out, g);
  }
  return out;
}

std::string GroupSpec::elem_name(const Elem& a) const {
  if (std::holds_alternative<Zk>(spec_)) {
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(a[i]);
    }
    return s + ")";
  }
  if (std::holds_alternative<Free>(spec_)) {
    if (a.empty()) return "1";
    std::string s;
    for (int l : a) {
      s += generator_name(std::abs(l));
      if (l < 0) s += "'";
    }
    return s;
  }
  if (std::holds_alternative<FreeProduct>(spec_)) {
    if (a.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i + 1 < a.size(); i += 2) {
      s += generator_name(a[i] + 1);
      if (a[i + 1] != 1) s += "^" + std::to_string(a[i + 1]);
    }
    return s;
  }
  return "e" + std::to_string(a[0]);
}

std::string GroupSpec::str() const {
  if (auto* z = std::get_if<Zk>(&spec_)) return "Z^" + std::to_string(z->k);
  if (auto* f = std::get_if<Free>(&spec_)) return "F" + std::to_string(f->rank);
  if (auto* p = std::get_if<FreeProduct>(&spec_)) {
    std::string s;
    for (std::size_t i = 0; i < p->factors.size(); ++i) {
      if (i) s += "*";
      s += p->factors[i] == 0 ? "Z" : "Z/" + std::to_string(p->factors[i]);
    }
    return s;
  }
  return "finite(" + std::to_string(std::get<FiniteTable>(spec_).table.size()) + ")";
}

std::vector<GroupSpec::Elem> GroupSpec::symmetric_generators() const {
  std::vector<Elem> out;
  for (int i = 1; i <= generator_count(); ++i) {
    Elem g = generator(i);
    Elem gi = inverse(g);
    if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
    if (std::find(out.begin(), out.end(), gi) == out.end()) out.push_back(gi);
  }
  return out;
}

int CayleyBall::id_of(const GroupSpec::Elem& e) const {
  auto it = index.find(e);
  return it == index.end() ? -1 : it->second;
}

CayleyBall cayley_ball(const GroupSpec& g, int radius, std::size_t bound) {
  if (radius < 0) throw input_error("cayley_ball: radius must be nonnegative");
  CayleyBall ball;
  ball.radius = radius;
  auto gens = g.symmetric_generators();
  ball.elems.push_back(g.identity());
  ball.dist.push_back(0);
  ball.index.emplace(g.identity(), 0);
  std::size_t head = 0;
  while (head < ball.elems.size()) {
    GroupSpec::Elem cur = ball.elems[head];
    int d = ball.dist[head];
    ++head;
    if (d == radius) continue;
    for (const auto& s : gens) {
      GroupSpec::Elem nxt = g.multiply(s, cur);  // left multiplication
      if (ball.index.count(nxt)) continue;
      if (ball.elems.size() >= bound) throw resource_error("cayley_ball: size bound exceeded");
      ball.index.emplace(nxt, static_cast<int>(ball.elems.size()));
      ball.elems.push_back(std::move(nxt));
      ball.dist.push_back(d + 1);
    }
  }
  ball.adj.resize(ball.elems.size());
  ball.exhausted = true;
  for (std::size_t i = 0; i < ball.elems.size(); ++i) {
    for (const auto& s : gens) {
      auto it = ball.index.find(g.multiply(s, ball.elems[i]));
      if (it == ball.index.end())
        ball.exhausted = false;
      else if (it->second != static_cast<int>(i))
        ball.adj[i].push_back(it->second);
    }
  }
  for (auto& a : ball.adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  return ball;
}

}  // namespace covercalc
