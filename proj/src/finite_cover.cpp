#include "covercalc/finite_cover.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "covercalc/errors.hpp"

namespace covercalc {

long long CoverResult::total_lifts(std::size_t peripheral) const {
  long long t = 0;
  for (const auto& l : peripheral_lifts[peripheral]) t += l.count;
  return t;
}

FiniteQuotientHom mod_n_hom(const FiniteSurface& s, long long n) {
  if (n < 2) throw input_error("mod_n_hom: n must be at least 2");
  int rank = s.generator_count();
  AbelianTarget target{std::vector<long long>(static_cast<std::size_t>(rank), n)};
  std::vector<std::vector<long long>> images;
  for (int i = 0; i < rank; ++i) {
    std::vector<long long> e(static_cast<std::size_t>(rank), 0);
    e[static_cast<std::size_t>(i)] = 1;
    images.push_back(std::move(e));
  }
  return FiniteQuotientHom::to_abelian(rank, std::move(target), std::move(images));
}

bool lifts_closed(const Word& w, const FiniteQuotientHom& hom) { return hom.kills(w); }

namespace {

bool action_transitive(const FiniteQuotientHom& hom) {
  const auto& t = std::get<PermutationTarget>(hom.target);
  std::vector<char> seen(static_cast<std::size_t>(t.degree), 0);
  std::queue<int> work;
  work.push(0);
  seen[0] = 1;
  int count = 1;
  while (!work.empty()) {
    int v = work.front();
    work.pop();
    for (const auto& g : hom.perm_images) {
      for (int u : {g(v), g.inverse()(v)}) {
        if (!seen[static_cast<std::size_t>(u)]) {
          seen[static_cast<std::size_t>(u)] = 1;
          ++count;
          work.push(u);
        }
      }
    }
  }
  return count == t.degree;
}

}  // namespace

CoverResult cover_type(const FiniteSurface& s, const FiniteQuotientHom& hom, bool regular) {
  if (hom.ambient_rank != s.generator_count())
    throw input_error("cover_type: hom rank does not match the surface basis");
  if (s.closed() && !hom.kills(surface_relation_word(s)))
    throw input_error("cover_type: images do not kill the surface relator (not a homomorphism)");

  const auto peripherals = peripheral_words(s);
  CoverResult result;

  if (regular) {
    result.degree = image_group_order(hom);
    for (const auto& w : peripherals) {
      long long order = hom.image_order(w);
      if (result.degree % order != 0)
        throw internal_error("cover_type: peripheral order does not divide the degree");
      result.peripheral_lifts.push_back({PeripheralLift{order, result.degree / order}});
    }
  } else {
    if (hom.abelian())
      throw input_error("cover_type: irregular covers need a permutation target");
    if (!action_transitive(hom))
      throw input_error("cover_type: permutation action is not transitive (cover disconnected)");
    result.degree = std::get<PermutationTarget>(hom.target).degree;
    for (const auto& w : peripherals) {
      std::map<long long, long long> by_length;
      for (long long len : hom.eval_perm(w).cycle_lengths()) ++by_length[len];
      std::vector<PeripheralLift> lifts;
      for (const auto& [order, count] : by_length) lifts.push_back({order, count});
      result.peripheral_lifts.push_back(std::move(lifts));
    }
  }

  // Each base peripheral contributes total_lifts covers of its own kind.
  long long cover_boundary = 0, cover_punctures = 0;
  for (std::size_t k = 0; k < peripherals.size(); ++k) {
    long long lifts = result.total_lifts(k);
    if (static_cast<int>(k) < s.boundary)
      cover_boundary += lifts;
    else
      cover_punctures += lifts;
  }

  long long chi_cover = result.degree * s.chi();
  long long two_genus = 2 - chi_cover - cover_boundary - cover_punctures;
  if (two_genus < 0 || two_genus % 2 != 0)
    throw internal_error("cover_type: Euler characteristic accounting failed");

  result.cover.genus = static_cast<int>(two_genus / 2);
  result.cover.boundary = static_cast<int>(cover_boundary);
  result.cover.punctures = static_cast<int>(cover_punctures);

  if (result.cover.chi() != chi_cover)
    throw internal_error("cover_type: chi multiplicativity violated");
  for (std::size_t k = 0; k < peripherals.size(); ++k) {
    long long sum = 0;
    for (const auto& l : result.peripheral_lifts[k]) sum += l.order * l.count;
    if (sum != result.degree)
      throw internal_error("cover_type: peripheral lift orders do not sum to the degree");
  }
  return result;
}

}  // namespace covercalc
