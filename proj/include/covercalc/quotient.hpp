#ifndef COVERCALC_QUOTIENT_HPP
#define COVERCALC_QUOTIENT_HPP

#include <string>
#include <variant>
#include <vector>

#include "covercalc/word.hpp"

namespace covercalc {

// A permutation of {0, ..., degree-1}, stored as the image list.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int degree);

  int degree() const { return static_cast<int>(map_.size()); }
  int operator()(int i) const { return map_[static_cast<std::size_t>(i)]; }

  // (a * b)(i) = a(b(i))
  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const;
  long long order() const;

  // Cycle lengths in the order cycles are discovered from 0.
  std::vector<long long> cycle_lengths() const;
  bool transitive() const;

  bool operator==(const Permutation& rhs) const = default;

private:
  std::vector<int> map_;
};

// Target of a homomorphism from a free group: either a finite(ish) abelian
// group given by invariant factors (0 = Z) or a permutation group on
// {1..degree} given by generator images.
struct AbelianTarget {
  std::vector<long long> moduli;  // one per coordinate; 0 means Z
  bool finite() const;
  long long order() const;  // product of moduli; requires finite()
};

struct PermutationTarget {
  int degree = 0;
};

// Homomorphism from the standard free basis of an ambient free group to a
// finite abelian or permutation group, given by generator images.
struct FiniteQuotientHom {
  int ambient_rank = 0;
  std::variant<AbelianTarget, PermutationTarget> target;
  std::vector<std::vector<long long>> abelian_images;  // one vector per generator
  std::vector<Permutation> perm_images;                // one permutation per generator
  bool regular = true;  // regular covers require a transitive permutation action

  bool abelian() const { return std::holds_alternative<AbelianTarget>(target); }

  static FiniteQuotientHom to_abelian(int ambient_rank, AbelianTarget t,
                                      std::vector<std::vector<long long>> images);
  static FiniteQuotientHom to_permutations(int ambient_rank, int degree,
                                           std::vector<Permutation> images,
                                           bool regular = false);
  // Trivial-target hom (every generator dies).
  static FiniteQuotientHom trivial(int ambient_rank);

  std::vector<long long> eval_abelian(const Word& w) const;
  Permutation eval_perm(const Word& w) const;
  bool kills(const Word& w) const;

  // Order of the image of w in the generated group.
  long long image_order(const Word& w) const;
};

// Right-regular permutation representation of the subgroup Q generated by
// the images: elements of Q are enumerated (identity first), and each
// ambient generator acts by right multiplication.
struct CosetAction {
  long long group_order = 0;
  std::vector<Permutation> generator_action;  // one per ambient generator
  std::vector<std::string> element_names;     // for diagnostics
};

inline constexpr long long kDefaultOrderBound = 1'000'000;

CosetAction coset_action(const FiniteQuotientHom& hom,
                         long long order_bound = kDefaultOrderBound);

// |Q| for the subgroup generated by the images (the degree of the regular
// cover); enumerates when necessary.
long long image_group_order(const FiniteQuotientHom& hom,
                            long long order_bound = kDefaultOrderBound);

}  // namespace covercalc

#endif
