#ifndef COVERCALC_WORD_HPP
#define COVERCALC_WORD_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace covercalc {

// A letter is a nonzero signed generator index: +i is the i-th generator,
// -i its inverse. Indices are 1-based.
using Letter = int;

// A word in a free group, stored as a letter sequence. Words are plain
// values; all operations return new words.
class Word {
public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);
  Word(std::initializer_list<Letter> letters);

  static Word generator(int index) { return Word({index}); }

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  // Largest generator index appearing (0 for the empty word).
  int max_index() const;

  bool reduced() const;
  bool cyclically_reduced() const;

  Word inverse() const;

  // Concatenation followed by free reduction.
  Word operator*(const Word& rhs) const;

  bool operator==(const Word& rhs) const = default;

  std::string str() const;  // e.g. "a1 b1^-1" in the standard basis

private:
  std::vector<Letter> letters_;
};

// Free reduction; with cyclic=true also strips matching first/last letters.
Word reduce_word(const Word& w, bool cyclic = false);

// Exponent-sum vector of length rank; entries reduced mod moduli[i] when
// moduli is given (0 meaning no reduction). Throws input_error when a
// letter index exceeds rank.
std::vector<long long> abelianize(const Word& w, int rank,
                                  const std::vector<long long>* moduli = nullptr);

Word commutator(const Word& a, const Word& b);

}  // namespace covercalc

#endif
