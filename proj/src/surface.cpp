#include "covercalc/surface.hpp"

#include "covercalc/errors.hpp"

namespace covercalc {

std::string FiniteSurface::str() const {
  return "S^" + std::to_string(boundary) + "_{" + std::to_string(genus) + "," +
         std::to_string(punctures) + "}";
}

Word surface_relation_word(const FiniteSurface& s) {
  Word w;
  for (int i = 1; i <= s.genus; ++i)
    w = w * commutator(Word::generator(2 * i - 1), Word::generator(2 * i));
  for (int j = 1; j <= s.ends() - 1; ++j) w = w * Word::generator(2 * s.genus + j);
  return w;
}

std::vector<Word> peripheral_words(const FiniteSurface& s) {
  std::vector<Word> out;
  if (s.closed()) return out;
  for (int j = 1; j <= s.ends() - 1; ++j) out.push_back(Word::generator(2 * s.genus + j));
  out.push_back(surface_relation_word(s).inverse());
  return out;
}

}  // namespace covercalc
