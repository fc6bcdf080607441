#include "covercalc/word.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "covercalc/errors.hpp"

namespace covercalc {

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (Letter l : letters_) {
    if (l == 0) throw input_error("word letters must be nonzero signed indices");
  }
}

Word::Word(std::initializer_list<Letter> letters) : Word(std::vector<Letter>(letters)) {}

int Word::max_index() const {
  int m = 0;
  for (Letter l : letters_) m = std::max(m, std::abs(l));
  return m;
}

bool Word::reduced() const {
  for (std::size_t i = 1; i < letters_.size(); ++i)
    if (letters_[i] == -letters_[i - 1]) return false;
  return true;
}

bool Word::cyclically_reduced() const {
  if (!reduced()) return false;
  if (letters_.size() >= 2 && letters_.front() == -letters_.back()) return false;
  return true;
}

Word Word::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (Letter& l : out) l = -l;
  return Word(std::move(out));
}

Word Word::operator*(const Word& rhs) const {
  std::vector<Letter> out;
  out.reserve(letters_.size() + rhs.letters_.size());
  auto push = [&out](Letter l) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  };
  for (Letter l : letters_) push(l);
  for (Letter l : rhs.letters_) push(l);
  return Word(std::move(out));
}

std::string Word::str() const {
  std::string s;
  for (Letter l : letters_) {
    if (!s.empty()) s += ' ';
    s += "g" + std::to_string(std::abs(l));
    if (l < 0) s += "^-1";
  }
  return s;
}

Word reduce_word(const Word& w, bool cyclic) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter l : w.letters()) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  if (cyclic) {
    std::size_t lo = 0, hi = out.size();
    while (hi - lo >= 2 && out[lo] == -out[hi - 1]) {
      ++lo;
      --hi;
    }
    out.assign(out.begin() + static_cast<std::ptrdiff_t>(lo),
               out.begin() + static_cast<std::ptrdiff_t>(hi));
  }
  return Word(std::move(out));
}

std::vector<long long> abelianize(const Word& w, int rank,
                                  const std::vector<long long>* moduli) {
  if (moduli && static_cast<int>(moduli->size()) != rank)
    throw input_error("abelianize: moduli length must equal rank");
  std::vector<long long> v(static_cast<std::size_t>(rank), 0);
  for (Letter l : w.letters()) {
    int idx = std::abs(l);
    if (idx > rank)
      throw input_error("abelianize: letter index " + std::to_string(idx) +
                        " exceeds rank " + std::to_string(rank));
    v[static_cast<std::size_t>(idx - 1)] += (l > 0 ? 1 : -1);
  }
  if (moduli) {
    for (int i = 0; i < rank; ++i) {
      long long n = (*moduli)[static_cast<std::size_t>(i)];
      if (n < 0) throw input_error("abelianize: negative modulus");
      if (n > 0) {
        long long r = v[static_cast<std::size_t>(i)] % n;
        if (r < 0) r += n;
        v[static_cast<std::size_t>(i)] = r;
      }
    }
  }
  return v;
}

Word commutator(const Word& a, const Word& b) {
  return a * b * a.inverse() * b.inverse();
}

}  // namespace covercalc
