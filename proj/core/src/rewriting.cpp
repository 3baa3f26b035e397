#include "nodal/rewriting.hpp"

#include <map>
#include <stdexcept>

namespace nodal {

namespace {

using Word = std::vector<Generator>;

// Position of the leftmost "d t" pair, or npos.
std::size_t leftmost_inversion(const Word& w) {
  for (std::size_t k = 0; k + 1 < w.size(); ++k) {
    if (w[k] == Generator::D && w[k + 1] == Generator::T) return k;
  }
  return Word::size_type(-1);
}

void add_to(std::map<Word, Rational>& sum, Word w, const Rational& c) {
  auto [it, inserted] = sum.try_emplace(std::move(w), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) sum.erase(it);
  }
}

}  // namespace

GeneratorWord GeneratorWord::parse(std::string_view letters, Rational scalar) {
  GeneratorWord w{std::move(scalar), {}};
  for (char ch : letters) {
    if (ch == 't') {
      w.letters.push_back(Generator::T);
    } else if (ch == 'd') {
      w.letters.push_back(Generator::D);
    } else {
      throw std::invalid_argument(std::string("generator word letter must be t or d, got '") +
                                  ch + "'");
    }
  }
  return w;
}

WeylOp rewrite_to_normal_form(const GeneratorWord& word) {
  std::map<Word, Rational> pending;
  if (!word.scalar.is_zero()) pending.emplace(word.letters, word.scalar);
  WeylOp::Terms normal;

  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    Word w = std::move(node.key());
    const Rational c = std::move(node.mapped());
    const std::size_t k = leftmost_inversion(w);
    if (k == Word::size_type(-1)) {
      // Already t^i d^j: count letters.
      int i = 0;
      while (i < static_cast<int>(w.size()) && w[i] == Generator::T) ++i;
      const Monomial m{i, static_cast<int>(w.size()) - i};
      auto [it, inserted] = normal.try_emplace(m, c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) normal.erase(it);
      }
      continue;
    }
    // u d t v -> u t d v + u v
    Word swapped = w;
    swapped[k] = Generator::T;
    swapped[k + 1] = Generator::D;
    Word dropped;
    dropped.reserve(w.size() - 2);
    dropped.insert(dropped.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
    dropped.insert(dropped.end(), w.begin() + static_cast<std::ptrdiff_t>(k + 2), w.end());
    add_to(pending, std::move(swapped), c);
    add_to(pending, std::move(dropped), c);
  }
  return WeylOp(std::move(normal));
}

WeylOp weyl_mul_oracle(const GeneratorWord& lhs, const GeneratorWord& rhs) {
  GeneratorWord joined{lhs.scalar * rhs.scalar, lhs.letters};
  joined.letters.insert(joined.letters.end(), rhs.letters.begin(), rhs.letters.end());
  return rewrite_to_normal_form(joined);
}

}  // namespace nodal
