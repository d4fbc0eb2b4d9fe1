#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "rab/diagram.hpp"

namespace rab {

struct Letter {
  Type type = 0;
  int color = 1;  // nonzero residue mod q_type
  auto operator<=>(const Letter&) const = default;
};

using Word = std::vector<Letter>;

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

enum class Side { Prefix, Suffix };

struct WeylWord {
  std::vector<Type> types;
  int length = 0;
};

// Graph product of the cyclic groups Z/q_i over the commutation graph of a
// diagram. Normal forms are reduced and ShortLex-minimal for the declaration
// order of the types. Chambers of the semiregular building are its elements.
class GraphProduct {
 public:
  GraphProduct(Diagram d, std::vector<int> q);

  const Diagram& diagram() const { return d_; }
  const std::vector<int>& q() const { return q_; }
  int q(Type i) const { return q_[i]; }
  int rank() const { return d_.rank(); }
  bool thick() const;

  void validate(const Word& w) const;  // ColorOutOfRange / UnknownType
  Word normalize(const Word& w) const;
  Word multiply(const Word& u, const Word& v) const;
  Word invert(const Word& u) const;
  // u * (type, color) for normal u; color taken mod q and may be zero.
  Word times(const Word& u, Type type, int color) const;

  // Inputs below are assumed normal.
  std::pair<Word, Word> split(const Word& u, TypeSet J, Side side) const;
  std::vector<int> lambda(const Word& c) const;
  int dist(const Word& c, const Word& e) const;

  // Internal steps exposed for the benchmark and tests.
  void push_reduced(Word& w, Letter x) const;
  Word shortlex(const Word& reduced) const;

 private:
  Diagram d_;
  std::vector<int> q_;
};

WeylWord weyl(const Word& u);
int i_count(const Word& u, Type i);
int length(const Word& u);

std::string to_string(const Word& w, const Diagram& d);

}  // namespace rab
