#pragma once

#include "nqf/roots.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace nqf {

// A word in the free algebra on the letters [a], one letter per positive
// root (identified by its index in the root system). Coefficients live in
// NcPoly; a bare NcWord always means coefficient +1.
using NcWord = std::vector<uint8_t>;

std::string wordStr(const NcWord& w);

struct NcPoly {
  std::map<NcWord, Rat> terms;

  static NcPoly word(const NcWord& w, const Rat& c = Rat(1));
  void add(const NcWord& w, const Rat& c);
  NcPoly& operator+=(const NcPoly& o);
  NcPoly& operator*=(const Rat& c);
  bool isZero() const { return terms.empty(); }
  bool operator==(const NcPoly& o) const { return terms == o.terms; }
  std::string str() const;
};

// Word-level operations for one root system: the Weyl action on letters,
// the twisted derivations that peel letters off either end, and the duality
// pairing between words of equal length. Everything here works in the free
// algebra; no quotient is involved.
class WordOps {
 public:
  explicit WordOps(const RootSystem& rs) : rs_(&rs) {}

  const RootSystem& roots() const { return *rs_; }

  // group-valued degree s_{a1} s_{a2} ... s_{ak}
  int wdeg(const NcWord& w) const;

  // w acting letterwise; the sign collects [-a] = -[a]
  std::pair<NcWord, int> act(int w, const NcWord& x) const;
  NcPoly actPoly(int w, const NcPoly& x) const;

  // x <- D_c: drop one letter equal to c, twist the suffix by s_c
  NcPoly rightDer(const NcWord& x, int c) const;
  NcPoly rightDerPoly(const NcPoly& x, int c) const;

  // Dbar_c x: drop one letter equal to c, twist the prefix by s_c
  NcPoly leftDer(const NcWord& x, int c) const;
  NcPoly leftDerPoly(const NcPoly& x, int c) const;

  // duality pairing of equal-length words, <[a],[b]> = delta on letters
  Rat pair(const NcWord& xi, const NcWord& x) const;
  // same value computed by the mirrored recursion (peels x instead of xi)
  Rat pairDual(const NcWord& xi, const NcWord& x) const;
  Rat pairPoly(const NcPoly& xi, const NcPoly& x) const;

  // component of the coproduct with the given left length; each summand is
  // coeff * left (x) right
  struct Split {
    Rat coeff;
    NcWord left, right;
  };
  std::vector<Split> coproduct(const NcWord& x, int leftLen) const;

  std::vector<NcWord> allWords(int len) const;

 private:
  const RootSystem* rs_;
  mutable std::map<std::pair<NcWord, NcWord>, Rat> pairMemo_;
  mutable std::map<std::pair<NcWord, NcWord>, Rat> pairDualMemo_;
};

}  // namespace nqf
