#ifndef NQF_ROOTS_HPP
#define NQF_ROOTS_HPP

// Finite crystallographic root systems of classical type A/B/C/D at small
// rank, with the whole Weyl group enumerated up front.  Positive roots are
// indexed 0..m-1 in a fixed order (height, then lexicographic preference
// for lower simple indices); the first `rank` entries are the simple roots.
// Weyl elements are canonicalized as signed permutations of the positive
// roots, which makes equality, composition and hashing cheap and keeps
// every piece of the action exact.

#include "nqf/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace nqf {

using Vec = std::vector<Rat>;  // ambient coordinates

struct RootData {
  Vec vec;                      // ambient
  std::vector<int> simple;      // coordinates over simple roots (integers)
  Vec coroot;                   // 2a/(a,a), ambient
  std::vector<int> corootSimple;  // coordinates over simple coroots
  int height = 0;               // sum of `simple`
  int corootHeight = 0;         // sum of `corootSimple`
  bool isLong = true;
  int reflection = -1;          // Weyl index of s_alpha, set by enumerate
  int reflLength = 0;           // l(s_alpha)
  bool quantum = false;         // l(s_alpha) == 2*corootHeight - 1
};

// signed permutation of the positive roots; entry is +-(rootIdx+1)
struct WeylElem {
  std::vector<int16_t> sp;
  bool operator==(const WeylElem& o) const { return sp == o.sp; }
  bool operator<(const WeylElem& o) const { return sp < o.sp; }
  // image of root r: returns index, sets sign
  int apply(int r, int& sign) const {
    int v = sp[r];
    sign = v > 0 ? 1 : -1;
    return (v > 0 ? v : -v) - 1;
  }
};

class RootSystem {
public:
  // maxRank guards the enumeration cost; weylBound caps |W|
  RootSystem(char type, int rank, int maxRank = 4, long weylBound = 1152);

  char type() const { return type_; }
  int rank() const { return rank_; }
  int ambientDim() const { return ambient_; }
  int posCount() const { return static_cast<int>(roots_.size()); }
  const RootData& root(int i) const { return roots_[i]; }
  const std::vector<RootData>& roots() const { return roots_; }

  // <x, alpha_i^vee> for an ambient vector x
  Rat corootPairing(const Vec& x, int rootIdx) const;
  // invariant form (x, y): the standard dot product in the ambient space
  Rat form(const Vec& x, const Vec& y) const;

  // s_{root a} applied to root b: returns root index, sets sign
  int reflectRoot(int a, int b, int& sign) const;
  // s_{root a} applied to an ambient vector
  Vec reflect(int a, const Vec& x) const;

  // fundamental weights, ambient representatives (type A: e1-orthogonal)
  const Vec& fundamentalWeight(int i) const { return omega_[i]; }

  // ---- Weyl group ----
  long weylOrder() const { return static_cast<long>(elems_.size()); }
  const WeylElem& weyl(int w) const { return elems_[w]; }
  int weylIndex(const WeylElem& e) const;
  int length(int w) const { return len_[w]; }
  int inverse(int w) const { return inv_[w]; }
  int identity() const { return 0; }
  int longest() const { return longest_; }
  int simpleRefl(int i) const { return roots_[i].reflection; }
  int reflectionOf(int rootIdx) const { return roots_[rootIdx].reflection; }
  // s_i * w  /  w * s_i  (simple index i)
  int mulSimpleLeft(int i, int w) const { return leftSimple_[i][w]; }
  int mulSimpleRight(int w, int i) const { return rightSimple_[i][w]; }
  // s_{root r} * w  /  w * s_{root r}
  int mulReflLeft(int r, int w) const { return leftRefl_[r][w]; }
  int mulReflRight(int w, int r) const { return rightRefl_[r][w]; }
  int mul(int u, int v) const;  // table compose + lookup
  // lexicographically least reduced word (simple indices)
  std::vector<int> reducedWord(int w) const;
  // all reduced words; guarded, intended for reflections / short elements
  std::vector<std::vector<int>> allReducedWords(int w, size_t cap = 200000) const;
  // ambient action of w
  Vec act(int w, const Vec& x) const;
  std::vector<int> lengthHistogram() const;

  // roots alpha with l(s_alpha) = 2 ht(alpha^vee) - 1
  std::vector<int> quantumRoots() const;

  // lookup by simple-root coordinates; returns -1 if absent
  int rootIndexBySimple(const std::vector<int>& coords) const;

  std::string rootName(int i) const;  // epsilon-coordinate display

private:
  void buildRoots();
  void enumerateWeyl(long bound);
  WeylElem reflectionTable(int rootIdx) const;

  char type_;
  int rank_;
  int ambient_;
  std::vector<RootData> roots_;
  std::map<std::vector<int>, int> bySimple_;
  std::vector<Vec> omega_;

  std::vector<WeylElem> elems_;
  std::map<std::vector<int16_t>, int> elemIndex_;
  std::vector<int> len_, inv_;
  int longest_ = 0;
  std::vector<std::vector<int>> leftSimple_, rightSimple_, leftRefl_, rightRefl_;
};

}  // namespace nqf

#endif
