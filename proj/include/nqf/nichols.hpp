#pragma once

#include "nqf/linalg.hpp"
#include "nqf/words.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nqf {

// Element of the graded quotient algebra, held at a fixed degree as
// coordinate vectors per Weyl-degree class.
struct Elem {
  int degree = 0;
  std::map<int, std::vector<Rat>> coords;  // class -> coords in the block basis

  bool isZero() const;
  Elem& operator+=(const Elem& o);
  Elem& operator-=(const Elem& o);
  Elem& operator*=(const Rat& c);
  bool operator==(const Elem& o) const;
  void prune();
};

// The graded quotient of the free algebra on the root letters by the radical
// of the duality pairing. Degrees are built incrementally; every basis
// selection is certified exactly, with a fast modular pass only as a guide.
class NicholsAlgebra {
 public:
  struct Options {
    int maxDegree = 64;
    std::vector<uint64_t> primes = {2305843009213693951ULL, 4611686018427387847ULL,
                                    999999999999999989ULL};
  };

  explicit NicholsAlgebra(const RootSystem& rs);
  NicholsAlgebra(const RootSystem& rs, Options opt);

  const RootSystem& roots() const { return *rs_; }
  const Options& options() const { return opt_; }

  // extend the construction until a zero level seals the algebra or the
  // degree cap is reached
  void build();
  // build one more level; returns the new level's dimension
  int buildNextLevel();

  int topDegree() const { return static_cast<int>(levels_.size()) - 1; }
  bool complete() const { return complete_; }
  int dim(int k) const;
  std::vector<int> hilbert() const;

  std::vector<int> classesAt(int k) const;
  int blockDim(int k, int cls) const;
  const std::vector<NcWord>& basisWords(int k, int cls) const;
  // <u, v> for u in basis(k, inverse cls), v in basis(k, cls)
  const QMat& gram(int k, int cls) const;

  // block maps; nullopt when either side is a zero block or out of range
  struct BlockMap {
    int dstCls;
    const QMat* m;  // target dim x source dim
  };
  std::optional<BlockMap> lmulBlock(int srcDeg, int letter, int srcCls) const;
  std::optional<BlockMap> dbarBlock(int srcDeg, int letter, int srcCls) const;
  std::optional<BlockMap> wactBlock(int srcDeg, int simple, int srcCls) const;

  Elem zeroElem(int degree) const;
  Elem vacuum() const;
  Elem letterElem(int a) const;
  Elem basisElem(int k, int cls, int i) const;
  Elem mulLetter(int a, const Elem& x) const;  // [a] * x
  Elem mul(const Elem& x, const Elem& y) const;
  Elem normalForm(const NcWord& w) const;
  Elem dbar(int c, const Elem& x) const;
  Elem dbarWeyl(int w, const Elem& x) const;  // chain over a reduced word
  Elem wAct(int w, const Elem& x) const;
  Rat pairElems(const Elem& xi, const Elem& x) const;

  // deterministic serialization of all sealed levels
  std::string cacheText() const;
  void saveCache(const std::string& path) const;
  // reconstructs sealed levels from a cache produced with the same root
  // system; throws EngineError on mismatch
  void loadCacheText(const std::string& text);
  bool loadCacheFile(const std::string& path);

 private:
  struct SpanEntry {
    int letter;
    int prevCls;
    int prevIdx;
    NcWord word;
  };
  struct Block {
    std::vector<NcWord> basis;
    std::vector<std::pair<int, int>> basisKey;  // (letter, index in prev block)
    QMat gram;
    std::map<int, QMat> lmul;   // letter -> map from prev block, target x source
    std::map<int, QMat> dright; // letter -> to block (k-1, g s_c)
    std::map<int, QMat> dbar;   // letter -> to block (k-1, s_c g)
    std::map<int, QMat> wact;   // simple -> to block (k, s_i g s_i)
  };
  using Level = std::map<int, Block>;

  const RootSystem* rs_;
  Options opt_;
  bool complete_ = false;
  std::vector<Level> levels_;

  const Block* block(int k, int cls) const;
  int tryBuildLevel(uint64_t prime, Level& out) const;
  void buildDerived(Level& lv) const;  // lmul / dbar / wact for a sealed level
  // coords of s_r(basis j of (k, cls)) via chains of simple actions
  std::vector<Rat> wactRefl(int k, int r, int cls, int j) const;
};

}  // namespace nqf
