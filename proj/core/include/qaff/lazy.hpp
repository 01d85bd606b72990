// Coefficient oracles: read single coefficients of products and derivatives
// without expanding them.
#pragma once

#include <memory>
#include <unordered_map>
#include <vector>

#include "qaff/shuffle.hpp"

namespace qaff {

class CoefficientSource {
 public:
  virtual ~CoefficientSource() = default;
  virtual Rat coeff(const Word& w) = 0;
};

/// Prefix tree over the support of a homogeneous element.
class WordTrie {
 public:
  WordTrie(const ShuffleElement& x, int n);

  static constexpr int kRoot = 0;
  int child(int node, int letter) const { return nodes_[node].next[letter]; }
  const Rat* value(int node) const { return nodes_[node].value; }
  /// Letter counts shared by every word of the element.
  const std::vector<int>& counts() const { return counts_; }
  bool empty() const { return empty_; }

 private:
  struct Node {
    int next[16];
    const Rat* value = nullptr;
  };
  std::vector<Node> nodes_;
  std::vector<int> counts_;
  bool empty_ = true;
};

class ExplicitSource : public CoefficientSource {
 public:
  explicit ExplicitSource(ShuffleElement x) : x_(std::move(x)) {}
  Rat coeff(const Word& w) override { return x_.coeff(w); }
  const ShuffleElement& element() const { return x_; }
  /// Built on first use; requires a homogeneous element.
  const WordTrie& trie(int n);

 private:
  ShuffleElement x_;
  std::unique_ptr<WordTrie> trie_;
};

/// Coefficient of w in e'_{s_1}(e'_{s_2}(...(inner))) is inner's coefficient of w s_1 s_2 ...
class DerivedSource : public CoefficientSource {
 public:
  DerivedSource(Word suffix, std::shared_ptr<CoefficientSource> inner)
      : suffix_(std::move(suffix)), inner_(std::move(inner)) {}
  Rat coeff(const Word& w) override { return inner_->coeff(w + suffix_); }

 private:
  Word suffix_;
  std::shared_ptr<CoefficientSource> inner_;
};

/// fixed * other (fixed_on_left) or other * fixed, where fixed is explicit and
/// homogeneous and other is any source. Results are memoized per word.
class ProductSource : public CoefficientSource {
 public:
  ProductSource(const ShuffleAlgebra& alg, std::shared_ptr<ExplicitSource> fixed,
                std::shared_ptr<CoefficientSource> other, bool fixed_on_left);
  Rat coeff(const Word& w) override;

 private:
  const ShuffleAlgebra& alg_;
  std::shared_ptr<ExplicitSource> fixed_;
  std::shared_ptr<CoefficientSource> other_;
  bool fixed_on_left_;
  std::unordered_map<Word, Rat> memo_;
};

/// Linear combination of sources.
class SumSource : public CoefficientSource {
 public:
  void add(const Rat& c, std::shared_ptr<CoefficientSource> src) { terms_.emplace_back(c, std::move(src)); }
  Rat coeff(const Word& w) override;

 private:
  std::vector<std::pair<Rat, std::shared_ptr<CoefficientSource>>> terms_;
};

}  // namespace qaff
