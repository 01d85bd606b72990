#include "qaff/lazy.hpp"

#include <array>
#include <map>

namespace qaff {

WordTrie::WordTrie(const ShuffleElement& x, int n) : counts_(n, 0) {
  Node root;
  std::fill(std::begin(root.next), std::end(root.next), -1);
  nodes_.push_back(root);
  bool first = true;
  for (const auto& [w, c] : x.terms()) {
    Coords wt = word_weight(w, n);
    if (first) {
      counts_ = wt;
      first = false;
    } else if (wt != counts_) {
      throw std::logic_error("WordTrie requires a homogeneous element");
    }
    int node = kRoot;
    for (char ch : w) {
      int a = static_cast<unsigned char>(ch);
      if (nodes_[node].next[a] < 0) {
        Node fresh;
        std::fill(std::begin(fresh.next), std::end(fresh.next), -1);
        nodes_.push_back(fresh);
        nodes_[node].next[a] = static_cast<int>(nodes_.size()) - 1;
      }
      node = nodes_[node].next[a];
    }
    nodes_[node].value = &c;
  }
  empty_ = first;
}

const WordTrie& ExplicitSource::trie(int n) {
  if (!trie_) trie_ = std::make_unique<WordTrie>(x_, n);
  return *trie_;
}

ProductSource::ProductSource(const ShuffleAlgebra& alg, std::shared_ptr<ExplicitSource> fixed,
                             std::shared_ptr<CoefficientSource> other, bool fixed_on_left)
    : alg_(alg), fixed_(std::move(fixed)), other_(std::move(other)), fixed_on_left_(fixed_on_left) {
  fixed_->trie(alg_.rank());
}

namespace {

struct Deshuffle {
  const ShuffleAlgebra& alg;
  const WordTrie& trie;
  const Word& w;
  bool fixed_on_left;
  int n;
  std::array<int, 16> need_fixed{};
  std::array<int, 16> need_other{};
  Word comp;
  std::map<Word, Rat> groups;

  // pf[b] / po[b]: pairing of alpha_b with the letters already given to the
  // fixed / other factor.
  void run(std::size_t pos, int node, int exp, const std::array<int, 16>& pf, const std::array<int, 16>& po) {
    if (pos == w.size()) {
      const Rat* v = trie.value(node);
      if (v) {
        Rat t = v->shifted(exp);
        auto [it, inserted] = groups.try_emplace(comp, t);
        if (!inserted) it->second += t;
      }
      return;
    }
    const int c = static_cast<unsigned char>(w[pos]);
    if (need_fixed[c] > 0) {
      int next = trie.child(node, c);
      if (next >= 0) {
        std::array<int, 16> pf2 = pf;
        for (int b = 1; b <= n; ++b) pf2[b] += alg.letter_form(c, b);
        --need_fixed[c];
        run(pos + 1, next, fixed_on_left ? exp : exp - po[c], pf2, po);
        ++need_fixed[c];
      }
    }
    if (need_other[c] > 0) {
      std::array<int, 16> po2 = po;
      for (int b = 1; b <= n; ++b) po2[b] += alg.letter_form(c, b);
      --need_other[c];
      comp.push_back(w[pos]);
      run(pos + 1, node, fixed_on_left ? exp - pf[c] : exp, pf, po2);
      comp.pop_back();
      ++need_other[c];
    }
  }
};

}  // namespace

Rat ProductSource::coeff(const Word& w) {
  auto hit = memo_.find(w);
  if (hit != memo_.end()) return hit->second;
  const int n = alg_.rank();
  const WordTrie& trie = fixed_->trie(n);
  Rat out;
  if (!trie.empty()) {
    Deshuffle d{alg_, trie, w, fixed_on_left_, n, {}, {}, {}, {}};
    bool feasible = true;
    for (int a = 1; a <= n; ++a) d.need_fixed[a] = trie.counts()[a - 1];
    for (char ch : w) ++d.need_other[static_cast<unsigned char>(ch)];
    for (int a = 1; a <= n; ++a) {
      d.need_other[a] -= d.need_fixed[a];
      if (d.need_other[a] < 0) feasible = false;
    }
    if (feasible) {
      std::array<int, 16> zero{};
      d.run(0, WordTrie::kRoot, 0, zero, zero);
      for (const auto& [comp, c] : d.groups) {
        if (c.is_zero()) continue;
        Rat o = other_->coeff(comp);
        if (!o.is_zero()) out += c * o;
      }
    }
  }
  memo_.emplace(w, out);
  return out;
}

Rat SumSource::coeff(const Word& w) {
  Rat out;
  for (auto& [c, src] : terms_) {
    Rat v = src->coeff(w);
    if (!v.is_zero()) out += c * v;
  }
  return out;
}

}  // namespace qaff
