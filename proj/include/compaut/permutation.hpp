#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "compaut/errors.hpp"

namespace compaut {

/// Bijection on {0..n-1} in one-line notation: p(i) == image[i].
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> image) : image_(std::move(image)) {
    std::vector<char> hit(image_.size(), 0);
    for (int x : image_) {
      if (x < 0 || x >= static_cast<int>(image_.size()) || hit[x]) {
        throw InputError("not a permutation");
      }
      hit[x] = 1;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> image(n);
    std::iota(image.begin(), image.end(), 0);
    return Permutation(std::move(image), Unchecked{});
  }

  /// Transposition (a b) on n points.
  static Permutation transposition(int n, int a, int b) {
    Permutation p = identity(n);
    std::swap(p.image_[a], p.image_[b]);
    return p;
  }

  int degree() const noexcept { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_[i]; }
  const std::vector<int>& image() const noexcept { return image_; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (image_[i] != i) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<int> inv(image_.size());
    for (int i = 0; i < degree(); ++i) inv[image_[i]] = i;
    return Permutation(std::move(inv), Unchecked{});
  }

  /// Smallest k >= 1 with p^k = id.
  long long element_order() const {
    long long result = 1;
    std::vector<char> seen(image_.size(), 0);
    for (int s = 0; s < degree(); ++s) {
      if (seen[s]) continue;
      long long len = 0;
      for (int x = s; !seen[x]; x = image_[x]) {
        seen[x] = 1;
        ++len;
      }
      result = std::lcm(result, len);
    }
    return result;
  }

  /// Cycle notation, e.g. "(0 3)(1 2)"; "()" for the identity.
  std::string to_cycle_string() const {
    std::string out;
    std::vector<char> seen(image_.size(), 0);
    for (int s = 0; s < degree(); ++s) {
      if (seen[s] || image_[s] == s) continue;
      out += '(';
      for (int x = s; !seen[x]; x = image_[x]) {
        seen[x] = 1;
        if (x != s) out += ' ';
        out += std::to_string(x);
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<int> image, Unchecked) : image_(std::move(image)) {}

  std::vector<int> image_;
};

/// a∘b: apply b first, then a.
inline Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw InputError("compose: degree mismatch");
  std::vector<int> image(a.degree());
  for (int i = 0; i < a.degree(); ++i) image[i] = a(b(i));
  return Permutation(std::move(image));
}

inline Permutation operator*(const Permutation& a, const Permutation& b) { return compose(a, b); }

/// Permutation group at desk scale: a generating set, plus the full element
/// set when it has been materialized.
class PermutationGroup {
 public:
  PermutationGroup() = default;

  /// Group generated by `generators`; elements are not computed.
  PermutationGroup(int degree, std::vector<Permutation> generators)
      : degree_(degree), generators_(std::move(generators)) {
    for (const auto& g : generators_)
      if (g.degree() != degree_) throw InputError("generator degree mismatch");
    std::erase_if(generators_, [](const Permutation& p) { return p.is_identity(); });
  }

  static PermutationGroup trivial(int degree) { return PermutationGroup(degree, {}); }

  /// Wraps an explicit, already closed element set. Generators are picked
  /// greedily in lexicographic element order.
  static PermutationGroup from_elements(int degree, std::vector<Permutation> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    PermutationGroup grp(degree, {});
    std::set<Permutation> span{Permutation::identity(degree)};
    for (const auto& e : elements) {
      if (span.contains(e)) continue;
      grp.generators_.push_back(e);
      span = closure(degree, grp.generators_, elements.size() + 1);
    }
    grp.elements_ = std::move(elements);
    grp.materialized_ = true;
    return grp;
  }

  int degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  bool materialized() const noexcept { return materialized_; }

  /// Sorted element set; requires materialization.
  const std::vector<Permutation>& elements() const {
    if (!materialized_) throw std::logic_error("permutation group not materialized");
    return elements_;
  }

  std::size_t order() const { return elements().size(); }

  bool contains(const Permutation& p) const {
    return std::binary_search(elements().begin(), elements().end(), p);
  }

  /// Returns a copy with the element set computed by closure; refuses when
  /// the group has more than `max_elements` elements.
  PermutationGroup materialize(std::size_t max_elements) const {
    if (materialized_) return *this;
    auto span = closure(degree_, generators_, max_elements);
    PermutationGroup out = *this;
    out.elements_.assign(span.begin(), span.end());
    out.materialized_ = true;
    return out;
  }

  /// Orbits of the group on {0..degree-1}, each sorted, ordered by smallest point.
  std::vector<std::vector<int>> orbits() const {
    std::vector<int> rep(degree_);
    std::iota(rep.begin(), rep.end(), 0);
    std::function<int(int)> find = [&](int x) { return rep[x] == x ? x : rep[x] = find(rep[x]); };
    for (const auto& g : generators_)
      for (int i = 0; i < degree_; ++i) rep[find(i)] = find(g(i));
    std::vector<std::vector<int>> out;
    std::vector<int> slot(degree_, -1);
    for (int i = 0; i < degree_; ++i) {
      int r = find(i);
      if (slot[r] == -1) {
        slot[r] = static_cast<int>(out.size());
        out.emplace_back();
      }
      out[slot[r]].push_back(i);
    }
    return out;
  }

 private:
  static std::set<Permutation> closure(int degree, std::span<const Permutation> gens,
                                       std::size_t max_elements) {
    std::set<Permutation> seen{Permutation::identity(degree)};
    std::vector<Permutation> frontier{Permutation::identity(degree)};
    while (!frontier.empty()) {
      std::vector<Permutation> next;
      for (const auto& e : frontier) {
        for (const auto& g : gens) {
          Permutation p = g * e;
          if (seen.insert(p).second) {
            if (seen.size() > max_elements) {
              throw OracleBoundError("group elements", static_cast<long long>(max_elements),
                                     static_cast<long long>(seen.size()));
            }
            next.push_back(std::move(p));
          }
        }
      }
      frontier = std::move(next);
    }
    return seen;
  }

  int degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  bool materialized_ = false;
};

}  // namespace compaut
