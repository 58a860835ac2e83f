#pragma once

#include <algorithm>
#include <array>
#include <memory>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "compaut/errors.hpp"
#include "compaut/permutation.hpp"

namespace compaut {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt factorial(int k) {
  BigInt r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

/// Abstract group built from the operations
///   1, S_k, G x H, G wr S_k, (G1^4 x G2^2 x G3^2) x| Z2^2 (x G4),
/// plus Opaque(order) for groups outside that grammar.
class GroupExpr {
 public:
  enum class Kind { Trivial, Sym, DirectProduct, Wreath, SemidirectZ22, Opaque };

  static GroupExpr trivial() { return GroupExpr(Kind::Trivial); }

  static GroupExpr sym(int k) {
    if (k < 1) throw InputError("S_k needs k >= 1");
    GroupExpr e(Kind::Sym);
    e.k_ = k;
    return e;
  }

  static GroupExpr direct_product(std::vector<GroupExpr> factors) {
    GroupExpr e(Kind::DirectProduct);
    e.operands_ = std::move(factors);
    return e;
  }

  static GroupExpr wreath(GroupExpr base, int k) {
    if (k < 1) throw InputError("wreath product needs k >= 1");
    GroupExpr e(Kind::Wreath);
    e.k_ = k;
    e.operands_.push_back(std::move(base));
    return e;
  }

  /// (g1^4 x g2^2 x g3^2 x fixed) x| Z2^2. The element (1,0) swaps g1
  /// components 0<->1 and 2<->3 and the two g2 components; (0,1) swaps g1
  /// components 0<->2 and 1<->3 and the two g3 components.
  static GroupExpr semidirect_z22(GroupExpr g1, GroupExpr g2, GroupExpr g3, GroupExpr fixed) {
    GroupExpr e(Kind::SemidirectZ22);
    e.operands_ = {std::move(g1), std::move(g2), std::move(g3), std::move(fixed)};
    return e;
  }

  static GroupExpr opaque(BigInt order) {
    if (order < 1) throw InputError("group order must be positive");
    GroupExpr e(Kind::Opaque);
    e.opaque_order_ = std::move(order);
    return e;
  }

  Kind kind() const noexcept { return kind_; }
  /// k for Sym and Wreath.
  int k() const noexcept { return k_; }
  const std::vector<GroupExpr>& operands() const noexcept { return operands_; }
  const BigInt& opaque_order() const noexcept { return opaque_order_; }

  /// Exact order from the structural formulas.
  BigInt order() const {
    switch (kind_) {
      case Kind::Trivial: return 1;
      case Kind::Sym: return factorial(k_);
      case Kind::DirectProduct: {
        BigInt r = 1;
        for (const auto& f : operands_) r *= f.order();
        return r;
      }
      case Kind::Wreath: return boost::multiprecision::pow(operands_[0].order(), k_) * factorial(k_);
      case Kind::SemidirectZ22: {
        using boost::multiprecision::pow;
        return pow(operands_[0].order(), 4) * pow(operands_[1].order(), 2) *
               pow(operands_[2].order(), 2) * operands_[3].order() * 4;
      }
      case Kind::Opaque: return opaque_order_;
    }
    return 1;
  }

  /// Flattened products without trivial factors, factors sorted by
  /// (order, structural code); S_1, G wr S_1 and 1 wr S_k simplified.
  GroupExpr normalized() const {
    switch (kind_) {
      case Kind::Trivial: return trivial();
      case Kind::Sym: return k_ == 1 ? trivial() : *this;
      case Kind::Opaque: return opaque_order_ == 1 ? trivial() : *this;
      case Kind::Wreath: {
        GroupExpr base = operands_[0].normalized();
        if (k_ == 1) return base;
        if (base.kind_ == Kind::Trivial) return sym(k_);
        return wreath(std::move(base), k_);
      }
      case Kind::SemidirectZ22:
        return semidirect_z22(operands_[0].normalized(), operands_[1].normalized(),
                              operands_[2].normalized(), operands_[3].normalized());
      case Kind::DirectProduct: {
        std::vector<GroupExpr> flat;
        for (const auto& f : operands_) {
          GroupExpr nf = f.normalized();
          if (nf.kind_ == Kind::Trivial) continue;
          if (nf.kind_ == Kind::DirectProduct) {
            for (auto& g : nf.operands_) flat.push_back(std::move(g));
          } else {
            flat.push_back(std::move(nf));
          }
        }
        if (flat.empty()) return trivial();
        if (flat.size() == 1) return std::move(flat.front());
        std::vector<std::pair<std::pair<BigInt, std::string>, std::size_t>> keys;
        for (std::size_t i = 0; i < flat.size(); ++i)
          keys.push_back({{flat[i].order(), flat[i].code()}, i});
        std::sort(keys.begin(), keys.end());
        std::vector<GroupExpr> sorted;
        for (const auto& kv : keys) sorted.push_back(flat[kv.second]);
        return direct_product(std::move(sorted));
      }
    }
    return *this;
  }

  /// Human-readable form, e.g. "(S3 wr S2) x Z2^2-semidirect[1; S2; 1; 1]".
  std::string to_string() const {
    switch (kind_) {
      case Kind::Trivial: return "1";
      case Kind::Sym: return "S" + std::to_string(k_);
      case Kind::Opaque: return "Opaque(" + opaque_order_.str() + ")";
      case Kind::Wreath: return operands_[0].operand_string() + " wr S" + std::to_string(k_);
      case Kind::SemidirectZ22:
        return "Z2^2-semidirect[" + operands_[0].to_string() + "; " + operands_[1].to_string() +
               "; " + operands_[2].to_string() + "; " + operands_[3].to_string() + "]";
      case Kind::DirectProduct: {
        if (operands_.empty()) return "1";
        std::string out;
        for (std::size_t i = 0; i < operands_.size(); ++i) {
          if (i) out += " x ";
          out += operands_[i].operand_string();
        }
        return out;
      }
    }
    return "?";
  }

  /// Fully parenthesized prefix code; used for sorting and comparison.
  std::string code() const {
    switch (kind_) {
      case Kind::Trivial: return "T";
      case Kind::Sym: return "S" + std::to_string(k_);
      case Kind::Opaque: return "O" + opaque_order_.str();
      default: break;
    }
    std::string out = kind_ == Kind::Wreath ? "W" + std::to_string(k_)
                      : kind_ == Kind::SemidirectZ22 ? std::string("Z")
                                                      : std::string("D");
    out += '(';
    for (std::size_t i = 0; i < operands_.size(); ++i) {
      if (i) out += ',';
      out += operands_[i].code();
    }
    return out + ')';
  }

  friend bool operator==(const GroupExpr& a, const GroupExpr& b) { return a.code() == b.code(); }

 private:
  explicit GroupExpr(Kind kind) : kind_(kind) {}

  std::string operand_string() const {
    bool compound = kind_ == Kind::Wreath ||
                    (kind_ == Kind::DirectProduct && operands_.size() > 1);
    return compound ? "(" + to_string() + ")" : to_string();
  }

  Kind kind_ = Kind::Trivial;
  int k_ = 0;
  std::vector<GroupExpr> operands_;
  BigInt opaque_order_ = 1;
};

/// Order of the abstract group.
inline BigInt realize(const GroupExpr& e) { return e.order(); }

namespace detail {

/// Points used by the natural action; 1 for the trivial group.
inline int natural_degree(const GroupExpr& e) {
  using K = GroupExpr::Kind;
  switch (e.kind()) {
    case K::Trivial: return 1;
    case K::Sym: return e.k();
    case K::DirectProduct: {
      int d = 0;
      for (const auto& f : e.operands()) d += natural_degree(f);
      return std::max(d, 1);
    }
    case K::Wreath: return e.k() * natural_degree(e.operands()[0]);
    case K::SemidirectZ22:
      return 4 * natural_degree(e.operands()[0]) + 2 * natural_degree(e.operands()[1]) +
             2 * natural_degree(e.operands()[2]) + natural_degree(e.operands()[3]);
    case K::Opaque: throw DomainError("an opaque group has no natural action");
  }
  return 1;
}

/// Swaps the blocks [a, a+len) and [b, b+len), as a one-line image edit.
inline void swap_blocks(std::vector<int>& image, int a, int b, int len) {
  for (int j = 0; j < len; ++j) std::swap(image[a + j], image[b + j]);
}

inline void natural_generators(const GroupExpr& e, int offset, int degree,
                               std::vector<Permutation>& out) {
  using K = GroupExpr::Kind;
  auto identity_image = [&] {
    std::vector<int> im(degree);
    for (int i = 0; i < degree; ++i) im[i] = i;
    return im;
  };
  switch (e.kind()) {
    case K::Trivial: return;
    case K::Sym:
      for (int i = 0; i + 1 < e.k(); ++i)
        out.push_back(Permutation::transposition(degree, offset + i, offset + i + 1));
      return;
    case K::DirectProduct:
      for (const auto& f : e.operands()) {
        natural_generators(f, offset, degree, out);
        offset += natural_degree(f);
      }
      return;
    case K::Wreath: {
      const int b = natural_degree(e.operands()[0]);
      natural_generators(e.operands()[0], offset, degree, out);
      for (int i = 0; i + 1 < e.k(); ++i) {
        auto im = identity_image();
        swap_blocks(im, offset + i * b, offset + (i + 1) * b, b);
        out.emplace_back(std::move(im));
      }
      return;
    }
    case K::SemidirectZ22: {
      const auto& ops = e.operands();
      const int d1 = natural_degree(ops[0]), d2 = natural_degree(ops[1]),
                d3 = natural_degree(ops[2]);
      const int g1 = offset, g2 = g1 + 4 * d1, g3 = g2 + 2 * d2, g4 = g3 + 2 * d3;
      for (int c = 0; c < 4; ++c) natural_generators(ops[0], g1 + c * d1, degree, out);
      for (int c = 0; c < 2; ++c) natural_generators(ops[1], g2 + c * d2, degree, out);
      for (int c = 0; c < 2; ++c) natural_generators(ops[2], g3 + c * d3, degree, out);
      natural_generators(ops[3], g4, degree, out);
      auto a = identity_image();
      swap_blocks(a, g1, g1 + d1, d1);
      swap_blocks(a, g1 + 2 * d1, g1 + 3 * d1, d1);
      swap_blocks(a, g2, g2 + d2, d2);
      out.emplace_back(std::move(a));
      auto b = identity_image();
      swap_blocks(b, g1, g1 + 2 * d1, d1);
      swap_blocks(b, g1 + d1, g1 + 3 * d1, d1);
      swap_blocks(b, g3, g3 + d3, d3);
      out.emplace_back(std::move(b));
      return;
    }
    case K::Opaque: throw DomainError("an opaque group has no natural action");
  }
}

}  // namespace detail

/// Faithful permutation group for the expression: symmetric groups on their
/// points, products side by side, wreath products imprimitively, and Z2^2
/// moving the blocks of the semidirect factor like rectangle corners/edges.
inline PermutationGroup realize_permutation_group(const GroupExpr& e) {
  const int degree = detail::natural_degree(e);
  std::vector<Permutation> gens;
  detail::natural_generators(e, 0, degree, gens);
  return PermutationGroup(degree, std::move(gens));
}

/// Element-level model of (G1^4 x G2^2 x G3^2 x G4) x|_phi Z2^2.
/// Components 0-3 live in G1, 4-5 in G2, 6-7 in G3, 8 in G4; each component
/// group acts on its own block of the natural action.
class SemidirectZ22Model {
 public:
  static constexpr int kComponents = 9;
  using Vector = std::array<Permutation, kComponents>;

  struct Element {
    Vector n;
    int h = 0;  // bit 0: (1,0), bit 1: (0,1)

    friend bool operator==(const Element&, const Element&) = default;
  };

  explicit SemidirectZ22Model(const GroupExpr& e) {
    if (e.kind() != GroupExpr::Kind::SemidirectZ22) throw InputError("not a Z2^2 semidirect product");
    for (int i = 0; i < 4; ++i) factors_[i] = e.operands()[i];
    int offset = 0;
    for (int c = 0; c < kComponents; ++c) {
      block_start_[c] = offset;
      block_len_[c] = detail::natural_degree(factors_[factor_of(c)]);
      offset += block_len_[c];
    }
    degree_ = offset;
  }

  int degree() const noexcept { return degree_; }

  static int factor_of(int component) {
    return component < 4 ? 0 : component < 6 ? 1 : component < 8 ? 2 : 3;
  }

  /// Image of a component index under h; every h is an involution.
  static int move(int h, int c) {
    static constexpr std::array<int, kComponents> a{1, 0, 3, 2, 5, 4, 6, 7, 8};
    static constexpr std::array<int, kComponents> b{2, 3, 0, 1, 4, 5, 7, 6, 8};
    if (h & 1) c = a[c];
    if (h & 2) c = b[c];
    return c;
  }

  /// phi(h)(n): the component at index c moves to index h(c).
  static Vector phi(int h, const Vector& n) {
    Vector out;
    for (int c = 0; c < kComponents; ++c) out[move(h, c)] = n[c];
    return out;
  }

  /// (n1, h1)(n2, h2) = (n1 . phi(h1)(n2), h1 h2).
  static Element multiply(const Element& x, const Element& y) {
    Element z;
    Vector moved = phi(x.h, y.n);
    for (int c = 0; c < kComponents; ++c) z.n[c] = x.n[c] * moved[c];
    z.h = x.h ^ y.h;
    return z;
  }

  /// The element as a permutation of the natural action: n after h.
  Permutation embed(const Element& x) const {
    std::vector<int> image(degree_);
    for (int c = 0; c < kComponents; ++c) {
      const int target = move(x.h, c);
      for (int j = 0; j < block_len_[c]; ++j) {
        // h carries point j of block c to point j of block h(c); then the
        // component group acts inside that block.
        image[block_start_[c] + j] = block_start_[target] + x.n[target](j);
      }
    }
    return Permutation(std::move(image));
  }

  /// Every element, with component groups materialized in their natural action.
  std::vector<Element> elements(std::size_t max_elements) const {
    std::array<std::vector<Permutation>, 4> groups;
    for (int f = 0; f < 4; ++f)
      groups[f] = realize_permutation_group(factors_[f]).materialize(max_elements).elements();
    std::vector<Element> out{Element{}};
    for (int c = 0; c < kComponents; ++c) {
      std::vector<Element> next;
      for (const auto& partial : out)
        for (const auto& p : groups[factor_of(c)]) {
          Element e = partial;
          e.n[c] = p;
          next.push_back(std::move(e));
          if (next.size() * 4 > max_elements) {
            throw OracleBoundError("group elements", static_cast<long long>(max_elements),
                                   static_cast<long long>(next.size() * 4));
          }
        }
      out = std::move(next);
    }
    std::vector<Element> all;
    for (int h = 0; h < 4; ++h)
      for (const auto& e : out) {
        Element x = e;
        x.h = h;
        all.push_back(std::move(x));
      }
    return all;
  }

 private:
  std::array<GroupExpr, 4> factors_{GroupExpr::trivial(), GroupExpr::trivial(),
                                    GroupExpr::trivial(), GroupExpr::trivial()};
  std::array<int, kComponents> block_start_{};
  std::array<int, kComponents> block_len_{};
  int degree_ = 0;
};

}  // namespace compaut
