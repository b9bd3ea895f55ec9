// Graph products of finite groups over the commutation graph of a
// right-angled Coxeter system: free product of the local groups H_s modulo
// [H_s, H_t] for m_st = 2. Elements are kept in a canonical syllable normal
// form whose generator sequence is the ShortLex normal form of its type.

#ifndef RAB_GRAPH_PRODUCT_HPP_
#define RAB_GRAPH_PRODUCT_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "coxeter.hpp"

namespace rab {

  using LocalIndex = std::uint16_t;

  struct Syllable {
    Generator  gen;
    LocalIndex elem;  // 1..q_gen - 1; 0 is the identity and never stored

    auto operator<=>(Syllable const&) const = default;
  };

  // A finite group on {0, ..., order-1} with 0 the identity.
  class LocalGroup {
   public:
    static LocalGroup cyclic(std::size_t order) {
      if (order < 2) {
        throw Error("local groups must have order at least 2, got "
                    + std::to_string(order));
      }
      std::vector<std::vector<std::size_t>> table(order,
                                                  std::vector<std::size_t>(order));
      for (std::size_t a = 0; a < order; ++a) {
        for (std::size_t b = 0; b < order; ++b) {
          table[a][b] = (a + b) % order;
        }
      }
      return LocalGroup(table);
    }

    // Validates closure, identity at 0, inverses and associativity (the
    // latter exhaustively, order^3 products).
    explicit LocalGroup(std::vector<std::vector<std::size_t>> const& table)
        : order_(table.size()) {
      if (order_ < 2) {
        throw Error("local groups must have order at least 2, got "
                    + std::to_string(order_));
      }
      if (order_ > 0xFFFF) {
        throw Error("local group order too large");
      }
      mul_.resize(order_ * order_);
      for (std::size_t a = 0; a < order_; ++a) {
        if (table[a].size() != order_) {
          throw Error("multiplication table is not square");
        }
        for (std::size_t b = 0; b < order_; ++b) {
          if (table[a][b] >= order_) {
            throw Error("multiplication table is not closed");
          }
          mul_[a * order_ + b] = static_cast<LocalIndex>(table[a][b]);
        }
      }
      for (std::size_t a = 0; a < order_; ++a) {
        if (mul(0, a) != a || mul(a, 0) != a) {
          throw Error("index 0 is not the identity of the table");
        }
      }
      inv_.assign(order_, 0);
      for (std::size_t a = 0; a < order_; ++a) {
        std::size_t found = order_;
        for (std::size_t b = 0; b < order_; ++b) {
          if (mul(a, b) == 0 && mul(b, a) == 0) {
            found = b;
            break;
          }
        }
        if (found == order_) {
          throw Error("element " + std::to_string(a) + " has no inverse");
        }
        inv_[a] = static_cast<LocalIndex>(found);
      }
      for (std::size_t a = 0; a < order_; ++a) {
        for (std::size_t b = 0; b < order_; ++b) {
          for (std::size_t c = 0; c < order_; ++c) {
            if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
              throw Error("multiplication table is not associative");
            }
          }
        }
      }
    }

    [[nodiscard]] std::size_t order() const noexcept {
      return order_;
    }

    [[nodiscard]] LocalIndex mul(std::size_t a, std::size_t b) const noexcept {
      return mul_[a * order_ + b];
    }

    [[nodiscard]] LocalIndex inv(std::size_t a) const noexcept {
      return inv_[a];
    }

    bool operator==(LocalGroup const&) const = default;

   private:
    std::size_t             order_;
    std::vector<LocalIndex> mul_;
    std::vector<LocalIndex> inv_;
  };

  class GroupElement {
   public:
    GroupElement() = default;

    [[nodiscard]] std::vector<Syllable> const& syllables() const noexcept {
      return syllables_;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return syllables_.size();
    }
    [[nodiscard]] bool is_identity() const noexcept {
      return syllables_.empty();
    }

    bool operator==(GroupElement const&) const = default;

    // ShortLex on syllables.
    std::strong_ordering operator<=>(GroupElement const& that) const {
      if (auto c = size() <=> that.size(); c != 0) {
        return c;
      }
      return syllables_ <=> that.syllables_;
    }

   private:
    explicit GroupElement(std::vector<Syllable> s) : syllables_(std::move(s)) {}
    friend class GroupProduct;

    std::vector<Syllable> syllables_;
  };

  class GroupProduct {
   public:
    // tables[s], when present, replaces the default cyclic group Z/q_s; its
    // order must equal q[s].
    GroupProduct(CoxeterSystem                                       sys,
                 std::vector<std::size_t> const&                     q,
                 std::vector<std::optional<LocalGroup>> const& tables = {})
        : sys_(std::move(sys)) {
      if (q.size() != sys_.rank()) {
        throw Error("expected " + std::to_string(sys_.rank())
                    + " local orders, got " + std::to_string(q.size()));
      }
      if (!tables.empty() && tables.size() != sys_.rank()) {
        throw Error("tables must be given for every generator or none");
      }
      for (std::size_t s = 0; s < q.size(); ++s) {
        if (q[s] < 2) {
          throw Error("q_" + sys_.name(static_cast<Generator>(s))
                      + " must be at least 2, got " + std::to_string(q[s]));
        }
        if (!tables.empty() && tables[s]) {
          if (tables[s]->order() != q[s]) {
            throw Error("table for " + sys_.name(static_cast<Generator>(s))
                        + " has order " + std::to_string(tables[s]->order())
                        + ", expected " + std::to_string(q[s]));
          }
          locals_.push_back(*tables[s]);
        } else {
          locals_.push_back(LocalGroup::cyclic(q[s]));
        }
      }
    }

    [[nodiscard]] CoxeterSystem const& system() const noexcept {
      return sys_;
    }

    [[nodiscard]] LocalGroup const& local(Generator s) const {
      sys_.check(s);
      return locals_[s];
    }

    [[nodiscard]] std::size_t q(Generator s) const {
      return local(s).order();
    }

    [[nodiscard]] GroupElement identity() const {
      return GroupElement{};
    }

    void check(Syllable x) const {
      sys_.check(x.gen);
      if (x.elem >= q(x.gen)) {
        throw Error("local index " + std::to_string(x.elem) + " out of range for "
                    + sys_.name(x.gen) + " (order " + std::to_string(q(x.gen))
                    + ")");
      }
    }

    // Syllables with local index 0 are dropped as identities.
    [[nodiscard]] GroupElement normal_form(std::span<Syllable const> raw) const {
      std::vector<Syllable> u;
      u.reserve(raw.size());
      for (auto x : raw) {
        check(x);
      }
      for (auto x : raw) {
        push(u, x);
      }
      detail::lex_normalize(u, sys_, [](Syllable const& x) { return x.gen; });
      return GroupElement(std::move(u));
    }

    [[nodiscard]] GroupElement syllable(Generator s, LocalIndex h) const {
      Syllable x{s, h};
      return normal_form(std::span<Syllable const>(&x, 1));
    }

    [[nodiscard]] GroupElement mult(GroupElement const& a,
                                    GroupElement const& b) const {
      std::vector<Syllable> u = a.syllables_;
      u.reserve(a.size() + b.size());
      for (auto x : b.syllables_) {
        push(u, x);
      }
      detail::lex_normalize(u, sys_, [](Syllable const& x) { return x.gen; });
      return GroupElement(std::move(u));
    }

    // a * (s, h)
    [[nodiscard]] GroupElement mult(GroupElement const& a, Syllable x) const {
      check(x);
      std::vector<Syllable> u = a.syllables_;
      push(u, x);
      detail::lex_normalize(u, sys_, [](Syllable const& y) { return y.gen; });
      return GroupElement(std::move(u));
    }

    [[nodiscard]] GroupElement inv(GroupElement const& a) const {
      std::vector<Syllable> raw;
      raw.reserve(a.size());
      for (auto it = a.syllables_.rbegin(); it != a.syllables_.rend(); ++it) {
        raw.push_back({it->gen, locals_[it->gen].inv(it->elem)});
      }
      return normal_form(raw);
    }

    [[nodiscard]] WeylWord type_map(GroupElement const& a) const {
      Word w;
      w.reserve(a.size());
      for (auto x : a.syllables_) {
        w.push_back(x.gen);
      }
      return reduce(sys_, w);
    }

    // Index of the syllable of type s that can be moved to the end of a, if
    // any (then a and a with that syllable removed share their s-panel).
    [[nodiscard]] std::optional<std::size_t> trailing(GroupElement const& a,
                                                      Generator s) const {
      auto const& v = a.syllables_;
      for (std::size_t j = v.size(); j-- > 0;) {
        if (v[j].gen == s) {
          return j;
        }
        if (!sys_.commute(v[j].gen, s)) {
          break;
        }
      }
      return std::nullopt;
    }

    // The unique shortest element of the coset a<H_J>: strip syllables with
    // generators in J while one can be moved to the end.
    [[nodiscard]] GroupElement coset_rep(GroupElement const& a,
                                         GeneratorSet        J) const {
      std::vector<Syllable> v = a.syllables_;
      bool                  changed = true;
      while (changed) {
        changed = false;
        for (std::size_t j = v.size(); j-- > 0;) {
          if (!contains(J, v[j].gen)) {
            continue;
          }
          bool movable = true;
          for (std::size_t k = j + 1; k < v.size(); ++k) {
            if (!sys_.commute(v[k].gen, v[j].gen)) {
              movable = false;
              break;
            }
          }
          if (movable) {
            v.erase(v.begin() + static_cast<std::ptrdiff_t>(j));
            changed = true;
            break;
          }
        }
      }
      detail::lex_normalize(v, sys_, [](Syllable const& x) { return x.gen; });
      return GroupElement(std::move(v));
    }

    // All elements with generators in J and at most max_len syllables, in
    // ShortLex order.
    [[nodiscard]] std::vector<GroupElement> elements(GeneratorSet J,
                                                     std::size_t  max_len) const {
      std::vector<GroupElement> out{identity()};
      std::size_t               layer_begin = 0;
      for (std::size_t len = 0; len < max_len; ++len) {
        std::set<GroupElement> next;
        for (std::size_t i = layer_begin; i < out.size(); ++i) {
          for (Generator s = 0; s < sys_.rank(); ++s) {
            if (!contains(J, s) || trailing(out[i], s)) {
              continue;
            }
            for (LocalIndex h = 1; h < q(s); ++h) {
              next.insert(mult(out[i], Syllable{s, h}));
            }
          }
        }
        if (next.empty()) {
          break;
        }
        layer_begin = out.size();
        out.insert(out.end(), next.begin(), next.end());
      }
      return out;
    }

   private:
    void push(std::vector<Syllable>& u, Syllable x) const {
      if (x.elem == 0) {
        return;
      }
      for (std::size_t j = u.size(); j-- > 0;) {
        if (u[j].gen == x.gen) {
          LocalIndex h = locals_[x.gen].mul(u[j].elem, x.elem);
          if (h == 0) {
            u.erase(u.begin() + static_cast<std::ptrdiff_t>(j));
          } else {
            u[j].elem = h;
          }
          return;
        }
        if (!sys_.commute(u[j].gen, x.gen)) {
          break;
        }
      }
      u.push_back(x);
    }

    CoxeterSystem           sys_;
    std::vector<LocalGroup> locals_;
  };

}  // namespace rab

template <>
struct std::hash<rab::GroupElement> {
  std::size_t operator()(rab::GroupElement const& a) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto x : a.syllables()) {
      h ^= (static_cast<std::uint64_t>(x.gen) << 16) | x.elem;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

#endif  // RAB_GRAPH_PRODUCT_HPP_
