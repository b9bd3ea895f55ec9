// Right-angled Coxeter systems: presentations, ShortLex normal forms and the
// word problem, and the commutation structure s-perp around a generator.

#ifndef RAB_COXETER_HPP_
#define RAB_COXETER_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace rab {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  using Generator = std::uint16_t;
  using Word      = std::vector<Generator>;

  // Bit i set <=> generator i belongs to the set.
  using GeneratorSet = std::uint64_t;

  constexpr GeneratorSet singleton(Generator s) noexcept {
    return GeneratorSet{1} << s;
  }

  constexpr bool contains(GeneratorSet set, Generator s) noexcept {
    return (set >> s) & 1U;
  }

  // Entries of the Coxeter matrix. Infinity is a sentinel and never takes part
  // in arithmetic.
  enum class CoxeterEntry : std::uint8_t { one, two, infinity };

  class CoxeterSystem {
   public:
    static constexpr std::size_t max_rank = 64;

    CoxeterSystem(std::vector<std::string>                            names,
                  std::vector<std::pair<std::string, std::string>> const& commuting)
        : names_(std::move(names)) {
      if (names_.empty()) {
        throw Error("a Coxeter system needs at least one generator");
      }
      if (names_.size() > max_rank) {
        throw Error("at most " + std::to_string(max_rank)
                    + " generators are supported");
      }
      for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty()) {
          throw Error("generator names must be nonempty");
        }
        if (!index_.emplace(names_[i], static_cast<Generator>(i)).second) {
          throw Error("duplicate generator name \"" + names_[i] + "\"");
        }
      }
      m_.assign(rank() * rank(), CoxeterEntry::infinity);
      for (std::size_t i = 0; i < rank(); ++i) {
        m_[i * rank() + i] = CoxeterEntry::one;
      }
      for (auto const& [a, b] : commuting) {
        Generator s = index(a);
        Generator t = index(b);
        if (s == t) {
          throw Error("self-pair (" + a + ", " + b + ") in commuting list");
        }
        m_[s * rank() + t] = CoxeterEntry::two;
        m_[t * rank() + s] = CoxeterEntry::two;
      }
    }

    [[nodiscard]] std::size_t rank() const noexcept {
      return names_.size();
    }

    [[nodiscard]] std::string const& name(Generator s) const {
      check(s);
      return names_[s];
    }

    [[nodiscard]] std::vector<std::string> const& names() const noexcept {
      return names_;
    }

    [[nodiscard]] std::optional<Generator> find(std::string_view name) const {
      auto it = index_.find(std::string(name));
      if (it == index_.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    [[nodiscard]] Generator index(std::string_view name) const {
      if (auto s = find(name)) {
        return *s;
      }
      throw Error("unknown generator \"" + std::string(name) + "\"");
    }

    [[nodiscard]] CoxeterEntry m(Generator s, Generator t) const {
      check(s);
      check(t);
      return m_[s * rank() + t];
    }

    // m_st = 2. A generator does not commute with itself in this sense.
    [[nodiscard]] bool commute(Generator s, Generator t) const noexcept {
      return m_[s * rank() + t] == CoxeterEntry::two;
    }

    [[nodiscard]] GeneratorSet all() const noexcept {
      return rank() == max_rank ? ~GeneratorSet{0}
                                : (GeneratorSet{1} << rank()) - 1;
    }

    void check(Generator s) const {
      if (s >= rank()) {
        throw Error("generator index " + std::to_string(s)
                    + " out of range for rank " + std::to_string(rank()));
      }
    }

    void check(Word const& w) const {
      for (auto s : w) {
        check(s);
      }
    }

    bool operator==(CoxeterSystem const& that) const {
      return names_ == that.names_ && m_ == that.m_;
    }

   private:
    std::vector<std::string>                   names_;
    std::unordered_map<std::string, Generator> index_;
    std::vector<CoxeterEntry>                  m_;
  };

  // Convenience constructor mirroring the presentation format.
  inline CoxeterSystem
  new_system(std::vector<std::string>                               names,
             std::vector<std::pair<std::string, std::string>> const& commuting) {
    return CoxeterSystem(std::move(names), commuting);
  }

  namespace detail {

    // Rearranges a trace (a word up to commutation of m=2 letters) into its
    // lexicographically least linearisation. The first letter of the least
    // linearisation is the least letter that can be moved to the front, and
    // the remainder is again least; repeat.
    template <typename T, typename GenOf>
    void lex_normalize(std::vector<T>&      v,
                       CoxeterSystem const& sys,
                       GenOf                gen_of) {
      std::size_t const n = v.size();
      if (n < 2) {
        return;
      }
      std::vector<T>    out;
      std::vector<bool> used(n, false);
      out.reserve(n);
      std::vector<Generator> pending;
      for (std::size_t round = 0; round < n; ++round) {
        std::size_t best = n;
        pending.clear();
        for (std::size_t i = 0; i < n; ++i) {
          if (used[i]) {
            continue;
          }
          Generator g     = gen_of(v[i]);
          bool      front = std::all_of(pending.begin(),
                                   pending.end(),
                                   [&](Generator p) { return sys.commute(p, g); });
          if (front && (best == n || g < gen_of(v[best]))) {
            best = i;
          }
          pending.push_back(g);
        }
        used[best] = true;
        out.push_back(v[best]);
      }
      v = std::move(out);
    }

    inline void push_letter(CoxeterSystem const& sys, Word& u, Generator a) {
      for (std::size_t j = u.size(); j-- > 0;) {
        if (u[j] == a) {
          u.erase(u.begin() + static_cast<std::ptrdiff_t>(j));
          return;
        }
        if (!sys.commute(u[j], a)) {
          break;
        }
      }
      u.push_back(a);
    }

  }  // namespace detail

  // An element of W stored as its ShortLex normal form. Instances are only
  // produced by reduce(), so the invariant always holds.
  class WeylWord {
   public:
    WeylWord() = default;

    [[nodiscard]] Word const& letters() const noexcept {
      return letters_;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return letters_.size();
    }
    [[nodiscard]] bool empty() const noexcept {
      return letters_.empty();
    }
    [[nodiscard]] auto begin() const noexcept {
      return letters_.begin();
    }
    [[nodiscard]] auto end() const noexcept {
      return letters_.end();
    }
    Generator operator[](std::size_t i) const {
      return letters_[i];
    }

    bool operator==(WeylWord const&) const = default;

    // ShortLex.
    std::strong_ordering operator<=>(WeylWord const& that) const {
      if (auto c = size() <=> that.size(); c != 0) {
        return c;
      }
      return letters_ <=> that.letters_;
    }

   private:
    explicit WeylWord(Word w) : letters_(std::move(w)) {}
    friend WeylWord reduce(CoxeterSystem const&, Word const&);

    Word letters_;
  };

  // ShortLex normal form of the image of `word` in W. Letters are inserted
  // left to right, cancelling against the rightmost equal letter reachable
  // through commuting letters; the resulting reduced word is then put in least
  // lexicographic order within its commutation class.
  inline WeylWord reduce(CoxeterSystem const& sys, Word const& word) {
    sys.check(word);
    Word u;
    u.reserve(word.size());
    for (auto a : word) {
      detail::push_letter(sys, u, a);
    }
    detail::lex_normalize(u, sys, [](Generator g) { return g; });
    return WeylWord(std::move(u));
  }

  inline std::size_t length(CoxeterSystem const& sys, Word const& word) {
    return reduce(sys, word).size();
  }

  inline bool equal(CoxeterSystem const& sys, Word const& w1, Word const& w2) {
    return reduce(sys, w1) == reduce(sys, w2);
  }

  inline WeylWord multiply(CoxeterSystem const& sys,
                           WeylWord const&      a,
                           WeylWord const&      b) {
    Word w = a.letters();
    w.insert(w.end(), b.begin(), b.end());
    return reduce(sys, w);
  }

  inline WeylWord inverse(CoxeterSystem const& sys, WeylWord const& a) {
    return reduce(sys, Word(a.letters().rbegin(), a.letters().rend()));
  }

  // l(ws) < l(w), i.e. s is a right descent of w.
  inline bool is_right_descent(CoxeterSystem const& sys,
                               WeylWord const&      w,
                               Generator            s) {
    sys.check(s);
    for (std::size_t j = w.size(); j-- > 0;) {
      if (w[j] == s) {
        return true;
      }
      if (!sys.commute(w[j], s)) {
        return false;
      }
    }
    return false;
  }

  inline GeneratorSet letter_set(WeylWord const& w) noexcept {
    GeneratorSet set = 0;
    for (auto s : w) {
      set |= singleton(s);
    }
    return set;
  }

  // s-perp: the t != s with m_st = 2, in generator order.
  inline std::vector<Generator> s_perp(CoxeterSystem const& sys, Generator s) {
    sys.check(s);
    std::vector<Generator> out;
    for (Generator t = 0; t < sys.rank(); ++t) {
      if (t != s && sys.commute(s, t)) {
        out.push_back(t);
      }
    }
    return out;
  }

  inline GeneratorSet s_perp_set(CoxeterSystem const& sys, Generator s) {
    GeneratorSet set = 0;
    for (auto t : s_perp(sys, s)) {
      set |= singleton(t);
    }
    return set;
  }

  enum class PerpClass { trivial, finite_nontrivial, infinite };

  inline char const* to_string(PerpClass c) noexcept {
    switch (c) {
      case PerpClass::trivial:
        return "trivial";
      case PerpClass::finite_nontrivial:
        return "finite_nontrivial";
      case PerpClass::infinite:
        return "infinite";
    }
    return "?";
  }

  // The special subgroup <J> is finite iff J is a clique of the commutation
  // graph, in which case it is (C_2)^|J|.
  inline bool is_spherical(CoxeterSystem const& sys, GeneratorSet J) {
    for (Generator a = 0; a < sys.rank(); ++a) {
      for (Generator b = a + 1; b < sys.rank(); ++b) {
        if (contains(J, a) && contains(J, b) && !sys.commute(a, b)) {
          return false;
        }
      }
    }
    return true;
  }

  inline PerpClass classify_perp(CoxeterSystem const& sys, Generator s) {
    GeneratorSet perp = s_perp_set(sys, s);
    if (perp == 0) {
      return PerpClass::trivial;
    }
    return is_spherical(sys, perp) ? PerpClass::finite_nontrivial
                                   : PerpClass::infinite;
  }

  // Exchange condition: a reduced expression for w ending in s, when s is a
  // right descent of w.
  inline std::optional<Word> reduced_expression_ending_in(CoxeterSystem const& sys,
                                                          WeylWord const&      w,
                                                          Generator            s) {
    sys.check(s);
    for (std::size_t j = w.size(); j-- > 0;) {
      if (w[j] == s) {
        Word out = w.letters();
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(j));
        out.push_back(s);
        return out;
      }
      if (!sys.commute(w[j], s)) {
        break;
      }
    }
    return std::nullopt;
  }

  // All elements of W with letters in J and length at most n, in ShortLex
  // order.
  inline std::vector<WeylWord> weyl_ball(CoxeterSystem const& sys,
                                         std::size_t          n,
                                         GeneratorSet         J) {
    std::vector<WeylWord> out{WeylWord{}};
    std::size_t           layer_begin = 0;
    for (std::size_t len = 0; len < n; ++len) {
      std::set<WeylWord> next;
      for (std::size_t i = layer_begin; i < out.size(); ++i) {
        for (Generator s = 0; s < sys.rank(); ++s) {
          if (!contains(J, s) || is_right_descent(sys, out[i], s)) {
            continue;
          }
          Word w = out[i].letters();
          w.push_back(s);
          next.insert(reduce(sys, w));
        }
      }
      layer_begin = out.size();
      out.insert(out.end(), next.begin(), next.end());
      if (next.empty()) {
        break;
      }
    }
    return out;
  }

  inline std::vector<WeylWord> weyl_ball(CoxeterSystem const& sys,
                                         std::size_t          n) {
    return weyl_ball(sys, n, sys.all());
  }

}  // namespace rab

#endif  // RAB_COXETER_HPP_
