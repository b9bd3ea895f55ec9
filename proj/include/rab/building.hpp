// The chamber system of a regular right-angled building. Chambers are the
// elements of a graph product H; two chambers are s-adjacent when they differ
// on the right by a nontrivial element of H_s.

#ifndef RAB_BUILDING_HPP_
#define RAB_BUILDING_HPP_

#include <algorithm>
#include <bit>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coxeter.hpp"
#include "graph_product.hpp"

namespace rab {

  using Chamber = GroupElement;

  // An s-panel, identified by the shortest chamber of the coset phi H_s.
  struct Panel {
    Generator type;
    Chamber   rep;

    bool operator==(Panel const&) const = default;
    auto operator<=>(Panel const&) const = default;
  };

  // A standard apartment through `base`: chambers base * sigma(w) for w in W,
  // where sigma(w) multiplies the chosen elements section[s] along any
  // reduced expression of w.
  struct Apartment {
    Chamber                 base;
    std::vector<LocalIndex> section;
  };

  struct Gallery {
    std::vector<Chamber>   chambers;
    std::vector<Generator> types;  // types[i] joins chambers[i] and chambers[i+1]

    [[nodiscard]] std::size_t length() const noexcept {
      return types.size();
    }
  };

  struct Residue {
    std::vector<Chamber> chambers;
    bool                 truncated = false;
  };

  class Building {
   public:
    explicit Building(GroupProduct group) : group_(std::move(group)) {}

    [[nodiscard]] GroupProduct const& group() const noexcept {
      return group_;
    }

    [[nodiscard]] CoxeterSystem const& system() const noexcept {
      return group_.system();
    }

    [[nodiscard]] bool adjacent(Chamber const& a,
                                Chamber const& b,
                                Generator      s) const {
      system().check(s);
      auto d = group_.mult(group_.inv(a), b);
      return d.size() == 1 && d.syllables()[0].gen == s;
    }

    [[nodiscard]] WeylWord delta(Chamber const& a, Chamber const& b) const {
      return group_.type_map(group_.mult(group_.inv(a), b));
    }

    [[nodiscard]] std::size_t distance(Chamber const& a, Chamber const& b) const {
      // Normal forms are reduced, so the syllable count is l_S(delta).
      return group_.mult(group_.inv(a), b).size();
    }

    // The gallery whose type is the ShortLex form of delta(a, b); its
    // chambers are a times the prefixes of the normal form of a^-1 b.
    [[nodiscard]] Gallery minimal_gallery(Chamber const& a, Chamber const& b) const {
      auto    d = group_.mult(group_.inv(a), b);
      Gallery g;
      g.chambers.push_back(a);
      for (auto x : d.syllables()) {
        g.chambers.push_back(group_.mult(g.chambers.back(), x));
        g.types.push_back(x.gen);
      }
      return g;
    }

    [[nodiscard]] bool is_gallery(Gallery const& g) const {
      if (g.chambers.empty() || g.chambers.size() != g.types.size() + 1) {
        return false;
      }
      for (std::size_t i = 0; i < g.types.size(); ++i) {
        if (!adjacent(g.chambers[i], g.chambers[i + 1], g.types[i])) {
          return false;
        }
      }
      return true;
    }

    // Chambers at distance at most n from center, in ShortLex order of
    // center^-1 * chamber.
    [[nodiscard]] std::vector<Chamber> ball(Chamber const& center,
                                            std::size_t    n) const {
      return translate(center, group_.elements(system().all(), n));
    }

    [[nodiscard]] std::vector<Chamber> neighbours(Chamber const& c) const {
      std::vector<Chamber> out;
      for (Generator s = 0; s < system().rank(); ++s) {
        for (LocalIndex h = 1; h < group_.q(s); ++h) {
          out.push_back(group_.mult(c, Syllable{s, h}));
        }
      }
      return out;
    }

    // The J-residue of phi. When <J> is infinite and a bound is given, only
    // chambers within that distance of phi are returned and the result is
    // flagged as truncated.
    [[nodiscard]] Residue residue(Chamber const&             phi,
                                  GeneratorSet               J,
                                  std::optional<std::size_t> bound = {}) const {
      J &= system().all();
      Residue r;
      if (is_spherical(system(), J)) {
        std::size_t rank = static_cast<std::size_t>(std::popcount(J));
        r.chambers = translate(phi, group_.elements(J, rank));
        return r;
      }
      if (!bound) {
        throw Error("infinite residue requires a bound");
      }
      r.chambers  = translate(phi, group_.elements(J, *bound));
      r.truncated = true;
      return r;
    }

    [[nodiscard]] Panel panel(Chamber const& phi, Generator s) const {
      return Panel{s, group_.coset_rep(phi, singleton(s))};
    }

    // rep, rep*(s,1), ..., rep*(s,q_s-1); slot i holds local index i.
    [[nodiscard]] std::vector<Chamber> panel_chambers(Panel const& p) const {
      std::vector<Chamber> out{p.rep};
      for (LocalIndex h = 1; h < group_.q(p.type); ++h) {
        out.push_back(group_.mult(p.rep, Syllable{p.type, h}));
      }
      return out;
    }

    [[nodiscard]] Apartment default_apartment(Chamber const& base) const {
      return Apartment{base, std::vector<LocalIndex>(system().rank(), 1)};
    }

    void check(Apartment const& A) const {
      if (A.section.size() != system().rank()) {
        throw Error("apartment section has wrong size");
      }
      for (Generator s = 0; s < system().rank(); ++s) {
        if (A.section[s] == 0 || A.section[s] >= group_.q(s)) {
          throw Error("apartment section must pick a nontrivial element of H_"
                      + system().name(s));
        }
      }
    }

    [[nodiscard]] Chamber apartment_chamber(Apartment const& A, Word const& w) const {
      check(A);
      std::vector<Syllable> raw;
      raw.reserve(w.size());
      for (auto s : w) {
        system().check(s);
        raw.push_back({s, A.section[s]});
      }
      return group_.mult(A.base, group_.normal_form(raw));
    }

    [[nodiscard]] Chamber apartment_chamber(Apartment const& A,
                                            WeylWord const&  w) const {
      return apartment_chamber(A, w.letters());
    }

    // Retraction onto A centred at A.base.
    [[nodiscard]] Chamber retraction(Apartment const& A, Chamber const& psi) const {
      return apartment_chamber(A, delta(A.base, psi));
    }

    // The gate of psi in p: the unique chamber of p nearest psi. Returns the
    // slot index alongside the chamber.
    [[nodiscard]] std::pair<Chamber, std::size_t>
    project_to_panel(Chamber const& psi, Panel const& p) const {
      auto        chambers = panel_chambers(p);
      std::size_t best     = 0;
      std::size_t best_d   = distance(psi, chambers[0]);
      bool        tie      = false;
      for (std::size_t i = 1; i < chambers.size(); ++i) {
        std::size_t d = distance(psi, chambers[i]);
        if (d < best_d) {
          best   = i;
          best_d = d;
          tie    = false;
        } else if (d == best_d) {
          tie = true;
        }
      }
      if (tie) {
        throw Error("panel projection is not unique");
      }
      return {chambers[best], best};
    }

   private:
    std::vector<Chamber> translate(Chamber const&            phi,
                                   std::vector<GroupElement> elems) const {
      if (!phi.is_identity()) {
        for (auto& g : elems) {
          g = group_.mult(phi, g);
        }
      }
      return elems;
    }

    GroupProduct group_;
  };

  // Adjacency graph on a finite set of chambers: edges between s-adjacent
  // chambers of the set, a < b, sorted.
  struct ChamberGraph {
    std::vector<Chamber> chambers;
    struct Edge {
      std::size_t a;
      std::size_t b;
      Generator   type;
      auto        operator<=>(Edge const&) const = default;
    };
    std::vector<Edge> edges;
  };

  inline ChamberGraph chamber_graph(Building const& B, std::vector<Chamber> chambers) {
    std::sort(chambers.begin(), chambers.end());
    chambers.erase(std::unique(chambers.begin(), chambers.end()), chambers.end());
    ChamberGraph g;
    g.chambers = std::move(chambers);
    std::map<Chamber, std::size_t> index;
    for (std::size_t i = 0; i < g.chambers.size(); ++i) {
      index.emplace(g.chambers[i], i);
    }
    auto const& G = B.group();
    for (std::size_t i = 0; i < g.chambers.size(); ++i) {
      for (Generator s = 0; s < B.system().rank(); ++s) {
        for (LocalIndex h = 1; h < G.q(s); ++h) {
          auto it = index.find(G.mult(g.chambers[i], Syllable{s, h}));
          if (it != index.end() && it->second > i) {
            g.edges.push_back({i, it->second, s});
          }
        }
      }
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
  }

}  // namespace rab

#endif  // RAB_BUILDING_HPP_
