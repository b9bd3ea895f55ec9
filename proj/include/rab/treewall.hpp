// Tree-walls of a right-angled building. The chambers epicormic at the
// tree-wall of type s through phi form the ({s} u s-perp)-residue of phi; a
// tree-wall is identified by its type and the shortest chamber of that
// residue.

#ifndef RAB_TREEWALL_HPP_
#define RAB_TREEWALL_HPP_

#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "building.hpp"
#include "coxeter.hpp"

namespace rab {

  enum class WallShape { vertex, finite, infinite };

  inline char const* to_string(WallShape w) noexcept {
    switch (w) {
      case WallShape::vertex:
        return "vertex";
      case WallShape::finite:
        return "finite";
      case WallShape::infinite:
        return "infinite";
    }
    return "?";
  }

  struct TreeWall {
    Generator type;
    Chamber   residue_rep;
    WallShape classification;

    bool operator==(TreeWall const&) const = default;
    auto operator<=>(TreeWall const& that) const {
      if (auto c = type <=> that.type; c != 0) {
        return c;
      }
      return residue_rep <=> that.residue_rep;
    }
  };

  struct ComponentLabel {
    Panel       base_panel;
    std::size_t index;

    bool operator==(ComponentLabel const&) const = default;
  };

  // {s} u s-perp
  inline GeneratorSet wall_generators(CoxeterSystem const& sys, Generator s) {
    return singleton(s) | s_perp_set(sys, s);
  }

  inline WallShape wall_shape(CoxeterSystem const& sys, Generator s) {
    GeneratorSet perp = s_perp_set(sys, s);
    if (perp == 0) {
      return WallShape::vertex;
    }
    return is_spherical(sys, perp) ? WallShape::finite : WallShape::infinite;
  }

  inline TreeWall tree_wall_of(Building const& B, Chamber const& phi, Generator s) {
    B.system().check(s);
    auto J = wall_generators(B.system(), s);
    return TreeWall{s, B.group().coset_rep(phi, J), wall_shape(B.system(), s)};
  }

  inline bool epicormic(Building const& B, Chamber const& psi, TreeWall const& T) {
    auto J = wall_generators(B.system(), T.type);
    return B.group().coset_rep(psi, J) == T.residue_rep;
  }

  // A step crosses T when it has type s and joins two chambers epicormic at
  // T; steps of type in s-perp stay on one side.
  inline bool crosses(Building const& B, Gallery const& g, TreeWall const& T) {
    for (std::size_t i = 0; i < g.types.size(); ++i) {
      if (g.types[i] == T.type && epicormic(B, g.chambers[i], T)
          && epicormic(B, g.chambers[i + 1], T)) {
        return true;
      }
    }
    return false;
  }

  inline Panel base_panel(Building const& B, TreeWall const& T) {
    return B.panel(T.residue_rep, T.type);
  }

  // Which chamber over the base panel is nearest to psi.
  inline ComponentLabel component_label(Building const& B,
                                        Chamber const&  psi,
                                        TreeWall const& T) {
    auto p = base_panel(B, T);
    return ComponentLabel{p, B.project_to_panel(psi, p).second};
  }

  // Every epicormic chamber within `bound` of the residue representative;
  // the whole (finite) residue unless the tree-wall is infinite.
  inline Residue epicormic_chambers(Building const& B,
                                    TreeWall const& T,
                                    std::size_t     bound) {
    return B.residue(T.residue_rep, wall_generators(B.system(), T.type), bound);
  }

  struct SeparationReport {
    Generator   type;
    std::size_t q;
    std::size_t window;
    std::size_t chambers;
    std::size_t bfs_classes;
    std::size_t labels_found;
    bool        refines;           // each BFS class carries a single label
    bool        panel_separated;   // base panel chambers in distinct classes
    bool        inconclusive;
    // One chamber per label: the chamber of the base panel in that slot,
    // together with the BFS class it landed in.
    struct Witness {
      std::size_t label;
      Chamber     chamber;
      std::size_t bfs_class;
    };
    std::vector<Witness> witnesses;

    [[nodiscard]] bool passed() const noexcept {
      return !inconclusive && labels_found == q && refines && panel_separated;
    }
  };

  // Partitions ball(residue_rep, window) into classes joined by galleries
  // inside the ball that never cross T, and compares them with component
  // labels.
  inline SeparationReport separation_report(Building const& B,
                                            TreeWall const& T,
                                            std::size_t     window) {
    SeparationReport r{};
    r.type         = T.type;
    r.q            = B.group().q(T.type);
    r.window       = window;
    r.inconclusive = window < 2;

    auto const& G     = B.group();
    auto        cells = B.ball(T.residue_rep, window);
    r.chambers        = cells.size();
    std::map<Chamber, std::size_t> index;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      index.emplace(cells[i], i);
    }
    std::vector<char> epi(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
      epi[i] = epicormic(B, cells[i], T);
    }

    constexpr std::size_t     unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> cls(cells.size(), unset);
    std::size_t              n_classes = 0;
    for (std::size_t start = 0; start < cells.size(); ++start) {
      if (cls[start] != unset) {
        continue;
      }
      std::deque<std::size_t> queue{start};
      cls[start] = n_classes;
      while (!queue.empty()) {
        auto i = queue.front();
        queue.pop_front();
        for (Generator s = 0; s < B.system().rank(); ++s) {
          for (LocalIndex h = 1; h < G.q(s); ++h) {
            auto it = index.find(G.mult(cells[i], Syllable{s, h}));
            if (it == index.end()) {
              continue;
            }
            auto j = it->second;
            if (s == T.type && epi[i] && epi[j]) {
              continue;
            }
            if (cls[j] == unset) {
              cls[j] = n_classes;
              queue.push_back(j);
            }
          }
        }
      }
      ++n_classes;
    }
    r.bfs_classes = n_classes;

    std::vector<std::size_t> class_label(n_classes, unset);
    std::set<std::size_t>    labels;
    r.refines = true;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      auto label = component_label(B, cells[i], T).index;
      labels.insert(label);
      if (class_label[cls[i]] == unset) {
        class_label[cls[i]] = label;
      } else if (class_label[cls[i]] != label) {
        r.refines = false;
      }
    }
    r.labels_found = labels.size();

    auto                  over = B.panel_chambers(base_panel(B, T));
    std::set<std::size_t> seen;
    r.panel_separated = true;
    for (std::size_t k = 0; k < over.size(); ++k) {
      auto it = index.find(over[k]);
      if (it == index.end()) {
        r.panel_separated = false;
        continue;
      }
      auto c = cls[it->second];
      if (!seen.insert(c).second) {
        r.panel_separated = false;
      }
      r.witnesses.push_back({k, over[k], c});
    }
    return r;
  }

}  // namespace rab

#endif  // RAB_TREEWALL_HPP_
