// Tree lattices with a strict fundamental domain on the (q_s, q_t)-biregular
// tree, given as a ray of finite groups. The tree is the building of the free
// product H_s * H_t: chambers are edges, s- and t-panels are the vertices.
//
// The ray Y has edges e_0, e_1, ... and vertices v_0, v_1, ..., with e_i
// joining v_i and v_{i+1}; v_i has type s for even i and t for odd i. Each
// chamber of the tree is mapped to a level i (its image e_i in Y) so that a
// lift of v_i carries [G_{v_i} : G_{e_{i-1}}] chambers of level i-1 and
// [G_{v_i} : G_{e_i}] chambers of level i.

#ifndef RAB_LATTICE_HPP_
#define RAB_LATTICE_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "building.hpp"
#include "treewall.hpp"

namespace rab {

  using Rational = boost::multiprecision::cpp_rational;

  struct Growth {
    enum class Kind { finite, geometric };
    Kind          kind  = Kind::finite;
    std::uint64_t ratio = 1;

    bool operator==(Growth const&) const = default;
  };

  // Orders beyond the given prefixes follow order[i] = ratio * order[i - 2]
  // for geometric growth; a finite ray ends at vertex v_m where m is the
  // number of edges given.
  struct RayOfGroups {
    std::size_t                qs = 2;
    std::size_t                qt = 2;
    std::vector<std::uint64_t> vertex_orders;
    std::vector<std::uint64_t> edge_orders;
    Growth                     growth;

    bool operator==(RayOfGroups const&) const = default;
  };

  struct CoveringChamber {
    Chamber     address;
    std::size_t level;

    bool operator==(CoveringChamber const&) const = default;
  };

  struct OrbitBall {
    std::vector<CoveringChamber> chambers;
    std::size_t                  window;
    bool                         windowed = true;
  };

  struct DisconnectionCertificate {
    std::size_t   n;
    std::size_t   wall_level;  // T_n is a lift of v_{wall_level}
    TreeWall      wall;
    Chamber       near;  // phi_n: level wall_level - 1, on the base side
    Chamber       far;   // phi'_n: level wall_level
    std::uint64_t near_stabilizer;
    std::uint64_t far_stabilizer;
    Chamber       moved;  // gamma * phi_n for some gamma fixing phi'_n
    struct Epicormic {
      Chamber     chamber;
      std::size_t orbit_distance;
      bool        operator==(Epicormic const&) const = default;
    };
    std::vector<Epicormic> epicormic;
    std::array<Chamber, 2> witnesses;  // phi_0 and a chamber of gamma * Y

    bool operator==(DisconnectionCertificate const&) const = default;
  };

  inline CoxeterSystem tree_system() {
    return CoxeterSystem({"s", "t"}, {});
  }

  class LatticeModel {
   public:
    static constexpr Generator   s_gen       = 0;
    static constexpr Generator   t_gen       = 1;
    static constexpr std::size_t check_depth = 8;

    explicit LatticeModel(RayOfGroups spec)
        : spec_(std::move(spec)),
          building_(GroupProduct(tree_system(), {spec_.qs, spec_.qt})) {
      validate();
    }

    [[nodiscard]] RayOfGroups const& spec() const noexcept {
      return spec_;
    }

    [[nodiscard]] Building const& building() const noexcept {
      return building_;
    }

    [[nodiscard]] bool cocompact() const noexcept {
      return spec_.growth.kind == Growth::Kind::finite;
    }

    // Number of edges of Y, when finite.
    [[nodiscard]] std::optional<std::size_t> ray_length() const {
      if (cocompact()) {
        return spec_.edge_orders.size();
      }
      return std::nullopt;
    }

    [[nodiscard]] std::uint64_t vertex_order(std::size_t i) const {
      return extend(spec_.vertex_orders, i, "vertex");
    }

    [[nodiscard]] std::uint64_t edge_order(std::size_t i) const {
      return extend(spec_.edge_orders, i, "edge");
    }

    [[nodiscard]] static Generator vertex_type(std::size_t i) noexcept {
      return i % 2 == 0 ? s_gen : t_gen;
    }

    [[nodiscard]] std::size_t valence(std::size_t i) const noexcept {
      return vertex_type(i) == s_gen ? spec_.qs : spec_.qt;
    }

    // Sorted levels of the chambers at a lift of v_i.
    [[nodiscard]] std::vector<std::size_t> vertex_levels(std::size_t i) const {
      std::vector<std::size_t> out;
      if (i > 0) {
        out.insert(out.end(), index(i, i - 1), i - 1);
      }
      if (!is_terminal(i)) {
        out.insert(out.end(), index(i, i), i);
      }
      return out;
    }

    // The image in Y of a chamber, read off along its normal form: every
    // prefix is the first chamber of the next panel, and the remaining
    // chambers of that panel take the remaining levels of the vertex in
    // increasing order of local index.
    [[nodiscard]] std::size_t level(Chamber const& phi) const {
      std::size_t level = 0;
      for (auto x : phi.syllables()) {
        std::size_t v      = vertex_type(level) == x.gen ? level : level + 1;
        auto        levels = vertex_levels(v);
        levels.erase(std::find(levels.begin(), levels.end(), level));
        level = levels[x.elem - 1];
      }
      return level;
    }

    [[nodiscard]] CoveringChamber project_to_Y(Chamber const& phi) const {
      return CoveringChamber{phi, level(phi)};
    }

    [[nodiscard]] std::uint64_t stabilizer_order(Chamber const& phi) const {
      return edge_order(level(phi));
    }

    [[nodiscard]] Chamber base() const {
      return building_.group().identity();
    }

    [[nodiscard]] bool in_orbit(Chamber const& phi) const {
      return level(phi) == 0;
    }

    // A gallery projects to a gallery of Y no longer than itself, and every
    // chamber of level L > 0 has a neighbour of level L - 1, so the distance
    // to the orbit of the base chamber is the level.
    [[nodiscard]] std::size_t orbit_distance(Chamber const& phi) const {
      return level(phi);
    }

    // The lift of e_L reached from the base chamber by climbing one level per
    // step, taking the lowest local index at each panel.
    [[nodiscard]] Chamber lift(std::size_t L) const {
      if (auto m = ray_length(); m && L >= *m) {
        throw Error("level " + std::to_string(L) + " is beyond the ray");
      }
      Chamber c = base();
      for (std::size_t i = 1; i <= L; ++i) {
        c = step(c, vertex_type(i), i);
      }
      return c;
    }

    // Walks down to level 0, one level per step.
    [[nodiscard]] Chamber descend(Chamber c) const {
      for (std::size_t L = level(c); L > 0; --L) {
        c = step(c, vertex_type(L), L - 1);
      }
      return c;
    }

    [[nodiscard]] OrbitBall D_set(std::size_t n, std::size_t window) const {
      OrbitBall out;
      out.window = window;
      for (auto& c : building_.ball(base(), window)) {
        auto L = level(c);
        if (L <= n) {
          out.chambers.push_back({c, L});
        }
      }
      return out;
    }

    // Sum of 1/|G_{e_i}| over i < k.
    [[nodiscard]] Rational covolume_partial(std::size_t k) const {
      if (auto m = ray_length(); m && k > *m) {
        k = *m;
      }
      Rational sum = 0;
      for (std::size_t i = 0; i < k; ++i) {
        sum += Rational(1, edge_order(i));
      }
      return sum;
    }

    // Closed-form value of the whole series.
    [[nodiscard]] Rational covolume() const {
      if (cocompact()) {
        return covolume_partial(spec_.edge_orders.size());
      }
      std::size_t E   = spec_.edge_orders.size();
      Rational    sum = covolume_partial(E - 2);
      Rational    r(spec_.growth.ratio);
      sum += (Rational(1, edge_order(E - 2)) + Rational(1, edge_order(E - 1)))
             * r / (r - 1);
      return sum;
    }

    [[nodiscard]] std::optional<DisconnectionCertificate>
    find_disconnection_certificate(std::size_t n, std::size_t search = 64) const;

    [[nodiscard]] bool verify_certificate(DisconnectionCertificate const& c) const;

   private:
    [[nodiscard]] bool is_terminal(std::size_t i) const noexcept {
      return cocompact() && i == spec_.edge_orders.size();
    }

    // [G_{v_i} : G_{e_j}]
    [[nodiscard]] std::size_t index(std::size_t i, std::size_t j) const {
      return static_cast<std::size_t>(vertex_order(i) / edge_order(j));
    }

    [[nodiscard]] std::uint64_t extend(std::vector<std::uint64_t> const& prefix,
                                       std::size_t                       i,
                                       char const*                       what) const {
      if (i < prefix.size()) {
        return prefix[i];
      }
      if (cocompact()) {
        throw Error(std::string(what) + " " + std::to_string(i)
                    + " is beyond the finite ray");
      }
      std::uint64_t value = extend(prefix, i - 2, what);
      if (value > UINT64_MAX / spec_.growth.ratio) {
        throw Error("group order overflow at " + std::string(what) + " "
                    + std::to_string(i));
      }
      return value * spec_.growth.ratio;
    }

    [[nodiscard]] Chamber step(Chamber const& c, Generator x, std::size_t target) const {
      for (auto const& d : building_.panel_chambers(building_.panel(c, x))) {
        if (d != c && level(d) == target) {
          return d;
        }
      }
      throw Error("no chamber of level " + std::to_string(target) + " next to "
                  + std::to_string(level(c)));
    }

    void validate() const {
      if (spec_.qs < 2 || spec_.qt < 2) {
        throw Error("valences q_s and q_t must be at least 2");
      }
      auto const& V = spec_.vertex_orders;
      auto const& E = spec_.edge_orders;
      if (E.empty()) {
        throw Error("the ray needs at least one edge");
      }
      for (auto o : V) {
        if (o == 0) throw Error("group orders must be positive");
      }
      for (auto o : E) {
        if (o == 0) throw Error("group orders must be positive");
      }
      std::size_t depth;
      if (cocompact()) {
        if (V.size() != E.size() + 1) {
          throw Error("a finite ray with " + std::to_string(E.size())
                      + " edges needs " + std::to_string(E.size() + 1)
                      + " vertex orders");
        }
        depth = E.size();
      } else {
        if (spec_.growth.ratio < 2) {
          throw Error("geometric growth ratio must be at least 2, otherwise "
                      "the covolume series diverges");
        }
        if (V.size() < 2 || E.size() < 2) {
          throw Error("geometric growth needs at least two vertex and two edge "
                      "orders");
        }
        depth = std::max(check_depth, std::max(V.size(), E.size()) + 4);
      }
      for (std::size_t i = 0; i <= depth; ++i) {
        std::size_t total = 0;
        for (std::size_t j : {i - 1, i}) {
          if ((j == i - 1 && i == 0) || (j == i && is_terminal(i))) {
            continue;
          }
          if (vertex_order(i) % edge_order(j) != 0) {
            throw Error("edge order " + std::to_string(edge_order(j))
                        + " does not divide vertex order "
                        + std::to_string(vertex_order(i)) + " at vertex "
                        + std::to_string(i));
          }
          total += index(i, j);
        }
        if (total != valence(i)) {
          throw Error("indices at vertex " + std::to_string(i) + " sum to "
                      + std::to_string(total) + ", but the valence is "
                      + std::to_string(valence(i)));
        }
      }
    }

    RayOfGroups spec_;
    Building    building_;
  };

  // Looks along Y, lowest level first, for a vertex v_L with L - 1 > n whose
  // chamber of level L has the larger stabilizer. Some gamma in that
  // stabilizer fixes the panel and moves phi_n = lift(L-1) to the other
  // chamber of level L - 1; gamma * phi_0 lies in the orbit on the other side
  // of the tree-wall.
  inline std::optional<DisconnectionCertificate>
  LatticeModel::find_disconnection_certificate(std::size_t n,
                                               std::size_t search) const {
    std::size_t last = n + 2 + search;
    if (auto m = ray_length()) {
      last = std::min(last, *m);
    }
    for (std::size_t L = n + 2; L < last; ++L) {
      if (edge_order(L - 1) >= edge_order(L)) {
        continue;
      }
      DisconnectionCertificate c;
      c.n               = n;
      c.wall_level      = L;
      c.near            = lift(L - 1);
      c.far             = lift(L);
      c.near_stabilizer = stabilizer_order(c.near);
      c.far_stabilizer  = stabilizer_order(c.far);
      c.wall            = tree_wall_of(building_, c.near, vertex_type(L));
      c.moved           = c.near;
      for (auto const& d : building_.panel_chambers(building_.panel(c.near, vertex_type(L)))) {
        if (d != c.near && level(d) == L - 1) {
          c.moved = d;
          break;
        }
      }
      for (auto const& d : epicormic_chambers(building_, c.wall, 0).chambers) {
        c.epicormic.push_back({d, orbit_distance(d)});
      }
      c.witnesses = {base(), descend(c.moved)};
      return c;
    }
    return std::nullopt;
  }

  // Re-derives every claim of the certificate from the model: the epicormic
  // chambers of the wall are exactly those listed and all lie outside D(n);
  // both witnesses lie in the orbit; the witnesses sit in different
  // components of the complement of the wall.
  inline bool
  LatticeModel::verify_certificate(DisconnectionCertificate const& c) const {
    auto const& B = building_;
    try {
      auto wall = tree_wall_of(B, c.wall.residue_rep, c.wall.type);
      if (wall != c.wall) {
        return false;
      }
      auto epi = epicormic_chambers(B, c.wall, 0);
      if (epi.truncated || epi.chambers.size() != c.epicormic.size()) {
        return false;
      }
      for (std::size_t i = 0; i < epi.chambers.size(); ++i) {
        auto const& e = c.epicormic[i];
        if (e.chamber != epi.chambers[i]
            || e.orbit_distance != orbit_distance(e.chamber)
            || e.orbit_distance <= c.n) {
          return false;
        }
      }
      for (auto const& w : c.witnesses) {
        if (orbit_distance(w) != 0) {
          return false;
        }
      }
      if (component_label(B, c.witnesses[0], c.wall)
          == component_label(B, c.witnesses[1], c.wall)) {
        return false;
      }
      // The recorded transverse data must be consistent as well.
      return c.wall.type == vertex_type(c.wall_level) && level(c.far) == c.wall_level
             && B.distance(c.near, c.far) == 1 && epicormic(B, c.near, c.wall)
             && epicormic(B, c.far, c.wall) && epicormic(B, c.moved, c.wall)
             && c.near_stabilizer == stabilizer_order(c.near)
             && c.far_stabilizer == stabilizer_order(c.far)
             && c.near_stabilizer < c.far_stabilizer
             && level(c.moved) == level(c.near) && c.moved != c.near;
    } catch (Error const&) {
      return false;
    }
  }

}  // namespace rab

#endif  // RAB_LATTICE_HPP_
