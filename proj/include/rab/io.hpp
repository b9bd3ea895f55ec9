// Text and JSON formats: presentations, rays of groups, chamber text
// (`s:1.t:2`), ball graphs, separation reports and disconnection
// certificates.

#ifndef RAB_IO_HPP_
#define RAB_IO_HPP_

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "building.hpp"
#include "coxeter.hpp"
#include "graph_product.hpp"
#include "lattice.hpp"
#include "treewall.hpp"

namespace rab {

  using json = nlohmann::json;

  class ParseError : public Error {
   public:
    ParseError(std::string_view text, std::size_t pos, std::string const& expected)
        : Error("parse error at position " + std::to_string(pos) + " in \""
                + std::string(text) + "\": expected " + expected),
          position(pos) {}
    std::size_t position;
  };

  ////////////////////////////////////////////////////////////////////////
  // Presentations
  ////////////////////////////////////////////////////////////////////////

  // {"generators":[...], "commuting":[[a,b],...], "q":{name:order,...},
  //  "tables":{name:[[...],...],...}}
  // Only "generators" is required; q defaults to 2 and tables to cyclic
  // groups. Any other key is rejected.
  struct Presentation {
    CoxeterSystem                          system;
    std::vector<std::size_t>               q;
    std::vector<std::optional<LocalGroup>> tables;

    [[nodiscard]] GroupProduct group() const {
      return GroupProduct(system, q, tables);
    }
  };

  namespace detail {
    inline void reject_unknown(json const&                        j,
                               std::set<std::string> const&       allowed,
                               std::string const&                 what) {
      if (!j.is_object()) {
        throw Error(what + " must be a JSON object");
      }
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (allowed.count(it.key()) == 0) {
          throw Error("unknown field \"" + it.key() + "\" in " + what);
        }
      }
    }
  }  // namespace detail

  inline Presentation presentation_from_json(json const& j) {
    detail::reject_unknown(j, {"generators", "commuting", "q", "tables"}, "presentation");
    if (!j.contains("generators") || !j["generators"].is_array()) {
      throw Error("presentation needs a \"generators\" array");
    }
    auto names = j["generators"].get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> pairs;
    if (j.contains("commuting")) {
      for (auto const& p : j["commuting"]) {
        if (!p.is_array() || p.size() != 2) {
          throw Error("each commuting entry must be a pair of generator names");
        }
        pairs.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
      }
    }
    CoxeterSystem            sys(names, pairs);
    std::vector<std::size_t> q(sys.rank(), 2);
    if (j.contains("q")) {
      if (!j["q"].is_object()) {
        throw Error("\"q\" must map generator names to orders");
      }
      for (auto it = j["q"].begin(); it != j["q"].end(); ++it) {
        if (!it.value().is_number_integer() || it.value().get<long long>() < 2) {
          throw Error("q_" + it.key() + " must be an integer at least 2");
        }
        q[sys.index(it.key())] = it.value().get<std::size_t>();
      }
    }
    std::vector<std::optional<LocalGroup>> tables;
    if (j.contains("tables")) {
      tables.resize(sys.rank());
      for (auto it = j["tables"].begin(); it != j["tables"].end(); ++it) {
        tables[sys.index(it.key())] =
            LocalGroup(it.value().get<std::vector<std::vector<std::size_t>>>());
      }
    }
    return Presentation{std::move(sys), std::move(q), std::move(tables)};
  }

  inline Presentation parse_presentation(std::string_view text) {
    json j;
    try {
      j = json::parse(text);
    } catch (json::parse_error const& e) {
      throw Error(std::string("invalid presentation JSON: ") + e.what());
    }
    try {
      return presentation_from_json(j);
    } catch (json::exception const& e) {
      throw Error(std::string("malformed presentation: ") + e.what());
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Words and chambers as text
  ////////////////////////////////////////////////////////////////////////

  // Generator names separated by whitespace.
  inline Word parse_word(CoxeterSystem const& sys, std::string_view text) {
    Word        w;
    std::size_t i = 0;
    while (i < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) {
        ++j;
      }
      auto s = sys.find(text.substr(i, j - i));
      if (!s) {
        throw ParseError(text, i, "a generator name");
      }
      w.push_back(*s);
      i = j;
    }
    return w;
  }

  inline std::string format_word(CoxeterSystem const& sys, Word const& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) out += ' ';
      out += sys.name(w[i]);
    }
    return out;
  }

  inline std::string format_word(CoxeterSystem const& sys, WeylWord const& w) {
    return format_word(sys, w.letters());
  }

  inline std::string format_element(GroupProduct const& G, GroupElement const& a) {
    std::string out;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i) out += '.';
      auto x = a.syllables()[i];
      out += G.system().name(x.gen);
      out += ':';
      out += std::to_string(x.elem);
    }
    return out;
  }

  // `gen:index` syllables separated by dots; the empty string is the
  // identity. The result is normalised.
  inline GroupElement parse_element(GroupProduct const& G, std::string_view text) {
    std::vector<Syllable> raw;
    std::size_t           i = 0;
    while (i < text.size()) {
      std::size_t colon = text.find(':', i);
      std::size_t stop  = text.find('.', i);
      if (colon == std::string_view::npos || (stop != std::string_view::npos && stop < colon)) {
        throw ParseError(text, i, "`gen:index`");
      }
      auto s = G.system().find(text.substr(i, colon - i));
      if (!s) {
        throw ParseError(text, i, "a generator name");
      }
      std::size_t j = colon + 1;
      if (j >= text.size() || !std::isdigit(static_cast<unsigned char>(text[j]))) {
        throw ParseError(text, j, "a local index");
      }
      std::size_t h = 0;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
        h = h * 10 + static_cast<std::size_t>(text[j] - '0');
        if (h > 0xFFFF) {
          throw ParseError(text, colon + 1, "a local index below " + std::to_string(G.q(*s)));
        }
        ++j;
      }
      if (h == 0 || h >= G.q(*s)) {
        throw ParseError(text, colon + 1,
                         "a local index in 1.." + std::to_string(G.q(*s) - 1));
      }
      raw.push_back({*s, static_cast<LocalIndex>(h)});
      if (j < text.size()) {
        if (text[j] != '.') {
          throw ParseError(text, j, "`.` or end of input");
        }
        ++j;
        if (j == text.size()) {
          throw ParseError(text, j, "a syllable after `.`");
        }
      }
      i = j;
    }
    return G.normal_form(raw);
  }

  ////////////////////////////////////////////////////////////////////////
  // Ball graphs
  ////////////////////////////////////////////////////////////////////////

  // {"chambers":[...],"edges":[{"a":i,"b":j,"type":"s"}]}
  inline json to_json(GroupProduct const& G, ChamberGraph const& g) {
    json chambers = json::array();
    for (auto const& c : g.chambers) {
      chambers.push_back(format_element(G, c));
    }
    json edges = json::array();
    for (auto const& e : g.edges) {
      edges.push_back({{"a", e.a}, {"b", e.b}, {"type", G.system().name(e.type)}});
    }
    return json{{"chambers", chambers}, {"edges", edges}};
  }

  inline std::string to_dot(GroupProduct const& G,
                            ChamberGraph const& g,
                            std::vector<std::string> const& comments = {}) {
    std::ostringstream out;
    for (auto const& c : comments) {
      out << "// " << c << '\n';
    }
    out << "graph ball {\n";
    for (std::size_t i = 0; i < g.chambers.size(); ++i) {
      auto label = format_element(G, g.chambers[i]);
      out << "  n" << i << " [label=\"" << (label.empty() ? "1" : label) << "\"];\n";
    }
    for (auto const& e : g.edges) {
      out << "  n" << e.a << " -- n" << e.b << " [label=\"" << G.system().name(e.type)
          << "\"];\n";
    }
    out << "}\n";
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Tree-walls
  ////////////////////////////////////////////////////////////////////////

  inline json to_json(Building const& B, TreeWall const& T) {
    return json{{"type", B.system().name(T.type)},
                {"residue_rep", format_element(B.group(), T.residue_rep)},
                {"classification", to_string(T.classification)}};
  }

  inline json to_json(GroupProduct const& G, SeparationReport const& r) {
    json witnesses = json::array();
    for (auto const& w : r.witnesses) {
      witnesses.push_back({{"label", w.label},
                           {"chamber", format_element(G, w.chamber)},
                           {"class", w.bfs_class}});
    }
    return json{{"type", G.system().name(r.type)},
                {"q", r.q},
                {"window", r.window},
                {"chambers", r.chambers},
                {"bfs_classes", r.bfs_classes},
                {"labels_found", r.labels_found},
                {"refines", r.refines},
                {"panel_separated", r.panel_separated},
                {"inconclusive", r.inconclusive},
                {"passed", r.passed()},
                {"witnesses", witnesses}};
  }

  ////////////////////////////////////////////////////////////////////////
  // Rays of groups
  ////////////////////////////////////////////////////////////////////////

  // {"qs":2,"qt":3,"vertex_orders":[...],"edge_orders":[...],
  //  "growth":"geometric:r"|"finite"}
  inline RayOfGroups ray_from_json(json const& j) {
    detail::reject_unknown(j, {"qs", "qt", "vertex_orders", "edge_orders", "growth"},
                           "ray");
    for (auto key : {"qs", "qt", "vertex_orders", "edge_orders", "growth"}) {
      if (!j.contains(key)) {
        throw Error(std::string("ray needs \"") + key + "\"");
      }
    }
    RayOfGroups ray;
    ray.qs            = j["qs"].get<std::size_t>();
    ray.qt            = j["qt"].get<std::size_t>();
    ray.vertex_orders = j["vertex_orders"].get<std::vector<std::uint64_t>>();
    ray.edge_orders   = j["edge_orders"].get<std::vector<std::uint64_t>>();
    auto growth       = j["growth"].get<std::string>();
    if (growth == "finite") {
      ray.growth = Growth{Growth::Kind::finite, 1};
    } else if (growth.rfind("geometric:", 0) == 0) {
      auto digits = growth.substr(10);
      if (digits.empty() || digits.size() > 18
          || !std::all_of(digits.begin(), digits.end(), [](char c) {
               return std::isdigit(static_cast<unsigned char>(c));
             })) {
        throw Error("growth ratio must be a positive integer: \"" + growth + "\"");
      }
      ray.growth = Growth{Growth::Kind::geometric, std::stoull(digits)};
    } else {
      throw Error("unknown growth rule \"" + growth + "\"");
    }
    return ray;
  }

  inline json to_json(RayOfGroups const& ray) {
    return json{{"qs", ray.qs},
                {"qt", ray.qt},
                {"vertex_orders", ray.vertex_orders},
                {"edge_orders", ray.edge_orders},
                {"growth", ray.growth.kind == Growth::Kind::finite
                               ? std::string("finite")
                               : "geometric:" + std::to_string(ray.growth.ratio)}};
  }

  inline RayOfGroups parse_ray(std::string_view text) {
    try {
      return ray_from_json(json::parse(text));
    } catch (json::exception const& e) {
      throw Error(std::string("malformed ray: ") + e.what());
    }
  }

  // The (2,3) demonstration ray: |G_{e_i}| = 2^ceil(i/2), covolume 3.
  inline RayOfGroups demo_ray() {
    return RayOfGroups{2, 3, {2, 2, 2}, {1, 2}, Growth{Growth::Kind::geometric, 2}};
  }

  // One edge with trivial stabilizer; the lattice is H_s * H_t itself.
  inline RayOfGroups control_ray() {
    return RayOfGroups{2, 2, {2, 2}, {1}, Growth{Growth::Kind::finite, 1}};
  }

  ////////////////////////////////////////////////////////////////////////
  // Certificates
  ////////////////////////////////////////////////////////////////////////

  inline json to_json(LatticeModel const& M, DisconnectionCertificate const& c) {
    auto const& G   = M.building().group();
    json        epi = json::array();
    for (auto const& e : c.epicormic) {
      epi.push_back({{"chamber", format_element(G, e.chamber)},
                     {"orbit_distance", e.orbit_distance}});
    }
    return json{{"n", c.n},
                {"wall",
                 {{"type", G.system().name(c.wall.type)},
                  {"residue_rep", format_element(G, c.wall.residue_rep)},
                  {"classification", to_string(c.wall.classification)},
                  {"level", c.wall_level}}},
                {"near", format_element(G, c.near)},
                {"far", format_element(G, c.far)},
                {"stabilizers", {c.near_stabilizer, c.far_stabilizer}},
                {"moved", format_element(G, c.moved)},
                {"epicormic", epi},
                {"witnesses",
                 {format_element(G, c.witnesses[0]), format_element(G, c.witnesses[1])}}};
  }

  inline DisconnectionCertificate certificate_from_json(LatticeModel const& M,
                                                        json const&         j) {
    auto const& G = M.building().group();
    try {
      detail::reject_unknown(
          j, {"n", "wall", "near", "far", "stabilizers", "moved", "epicormic", "witnesses"},
          "certificate");
      detail::reject_unknown(j.at("wall"), {"type", "residue_rep", "classification", "level"},
                             "certificate wall");
      DisconnectionCertificate c;
      c.n          = j.at("n").get<std::size_t>();
      auto type    = G.system().index(j.at("wall").at("type").get<std::string>());
      auto rep     = parse_element(G, j.at("wall").at("residue_rep").get<std::string>());
      auto shape   = j.at("wall").at("classification").get<std::string>();
      c.wall       = TreeWall{type, rep, wall_shape(G.system(), type)};
      if (shape != to_string(c.wall.classification)) {
        throw Error("certificate wall classification \"" + shape + "\" is wrong");
      }
      c.wall_level = j.at("wall").at("level").get<std::size_t>();
      c.near       = parse_element(G, j.at("near").get<std::string>());
      c.far        = parse_element(G, j.at("far").get<std::string>());
      auto stabs   = j.at("stabilizers").get<std::vector<std::uint64_t>>();
      if (stabs.size() != 2) {
        throw Error("certificate needs two stabilizer orders");
      }
      c.near_stabilizer = stabs[0];
      c.far_stabilizer  = stabs[1];
      c.moved           = parse_element(G, j.at("moved").get<std::string>());
      for (auto const& e : j.at("epicormic")) {
        c.epicormic.push_back({parse_element(G, e.at("chamber").get<std::string>()),
                               e.at("orbit_distance").get<std::size_t>()});
      }
      auto w = j.at("witnesses").get<std::vector<std::string>>();
      if (w.size() != 2) {
        throw Error("certificate needs two witnesses");
      }
      c.witnesses = {parse_element(G, w[0]), parse_element(G, w[1])};
      return c;
    } catch (json::exception const& e) {
      throw Error(std::string("malformed certificate: ") + e.what());
    }
  }

  // FNV-1a, for tagging reports with their input.
  inline std::string content_hash(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
  }

}  // namespace rab

#endif  // RAB_IO_HPP_
