// rabtool: batch front end for the rab library.
//
// Exit status: 0 when every verification embedded in the report passes,
// 1 when one fails (or no certificate exists), 2 on bad input or usage.

#include <deque>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rab/rab.hpp"

namespace {

  using rab::json;

  constexpr std::size_t max_certificate_n = 12;

  struct Input {
    std::string path;
    std::string text;
  };

  struct Config {
    std::string              presentation;
    std::string              ray;
    std::string              format = "json";
    std::size_t              radius = 0;
    bool                     radius_set = false;
    std::size_t              radius_cap = 8;
    std::uint64_t            seed = 0;
    std::string              chamber;
    std::string              type;
    std::size_t              n = 1;
    std::string              batch;
    std::string              verify;
    std::vector<std::string> words;
  };

  class UsageError : public rab::Error {
    using rab::Error::Error;
  };

  Input read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw UsageError("cannot read " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return Input{path, buf.str()};
  }

  std::size_t radius_or(Config const& cfg, std::size_t fallback) {
    std::size_t r = cfg.radius_set ? cfg.radius : fallback;
    if (r > cfg.radius_cap) {
      throw UsageError("radius " + std::to_string(r) + " exceeds the cap of "
                       + std::to_string(cfg.radius_cap));
    }
    return r;
  }

  json header(std::string const& command, Input const& in, Config const& cfg) {
    return json{{"tool", "rabtool"},
                {"version", rab::version},
                {"command", command},
                {"input", {{"path", in.path}, {"hash", rab::content_hash(in.text)}}},
                {"seed", cfg.seed}};
  }

  void emit_json(json const& j) {
    std::cout << j.dump(2) << '\n';
  }

  void require_format(Config const& cfg, std::initializer_list<char const*> allowed) {
    for (auto f : allowed) {
      if (cfg.format == f) {
        return;
      }
    }
    throw UsageError("format " + cfg.format + " is not available for this command");
  }

  struct Loaded {
    Input               input;
    rab::Presentation   presentation;
  };

  Loaded load_presentation(Config const& cfg) {
    if (cfg.presentation.empty()) {
      throw UsageError("this command needs --presentation FILE");
    }
    auto in = read_file(cfg.presentation);
    return Loaded{in, rab::parse_presentation(in.text)};
  }

  rab::Generator parse_type(rab::CoxeterSystem const& sys, std::string const& name) {
    if (name.empty()) {
      throw UsageError("this command needs --type NAME");
    }
    auto s = sys.find(name);
    if (!s) {
      throw UsageError("unknown generator \"" + name + "\"");
    }
    return *s;
  }

  std::vector<std::string> names(rab::CoxeterSystem const& sys, std::vector<rab::Generator> const& gens) {
    std::vector<std::string> out;
    for (auto g : gens) {
      out.push_back(sys.name(g));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////

  int cmd_reduce(Config const& cfg) {
    require_format(cfg, {"json", "text"});
    auto [in, P] = load_presentation(cfg);
    auto G       = P.group();
    std::vector<std::string> words = cfg.words;
    if (!cfg.batch.empty()) {
      std::istringstream lines(read_file(cfg.batch).text);
      for (std::string line; std::getline(lines, line);) {
        if (!line.empty() && line.back() == '\r') {
          line.pop_back();
        }
        words.push_back(line);
      }
    }
    json results = json::array();
    std::ostringstream text;
    for (auto const& w : words) {
      // Words containing ':' are graph product elements, anything else is a
      // word in the generators of W.
      std::string out;
      std::size_t len;
      if (w.find(':') != std::string::npos) {
        auto a = rab::parse_element(G, w);
        out    = rab::format_element(G, a);
        len    = a.size();
      } else {
        auto r = rab::reduce(P.system, rab::parse_word(P.system, w));
        out    = rab::format_word(P.system, r);
        len    = r.size();
      }
      results.push_back({{"input", w}, {"normal_form", out}, {"length", len}});
      text << out << '\n';
    }
    if (cfg.format == "text") {
      std::cout << text.str();
    } else {
      auto j       = header("reduce", in, cfg);
      j["results"] = results;
      emit_json(j);
    }
    return 0;
  }

  int cmd_ball(Config const& cfg) {
    require_format(cfg, {"json", "dot", "text"});
    auto [in, P] = load_presentation(cfg);
    rab::Building B(P.group());
    auto          center = rab::parse_element(B.group(), cfg.chamber);
    auto          radius = radius_or(cfg, 1);
    auto          graph  = rab::chamber_graph(B, B.ball(center, radius));
    if (cfg.format == "dot") {
      std::cout << rab::to_dot(B.group(), graph,
                               {std::string("rabtool ") + rab::version,
                                "input " + in.path + " hash " + rab::content_hash(in.text),
                                "center \"" + cfg.chamber + "\" radius " + std::to_string(radius),
                                "seed " + std::to_string(cfg.seed)});
    } else if (cfg.format == "text") {
      for (auto const& c : graph.chambers) {
        std::cout << B.distance(center, c) << ' ' << rab::format_element(B.group(), c) << '\n';
      }
    } else {
      auto j      = header("ball", in, cfg);
      j["center"] = rab::format_element(B.group(), center);
      j["radius"] = radius;
      j["graph"]  = rab::to_json(B.group(), graph);
      emit_json(j);
    }
    return 0;
  }

  int cmd_treewall(Config const& cfg) {
    require_format(cfg, {"json", "text"});
    auto [in, P] = load_presentation(cfg);
    rab::Building B(P.group());
    auto const&   sys   = B.system();
    auto          phi   = rab::parse_element(B.group(), cfg.chamber);
    auto          s     = parse_type(sys, cfg.type);
    auto          T     = rab::tree_wall_of(B, phi, s);
    auto          bound = radius_or(cfg, 2);
    auto          epi   = rab::epicormic_chambers(B, T, bound);

    json chambers = json::array();
    for (auto const& c : epi.chambers) {
      chambers.push_back(rab::format_element(B.group(), c));
    }
    if (cfg.format == "text") {
      std::cout << "type " << sys.name(s) << '\n'
                << "residue_rep " << rab::format_element(B.group(), T.residue_rep) << '\n'
                << "classification " << rab::to_string(T.classification) << '\n'
                << "epicormic " << epi.chambers.size()
                << (epi.truncated ? " (within radius " + std::to_string(bound) + ")" : "")
                << '\n';
      return 0;
    }
    auto j         = header("treewall", in, cfg);
    j["chamber"]   = rab::format_element(B.group(), phi);
    j["wall"]      = rab::to_json(B, T);
    j["perp"]      = names(sys, rab::s_perp(sys, s));
    j["perp_class"] = rab::to_string(rab::classify_perp(sys, s));
    j["epicormic"] = {{"chambers", chambers},
                      {"truncated", epi.truncated},
                      {"window", epi.truncated ? json(bound) : json(nullptr)}};
    emit_json(j);
    return 0;
  }

  int cmd_separate(Config const& cfg) {
    require_format(cfg, {"json", "text"});
    auto [in, P] = load_presentation(cfg);
    rab::Building B(P.group());
    auto          phi    = rab::parse_element(B.group(), cfg.chamber);
    auto          s      = parse_type(B.system(), cfg.type);
    auto          window = radius_or(cfg, 4);
    auto          T      = rab::tree_wall_of(B, phi, s);
    auto          r      = rab::separation_report(B, T, window);
    if (cfg.format == "text") {
      std::cout << "type " << B.system().name(s) << " q " << r.q << " window " << window
                << '\n'
                << "chambers " << r.chambers << " classes " << r.bfs_classes << " labels "
                << r.labels_found << '\n'
                << "refines " << r.refines << " panel_separated " << r.panel_separated
                << " inconclusive " << r.inconclusive << '\n'
                << (r.passed() ? "PASS" : "FAIL") << '\n';
    } else {
      auto j      = header("separate", in, cfg);
      j["wall"]   = rab::to_json(B, T);
      j["report"] = rab::to_json(B.group(), r);
      emit_json(j);
    }
    return r.passed() ? 0 : 1;
  }

  // Retraction onto a standard apartment through the chosen chamber, with a
  // section drawn from the seed. For every generator s and every chamber psi
  // of the window: delta is preserved, rho is idempotent, and psi is
  // epicormic at the s-tree-wall through the base iff rho(psi) is.
  int cmd_retract_audit(Config const& cfg) {
    require_format(cfg, {"json", "text"});
    auto [in, P] = load_presentation(cfg);
    rab::Building B(P.group());
    auto const&   sys    = B.system();
    auto          base   = rab::parse_element(B.group(), cfg.chamber);
    auto          radius = radius_or(cfg, 3);

    std::mt19937_64 rng(cfg.seed);
    rab::Apartment  A{base, {}};
    for (rab::Generator s = 0; s < sys.rank(); ++s) {
      A.section.push_back(static_cast<rab::LocalIndex>(1 + rng() % (B.group().q(s) - 1)));
    }
    auto ball = B.ball(base, radius);

    bool ok      = true;
    json per_type = json::array();
    for (rab::Generator s = 0; s < sys.rank(); ++s) {
      auto        T          = rab::tree_wall_of(B, base, s);
      std::size_t epicormic  = 0;
      std::size_t mismatches = 0;
      for (auto const& psi : ball) {
        auto rho = B.retraction(A, psi);
        bool e1  = rab::epicormic(B, psi, T);
        bool e2  = rab::epicormic(B, rho, T);
        epicormic += e1;
        if (e1 != e2 || B.retraction(A, rho) != rho || B.delta(base, rho) != B.delta(base, psi)) {
          ++mismatches;
        }
      }
      ok = ok && mismatches == 0;
      per_type.push_back({{"type", sys.name(s)},
                          {"epicormic", epicormic},
                          {"mismatches", mismatches}});
    }
    if (cfg.format == "text") {
      for (auto const& t : per_type) {
        std::cout << t["type"].get<std::string>() << " epicormic " << t["epicormic"]
                  << " mismatches " << t["mismatches"] << '\n';
      }
      std::cout << (ok ? "PASS" : "FAIL") << '\n';
    } else {
      auto j       = header("retract-audit", in, cfg);
      j["base"]    = rab::format_element(B.group(), base);
      j["section"] = A.section;
      j["radius"]  = radius;
      j["chambers"] = ball.size();
      j["types"]   = per_type;
      j["passed"]  = ok;
      emit_json(j);
    }
    return ok ? 0 : 1;
  }

  // Components of `cells` under adjacency inside `cells`.
  std::map<rab::Chamber, std::size_t> components(rab::Building const&        B,
                                                 std::set<rab::Chamber> const& cells) {
    std::map<rab::Chamber, std::size_t> comp;
    std::size_t                         next = 0;
    for (auto const& start : cells) {
      if (comp.count(start)) {
        continue;
      }
      std::deque<rab::Chamber> queue{start};
      comp.emplace(start, next);
      while (!queue.empty()) {
        auto c = queue.front();
        queue.pop_front();
        for (auto const& d : B.neighbours(c)) {
          if (cells.count(d) && comp.emplace(d, next).second) {
            queue.push_back(d);
          }
        }
      }
      ++next;
    }
    return comp;
  }

  int cmd_lattice_demo(Config const& cfg) {
    require_format(cfg, {"json", "text"});
    Input in;
    if (cfg.ray.empty()) {
      in = Input{"<demo>", rab::to_json(rab::demo_ray()).dump()};
    } else {
      in = read_file(cfg.ray);
    }
    rab::LatticeModel M(rab::parse_ray(in.text));
    auto const&       B = M.building();
    auto const&       G = B.group();
    auto              j = header("lattice-demo", in, cfg);
    j["ray"]            = rab::to_json(M.spec());
    j["cocompact"]      = M.cocompact();
    j["covolume"]       = {{"partial_20", M.covolume_partial(20).str()},
                           {"closed_form", M.covolume().str()}};

    if (!cfg.verify.empty()) {
      auto doc  = json::parse(read_file(cfg.verify).text);
      auto cert = rab::certificate_from_json(M, doc.contains("certificate") ? doc["certificate"] : doc);
      bool ok   = M.verify_certificate(cert);
      j["n"]        = cert.n;
      j["verified"] = ok;
      if (cfg.format == "text") {
        std::cout << "n " << cert.n << '\n' << (ok ? "PASS" : "FAIL") << '\n';
      } else {
        emit_json(j);
      }
      return ok ? 0 : 1;
    }

    if (cfg.n > max_certificate_n) {
      throw UsageError("n " + std::to_string(cfg.n) + " exceeds the cap of "
                       + std::to_string(max_certificate_n));
    }
    j["n"]    = cfg.n;
    auto cert = M.find_disconnection_certificate(cfg.n);
    if (!cert) {
      // Failure record: report D(0) connectivity in a window around the base.
      auto radius = radius_or(cfg, 4);
      std::set<rab::Chamber> cells;
      for (auto const& c : M.D_set(0, radius).chambers) {
        cells.insert(c.address);
      }
      std::set<std::size_t> ids;
      for (auto const& [c, id] : components(B, cells)) {
        ids.insert(id);
      }
      j["certificate"] = nullptr;
      j["reason"]      = M.cocompact() ? "the ray is finite, so the lattice is cocompact"
                                       : "no stabilizer increase along the searched ray";
      j["D0"] = {{"window", radius}, {"chambers", cells.size()}, {"connected", ids.size() == 1}};
      if (cfg.format == "text") {
        std::cout << "no certificate: " << j["reason"].get<std::string>() << '\n'
                  << "D(0) window " << radius << " connected " << (ids.size() == 1) << '\n';
      } else {
        emit_json(j);
      }
      return 1;
    }

    bool verified = M.verify_certificate(*cert);
    // Windowed check: the witnesses are in different components of D(n)
    // restricted to a ball around the tree-wall.
    std::size_t            radius = cfg.n + 4;
    std::set<rab::Chamber> cells;
    for (auto const& c : B.ball(cert->wall.residue_rep, radius)) {
      if (M.orbit_distance(c) <= cfg.n) {
        cells.insert(c);
      }
    }
    auto comp      = components(B, cells);
    bool inside    = cells.count(cert->witnesses[0]) && cells.count(cert->witnesses[1]);
    bool separated = inside && comp.at(cert->witnesses[0]) != comp.at(cert->witnesses[1]);
    j["certificate"] = rab::to_json(M, *cert);
    j["verified"]    = verified;
    j["window"]      = {{"center", rab::format_element(G, cert->wall.residue_rep)},
                        {"radius", radius},
                        {"chambers", cells.size()},
                        {"witnesses_inside", inside},
                        {"witnesses_disconnected", separated}};
    bool ok = verified && separated;
    if (cfg.format == "text") {
      std::cout << "n " << cfg.n << " wall " << G.system().name(cert->wall.type) << " at level "
                << cert->wall_level << '\n'
                << "witnesses \"" << rab::format_element(G, cert->witnesses[0]) << "\" \""
                << rab::format_element(G, cert->witnesses[1]) << "\"\n"
                << "verified " << verified << " disconnected " << separated << '\n'
                << (ok ? "PASS" : "FAIL") << '\n';
    } else {
      emit_json(j);
    }
    return ok ? 0 : 1;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Right-angled building and tree-lattice toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(rab::version));

  Config cfg;
  app.add_option("--presentation", cfg.presentation, "JSON presentation of W and the local groups");
  app.add_option("--ray", cfg.ray, "JSON ray of groups (lattice-demo)");
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "dot", "text"}));
  app.add_option("--radius", cfg.radius, "Ball radius or window size")
      ->each([&](std::string const&) { cfg.radius_set = true; });
  app.add_option("--radius-cap", cfg.radius_cap, "Largest radius accepted");
  app.add_option("--seed", cfg.seed, "Seed for randomized choices");

  auto* reduce = app.add_subcommand("reduce", "Normal forms of words or elements");
  reduce->add_option("words", cfg.words, "Words (\"r s r\") or elements (\"s:1.t:2\")");
  reduce->add_option("--batch", cfg.batch, "File with one word per line");

  auto* ball = app.add_subcommand("ball", "Chamber graph of a ball");
  ball->add_option("--chamber", cfg.chamber, "Centre chamber");

  auto* treewall = app.add_subcommand("treewall", "Tree-wall through a chamber");
  treewall->add_option("--chamber", cfg.chamber, "Chamber");
  treewall->add_option("--type", cfg.type, "Generator")->required();

  auto* separate = app.add_subcommand("separate", "Separation check for a tree-wall");
  separate->add_option("--chamber", cfg.chamber, "Chamber");
  separate->add_option("--type", cfg.type, "Generator")->required();

  auto* audit = app.add_subcommand("retract-audit", "Audit the retraction onto an apartment");
  audit->add_option("--chamber", cfg.chamber, "Base chamber of the apartment");

  auto* demo = app.add_subcommand("lattice-demo", "Disconnection certificate for a ray lattice");
  demo->add_option("-n", cfg.n, "Orbit radius");
  demo->add_option("--verify", cfg.verify, "Check a saved certificate instead");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*reduce) return cmd_reduce(cfg);
    if (*ball) return cmd_ball(cfg);
    if (*treewall) return cmd_treewall(cfg);
    if (*separate) return cmd_separate(cfg);
    if (*audit) return cmd_retract_audit(cfg);
    if (*demo) return cmd_lattice_demo(cfg);
  } catch (rab::Error const& e) {
    std::cerr << "rabtool: error: " << e.what() << '\n';
    return 2;
  } catch (json::exception const& e) {
    std::cerr << "rabtool: error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
