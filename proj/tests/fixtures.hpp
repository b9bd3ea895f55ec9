// The three running examples: the infinite dihedral group, (C2 x C2) * C2,
// and the right-angled p-gon group, with their buildings.

#ifndef RAB_TESTS_FIXTURES_HPP_
#define RAB_TESTS_FIXTURES_HPP_

#include <string>
#include <vector>

#include "rab/rab.hpp"

namespace rab::fixtures {

  inline CoxeterSystem W1() {
    return CoxeterSystem({"s", "t"}, {});
  }

  inline CoxeterSystem W2() {
    return CoxeterSystem({"r", "s", "t"}, {{"r", "s"}});
  }

  inline CoxeterSystem W3(std::size_t p = 5) {
    std::vector<std::string>                         names;
    std::vector<std::pair<std::string, std::string>> pairs;
    for (std::size_t i = 1; i <= p; ++i) {
      names.push_back("s" + std::to_string(i));
    }
    for (std::size_t i = 0; i < p; ++i) {
      pairs.emplace_back(names[i], names[(i + 1) % p]);
    }
    return CoxeterSystem(names, pairs);
  }

  inline Building X1(std::size_t qs = 2, std::size_t qt = 3) {
    return Building(GroupProduct(W1(), {qs, qt}));
  }

  inline Building X2(std::size_t qr = 2, std::size_t qs = 2, std::size_t qt = 3) {
    return Building(GroupProduct(W2(), {qr, qs, qt}));
  }

  inline Building X3(std::size_t p = 5, std::size_t q = 2) {
    return Building(GroupProduct(W3(p), std::vector<std::size_t>(p, q)));
  }

}  // namespace rab::fixtures

#endif  // RAB_TESTS_FIXTURES_HPP_
