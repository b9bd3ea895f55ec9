#ifndef RAB_RAB_HPP_
#define RAB_RAB_HPP_

#include "building.hpp"
#include "coxeter.hpp"
#include "graph_product.hpp"
#include "io.hpp"
#include "lattice.hpp"
#include "treewall.hpp"

namespace rab {
  inline constexpr char const* version = "0.1.0";
}

#endif  // RAB_RAB_HPP_
