#include "doctest.h"

#include "../oracles/oracles.hpp"

using oracle::Exp;
using oracle::Poly;

TEST_CASE("oracle Weyl product") {
  Poly x{{Exp{1, 0}, 1}}, d{{Exp{0, 1}, 1}};
  Poly dx = oracle::weylProduct(d, x, 1);
  CHECK(dx == Poly{{Exp{1, 1}, 1}, {Exp{0, 0}, 1}});
  // d^2 x^2 = x^2 d^2 + 4 x d + 2
  Poly d2x2 = oracle::weylProduct(oracle::weylProduct(d, d, 1), oracle::weylProduct(x, x, 1), 1);
  CHECK(d2x2 == Poly{{Exp{2, 2}, 1}, {Exp{1, 1}, 4}, {Exp{0, 0}, 2}});
}

TEST_CASE("oracle linear solver and ansatz") {
  Poly x{{Exp{1, 0}, 1}}, d{{Exp{0, 1}, 1}};
  auto b = oracle::weylLeftQuotient(oracle::weylProduct(oracle::weylProduct(x, x, 1), d, 1), x, 1, 3);
  REQUIRE(b.has_value());
  CHECK(oracle::weylProduct(*b, x, 1) == oracle::weylProduct(oracle::weylProduct(x, x, 1), d, 1));
  CHECK_FALSE(oracle::weylLeftQuotient(oracle::weylProduct(x, d, 1), x, 1, 3).has_value());
}

TEST_CASE("oracle commutative Groebner basis") {
  // <x^2 - y, x*y - 1> in lex x > y contains y^3 - 1
  Poly f{{Exp{2, 0}, 1}, {Exp{0, 1}, -1}}, g{{Exp{1, 1}, 1}, {Exp{0, 0}, -1}};
  auto G = oracle::commutativeGB({f, g}, oracle::Order::Lex);
  REQUIRE(G.size() == 2);
  CHECK(G[0] == Poly{{Exp{0, 3}, 1}, {Exp{0, 0}, -1}});
  CHECK(G[1] == Poly{{Exp{1, 0}, 1}, {Exp{0, 2}, -1}});
}
