#include <doctest.h>

#include <cmath>

#include "dualpf/dual.hpp"
#include "dualpf/error.hpp"
#include "dualpf/hypergraph.hpp"
#include "dualpf/parse.hpp"
#include "dualpf/tensor.hpp"
#include "support.hpp"

using namespace dualpf;
using dualpf::testing::Rng;

namespace {

Vector vec(std::initializer_list<double> v) {
  Vector out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) out[i++] = x;
  return out;
}

Hypergraph one_based(int n, int m, std::initializer_list<Edge> edges) {
  std::vector<Edge> es;
  for (Edge e : edges) {
    for (int& v : e) --v;
    es.push_back(e);
  }
  return Hypergraph(n, m, es);
}

}  // namespace

TEST_CASE("dual number arithmetic") {
  const DualNumber a{2.0, 3.0};
  const DualNumber b{-1.5, 0.25};
  CHECK(a + b == DualNumber{0.5, 3.25});
  CHECK(a * b == DualNumber{-3.0, 2.0 * 0.25 + 3.0 * -1.5});
  CHECK(a * DualNumber{1.0, 0.0} == a);
  const DualNumber eps{0.0, 1.0};
  CHECK(eps * eps == DualNumber{0.0, 0.0});
  CHECK(a.positive());
  CHECK_FALSE(DualNumber(0.0, 5.0).positive());

  const DualNumber cube = pow(a, 3);
  const DualNumber direct = a * a * a;
  CHECK(cube.s == doctest::Approx(direct.s));
  CHECK(cube.d == doctest::Approx(direct.d));
  CHECK(pow(a, 0) == DualNumber{1.0, 0.0});
}

TEST_CASE("adjacency tensor values") {
  SUBCASE("single 3-edge stores 1/2") {
    auto t = adjacency_tensor(one_based(3, 3, {{1, 2, 3}}));
    CHECK(t.value({0, 1, 2}) == doctest::Approx(0.5));
    CHECK(t.value({2, 0, 1}) == doctest::Approx(0.5));
    CHECK(t.entries().size() == 1);
  }
  SUBCASE("graph edge stores 1") {
    auto t = adjacency_tensor(one_based(2, 2, {{1, 2}}));
    CHECK(t.value({1, 0}) == 1.0);
  }
  SUBCASE("edgeless hypergraph gives the zero tensor") {
    auto t = adjacency_tensor(Hypergraph(4, 3, {}));
    CHECK(t.empty());
    CHECK(tensor_apply(t, Vector::Ones(4)).isZero());
  }
}

TEST_CASE("tensor_apply examples") {
  CHECK(tensor_apply(adjacency_tensor(one_based(3, 3, {{1, 2, 3}})), Vector::Ones(3))
            .isApprox(vec({1, 1, 1})));
  CHECK(tensor_apply(adjacency_tensor(one_based(3, 2, {{1, 2}, {2, 3}, {1, 3}})), vec({1, 2, 3}))
            .isApprox(vec({5, 4, 3})));
  Perturbation p{{{{0, 1, 2}, 1.0}}};
  CHECK(tensor_apply(perturbation_tensor(p, 3, 3), Vector::Ones(3)).isApprox(vec({2, 2, 2})));
  CHECK_THROWS_AS(tensor_apply(adjacency_tensor(one_based(3, 3, {{1, 2, 3}})), Vector::Ones(4)),
                  Error);
}

TEST_CASE("tensor_apply matches the dense definition, including repeated indices") {
  Rng rng(11);
  std::uniform_real_distribution<double> u(0.1, 2.0);
  for (int trial = 0; trial < 60; ++trial) {
    const int m = 2 + trial % 3;
    const int n = 2 + trial % 4;
    std::vector<std::pair<IndexTuple, double>> entries;
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int k = 0; k < 5; ++k) {
      IndexTuple idx(m);
      for (int& i : idx) i = pick(rng);
      entries.emplace_back(idx, u(rng));
    }
    SparseSymTensor t(m, n, entries);
    Vector x(n);
    for (int i = 0; i < n; ++i) x[i] = u(rng);
    const Vector fast = tensor_apply(t, x);
    const Vector dense = testing::dense_apply(t, x);
    CHECK((fast - dense).lpNorm<Eigen::Infinity>() <= 1e-12 * (1.0 + dense.norm()));
  }
}

TEST_CASE("tensor_apply is homogeneous of degree m-1") {
  Rng rng(5);
  std::uniform_real_distribution<double> u(0.1, 3.0);
  for (int trial = 0; trial < 50; ++trial) {
    const int m = 2 + trial % 3;
    const int n = m + trial % 4;
    const auto h = testing::random_connected_hypergraph(rng, n, m, 2);
    const auto t = adjacency_tensor(h);
    Vector x(n);
    for (int i = 0; i < n; ++i) x[i] = u(rng);
    const double c = u(rng);
    const Vector lhs = tensor_apply(t, c * x);
    const Vector rhs = std::pow(c, m - 1) * tensor_apply(t, x);
    CHECK((lhs - rhs).norm() <= 1e-12 * rhs.norm());
  }
}

TEST_CASE("adjacency tensor apply equals the edge-sum shortcut") {
  Rng rng(6);
  std::uniform_real_distribution<double> u(0.1, 3.0);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 2 + trial % 3;
    const int n = m + 1 + trial % 3;
    const auto h = testing::random_connected_hypergraph(rng, n, m, 3);
    Vector x(n);
    for (int i = 0; i < n; ++i) x[i] = u(rng);
    Vector expected = Vector::Zero(n);
    for (const auto& e : h.edges()) {
      for (int i : e) {
        double prod = 1.0;
        for (int j : e) {
          if (j != i) prod *= x[j];
        }
        expected[i] += prod;
      }
    }
    CHECK((tensor_apply(adjacency_tensor(h), x) - expected).lpNorm<Eigen::Infinity>() <=
          1e-12 * expected.lpNorm<Eigen::Infinity>());
  }
}

TEST_CASE("dual_tensor_apply") {
  Rng rng(8);
  std::uniform_real_distribution<double> u(-1.0, 2.0);
  const auto h = testing::random_connected_hypergraph(rng, 5, 3, 2);
  const auto a_s = adjacency_tensor(h);
  Vector xs(5), xd(5);
  for (int i = 0; i < 5; ++i) {
    xs[i] = std::abs(u(rng)) + 0.1;
    xd[i] = u(rng);
  }
  auto dual_of = [](const Vector& s, const Vector& d) {
    DualVector x(s.size());
    for (Eigen::Index i = 0; i < s.size(); ++i) x[i] = {s[i], d[i]};
    return x;
  };

  SUBCASE("zero dual parts reproduce tensor_apply") {
    const auto out = dual_tensor_apply(a_s, SparseSymTensor(3, 5), dual_of(xs, Vector::Zero(5)));
    const Vector ref = tensor_apply(a_s, xs);
    for (int i = 0; i < 5; ++i) {
      CHECK(out[i].s == doctest::Approx(ref[i]));
      CHECK(out[i].d == 0.0);
    }
  }
  SUBCASE("x_d = 0 gives A_d x_s^(m-1) as dual part") {
    Perturbation p{{{{0, 2, 4}, 1.5}, {{1, 3, 4}, -0.5}}};
    const auto a_d = perturbation_tensor(p, 5, 3);
    const auto out = dual_tensor_apply(a_s, a_d, dual_of(xs, Vector::Zero(5)));
    const Vector ref = tensor_apply(a_d, xs);
    for (int i = 0; i < 5; ++i) CHECK(out[i].d == doctest::Approx(ref[i]));
  }
  SUBCASE("expansion through explicit contraction matrices") {
    Perturbation p{{{{0, 1, 2}, 0.7}}};
    const auto a_d = perturbation_tensor(p, 5, 3);
    const auto out = dual_tensor_apply(a_s, a_d, dual_of(xs, xd));
    Vector dual = tensor_apply(a_d, xs);
    for (const auto& a_k : testing::dense_contractions(a_s, xs)) dual += a_k * xd;
    const Vector standard = tensor_apply(a_s, xs);
    for (int i = 0; i < 5; ++i) {
      CHECK(std::abs(out[i].s - standard[i]) <= 1e-12);
      CHECK(std::abs(out[i].d - dual[i]) <= 1e-12);
    }
  }
}

TEST_CASE("weak irreducibility") {
  CHECK(is_weakly_irreducible(adjacency_tensor(one_based(3, 2, {{1, 2}, {2, 3}, {1, 3}}))));
  CHECK_FALSE(is_weakly_irreducible(adjacency_tensor(one_based(6, 3, {{1, 2, 3}, {4, 5, 6}}))));
  CHECK_FALSE(is_weakly_irreducible(SparseSymTensor(2, 1)));

  SUBCASE("all-i tuples add no arcs") {
    SparseSymTensor t(3, 2, {{{0, 0, 0}, 1.0}, {{1, 1, 1}, 1.0}});
    CHECK_FALSE(is_weakly_irreducible(t));
    SparseSymTensor t2(3, 2, {{{0, 0, 1}, 1.0}});
    CHECK(is_weakly_irreducible(t2));
  }

  SUBCASE("agrees with union-find connectivity on random hypergraphs") {
    Rng rng(21);
    int connected = 0;
    for (int trial = 0; trial < 200; ++trial) {
      const int m = 2 + trial % 3;
      const int n = m + trial % 5;
      const auto h = testing::random_hypergraph(rng, n, m, 1 + trial % 5);
      const bool expect = testing::union_find_connected(h);
      connected += expect;
      CHECK(is_weakly_irreducible(adjacency_tensor(h)) == expect);
      CHECK(h.is_connected() == expect);
    }
    CHECK(connected > 20);
    CHECK(connected < 180);
  }
}

TEST_CASE("hypergraph invariants") {
  CHECK_THROWS_AS(Hypergraph(3, 3, {{0, 1}}), Error);
  CHECK_THROWS_AS(Hypergraph(3, 2, {{0, 0}}), Error);
  CHECK_THROWS_AS(Hypergraph(3, 2, {{0, 3}}), Error);
  CHECK_THROWS_AS(Hypergraph(3, 2, {{0, 1}, {1, 0}}), Error);
  const Hypergraph h(4, 2, {{1, 0}, {2, 1}});
  CHECK(h.edges().front() == Edge{0, 1});
  CHECK(h.degrees() == std::vector<int>{1, 2, 1, 0});
  CHECK_FALSE(h.is_connected());
}

TEST_CASE("perturbation tensor validation and accumulation") {
  Perturbation p{{{{0, 1}, 1.0}, {{1, 0}, 0.5}}};
  CHECK(perturbation_tensor(p, 3, 2).value({0, 1}) == doctest::Approx(1.5));
  auto kind = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidInput;
  };
  CHECK(kind([] { perturbation_tensor({{{{0, 1, 2}, 1.0}}}, 3, 2); }) ==
        ErrorKind::InvalidPerturbation);
  CHECK(kind([] { perturbation_tensor({{{{0, 5}, 1.0}}}, 3, 2); }) ==
        ErrorKind::InvalidPerturbation);
  CHECK(combine({p, p}).edges.size() == 4);
}

TEST_CASE("parse_hypergraph") {
  SUBCASE("basic") {
    const auto h = parse_hypergraph("1 2 3\n4 5 6\n");
    CHECK(h.num_vertices() == 6);
    CHECK(h.uniformity() == 3);
    CHECK(h.edges() == std::vector<Edge>{{0, 1, 2}, {3, 4, 5}});
  }
  SUBCASE("comments, blank lines, no trailing newline, override") {
    ParseOptions opts;
    opts.num_vertices = 7;
    const auto h = parse_hypergraph("# header\n\n 3 1   # tail\n\t2 3", opts);
    CHECK(h.num_vertices() == 7);
    CHECK(h.edges() == std::vector<Edge>{{0, 2}, {1, 2}});
  }
  auto error_line = [](std::string_view text) -> std::size_t {
    try {
      parse_hypergraph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(error_line("1 2\n2 2\n") == 2);
  CHECK(error_line("1 2 3\n1 2\n") == 2);
  CHECK(error_line("1 0\n") == 1);
  CHECK(error_line("1 x\n") == 1);
  CHECK(error_line("\n1\n") == 2);
  CHECK(error_line("1 2\n2 1\n") == 2);
  CHECK(error_line("1 2 w=3\n") == 1);
  CHECK_THROWS_WITH_AS(parse_hypergraph("1 2\n2 2\n"), doctest::Contains("repeated vertex"),
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_hypergraph("1 2 3\n1 2\n"), doctest::Contains("non-uniform"),
                       ParseError);

  SUBCASE("edgeless input is accepted") {
    ParseOptions opts;
    opts.num_vertices = 3;
    opts.uniformity = 3;
    const auto h = parse_hypergraph("# nothing\n", opts);
    CHECK(h.edges().empty());
    CHECK(h.uniformity() == 3);
    CHECK_FALSE(h.is_connected());
  }
}

TEST_CASE("parse_perturbation") {
  const auto p = parse_perturbation("1 2 3 w=0.5\n4 5 6\n");
  REQUIRE(p.edges.size() == 2);
  CHECK(p.edges[0].weight == 0.5);
  CHECK(p.edges[1].weight == 1.0);
  CHECK(p.edges[1].edge == Edge{3, 4, 5});
  CHECK_THROWS_AS(parse_perturbation("1 2 w=abc\n"), ParseError);
  CHECK_THROWS_AS(parse_perturbation("1 2 w=\n"), ParseError);

  const auto spec = parse_edge_spec("1,2,8,w=-2.5");
  REQUIRE(spec.edges.size() == 1);
  CHECK(spec.edges[0].edge == Edge{0, 1, 7});
  CHECK(spec.edges[0].weight == -2.5);
  CHECK_THROWS_AS(parse_edge_spec(""), ParseError);
}

TEST_CASE("format and parse round-trip on random inputs") {
  Rng rng(3);
  std::uniform_real_distribution<double> w(-3.0, 3.0);
  for (int trial = 0; trial < 30; ++trial) {
    const int m = 2 + trial % 3;
    const auto h = testing::random_connected_hypergraph(rng, m + 3, m, 2);
    const auto back = parse_hypergraph(format_hypergraph(h));
    CHECK(back.num_vertices() == h.num_vertices());
    CHECK(back.edges() == h.edges());

    Perturbation p;
    for (int k = 0; k < 3; ++k) p.edges.push_back({testing::random_subset(rng, 6, m), w(rng)});
    CHECK(parse_perturbation(format_perturbation(p)) == p);
  }
}
