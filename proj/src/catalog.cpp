#include "hamlift/catalog.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace hamlift {
namespace {

Permutation rotation(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) img[static_cast<std::size_t>(v)] = (v + 1) % n;
  return Permutation(img);
}

Permutation reflection(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) img[static_cast<std::size_t>(v)] = (n - v) % n;
  return Permutation(img);
}

// z -> c*z + d on Z_n
Permutation affine(int n, int c, int d) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) img[static_cast<std::size_t>(v)] = (c * v + d) % n;
  return Permutation(img);
}

Permutation transposition(int n, int a, int b) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) img[static_cast<std::size_t>(v)] = v;
  std::swap(img[static_cast<std::size_t>(a)], img[static_cast<std::size_t>(b)]);
  return Permutation(img);
}

// A finite group given by its multiplication table; translation(g) is the
// left-regular permutation h -> g*h.
struct TableGroup {
  std::vector<std::vector<int>> mul;

  Permutation translation(int g) const {
    std::vector<int> img(mul.size());
    for (std::size_t h = 0; h < mul.size(); ++h)
      img[h] = mul[static_cast<std::size_t>(g)][h];
    return Permutation(img);
  }

  PermGroup regular_rep(const std::vector<int>& gens) const {
    std::vector<Permutation> ps;
    for (int g : gens) ps.push_back(translation(g));
    PermGroup group(static_cast<int>(mul.size()), ps);
    if (group.order() != static_cast<long>(mul.size()))
      throw std::logic_error("table generators do not generate the whole group");
    return group;
  }
};

// Quaternion units: index = axis*2 + (sign<0), axes e,i,j,k.
TableGroup quaternion_group() {
  struct Unit {
    int axis;
    int sign;
  };
  auto mul_units = [](Unit a, Unit b) -> Unit {
    static const int axis_of[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign_of[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    return Unit{axis_of[a.axis][b.axis], a.sign * b.sign * sign_of[a.axis][b.axis]};
  };
  TableGroup t;
  t.mul.assign(8, std::vector<int>(8));
  for (int g = 0; g < 8; ++g)
    for (int h = 0; h < 8; ++h) {
      Unit a{g / 2, g % 2 == 0 ? 1 : -1};
      Unit b{h / 2, h % 2 == 0 ? 1 : -1};
      Unit c = mul_units(a, b);
      t.mul[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)] =
          c.axis * 2 + (c.sign < 0 ? 1 : 0);
    }
  return t;
}

// Dicyclic group of order 12: a^6 = e, b^2 = a^3, b a b^-1 = a^-1.
// Element a^i b^j has index 2*i + j.
TableGroup dicyclic12_group() {
  TableGroup t;
  t.mul.assign(12, std::vector<int>(12));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 6; ++k)
        for (int l = 0; l < 2; ++l) {
          int ri, rj;
          if (j == 0) {
            ri = (i + k) % 6;
            rj = l;
          } else {
            ri = (i - k + 6) % 6;
            rj = 1 + l;
            if (rj == 2) {
              rj = 0;
              ri = (ri + 3) % 6;
            }
          }
          t.mul[static_cast<std::size_t>(2 * i + j)][static_cast<std::size_t>(2 * k + l)] =
              2 * ri + rj;
        }
  return t;
}

// Upper unitriangular 3x3 matrices over Z_3: (a,b,c) with
// (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a*b'), index 9a + 3b + c.
TableGroup heisenberg27_group() {
  TableGroup t;
  t.mul.assign(27, std::vector<int>(27));
  for (int g = 0; g < 27; ++g)
    for (int h = 0; h < 27; ++h) {
      int a = g / 9, b = (g / 3) % 3, c = g % 3;
      int a2 = h / 9, b2 = (h / 3) % 3, c2 = h % 3;
      int ra = (a + a2) % 3, rb = (b + b2) % 3, rc = (c + c2 + a * b2) % 3;
      t.mul[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)] = 9 * ra + 3 * rb + rc;
    }
  return t;
}

Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

std::vector<std::pair<int, int>> all_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) out.emplace_back(a, b);
  return out;
}

// Action induced on the 2-subsets of the permuted points, subsets in
// lexicographic order.
Permutation induced_on_pairs(const Permutation& base) {
  auto pairs = all_pairs(base.degree());
  std::map<std::pair<int, int>, int> index;
  for (std::size_t i = 0; i < pairs.size(); ++i) index[pairs[i]] = static_cast<int>(i);
  std::vector<int> img(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [a, b] = pairs[i];
    img[i] = index.at(std::minmax(base(a), base(b)));
  }
  return Permutation(img);
}

Graph petersen_graph() {
  auto pairs = all_pairs(5);
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      auto [a, b] = pairs[i];
      auto [c, d] = pairs[j];
      if (a != c && a != d && b != c && b != d)
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  return Graph(static_cast<int>(pairs.size()), edges);
}

CatalogEntry cayley_entry(std::string name, std::string summary, PermGroup group,
                          std::vector<Permutation> connection) {
  CayleySpec spec{std::move(group), std::move(connection)};
  Graph g = cayley_graph(spec);
  PermGroup acting = left_multiplication_action(spec.group);
  return CatalogEntry{std::move(name), std::move(summary), std::move(g), std::move(acting),
                      std::move(spec)};
}

CatalogEntry circulant_entry(std::string name, std::string summary, int n,
                             const std::vector<int>& shifts) {
  Permutation r = rotation(n);
  std::set<int> exps;
  for (int s : shifts) {
    int e = ((s % n) + n) % n;
    if (e == 0) continue;
    exps.insert(e);
    exps.insert(n - e);
  }
  std::vector<Permutation> conn;
  for (int e : exps) conn.push_back(r.power(e));
  return cayley_entry(std::move(name), std::move(summary), PermGroup(n, {r}), std::move(conn));
}

// Direct product of cyclic groups acting on digit tuples.
CatalogEntry product_entry(std::string name, std::string summary, const std::vector<int>& dims) {
  int n = 1;
  for (int d : dims) n *= d;
  std::vector<Permutation> gens;
  std::vector<int> stride(dims.size());
  int acc = 1;
  for (std::size_t i = dims.size(); i-- > 0;) {
    stride[i] = acc;
    acc *= dims[i];
  }
  for (std::size_t i = 0; i < dims.size(); ++i) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      int digit = (v / stride[i]) % dims[i];
      img[static_cast<std::size_t>(v)] = v + ((digit + 1) % dims[i] - digit) * stride[i];
    }
    gens.emplace_back(std::move(img));
  }
  std::set<Permutation> conn;
  for (const auto& g : gens) {
    conn.insert(g);
    conn.insert(g.inverse());
  }
  return cayley_entry(std::move(name), std::move(summary), PermGroup(n, gens),
                      std::vector<Permutation>(conn.begin(), conn.end()));
}

PermGroup dihedral(int n) { return PermGroup(n, {rotation(n), reflection(n)}); }

CatalogEntry dihedral_cayley(std::string name, std::string summary, int n,
                             std::vector<Permutation> connection) {
  return cayley_entry(std::move(name), std::move(summary), dihedral(n), std::move(connection));
}

CatalogEntry heisenberg_coset_entry() {
  // The order-27 group above acting on the 9 cosets of the non-normal
  // subgroup generated by (1,0,0). Cosets are labelled (b, c) -> 3b + c;
  // (p,q,r) sends (b,c) to (b+q, c+r+p*b). The invariant graph joining
  // cosets in different center orbits is complete tripartite.
  auto act = [](int p, int q, int r) {
    std::vector<int> img(9);
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        img[static_cast<std::size_t>(3 * b + c)] = 3 * ((b + q) % 3) + (c + r + p * b) % 3;
    return Permutation(img);
  };
  PermGroup group(9, {act(1, 0, 0), act(0, 1, 0), act(0, 0, 1)});
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < 9; ++u)
    for (int v = u + 1; v < 9; ++v)
      if (u / 3 != v / 3) edges.emplace_back(u, v);
  return CatalogEntry{"heis27-cosets9",
                      "order-27 group of nilpotency class 2 on 9 cosets of a non-normal "
                      "subgroup; complete tripartite plant for the factor-group assembly",
                      Graph(9, edges), std::move(group), std::nullopt};
}

CatalogEntry petersen_entry() {
  Permutation a = induced_on_pairs(rotation(5));
  Permutation b = induced_on_pairs(affine(5, 2, 0));
  return CatalogEntry{"petersen-f20",
                      "petersen graph carrying the order-20 affine action; the lone "
                      "exception without a hamilton cycle",
                      petersen_graph(), PermGroup(10, {a, b}), std::nullopt};
}

CatalogEntry petersen_prism_entry() {
  // Petersen times an edge, with the affine action in both layers and the
  // layer swap. Vertices: pair index + 10 * layer.
  Graph p = petersen_graph();
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : p.edges()) {
    edges.emplace_back(u, v);
    edges.emplace_back(u + 10, v + 10);
  }
  for (int v = 0; v < 10; ++v) edges.emplace_back(v, v + 10);
  auto doubled = [](const Permutation& base) {
    std::vector<int> img(20);
    for (int v = 0; v < 10; ++v) {
      img[static_cast<std::size_t>(v)] = base(v);
      img[static_cast<std::size_t>(v + 10)] = base(v) + 10;
    }
    return Permutation(img);
  };
  std::vector<int> swap_img(20);
  for (int v = 0; v < 20; ++v) swap_img[static_cast<std::size_t>(v)] = (v + 10) % 20;
  PermGroup group(20, {doubled(induced_on_pairs(rotation(5))),
                       doubled(induced_on_pairs(affine(5, 2, 0))), Permutation(swap_img)});
  return CatalogEntry{"f40-prism",
                      "prism over the petersen graph with the order-40 product action; the "
                      "quotient cycle lifts closed",
                      Graph(20, edges), std::move(group), std::nullopt};
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;

  // Abelian Cayley graphs.
  out.push_back(circulant_entry("z3-cycle", "triangle as the smallest cyclic Cayley graph", 3, {1}));
  out.push_back(circulant_entry("z4-cycle", "4-cycle on the cyclic group of order 4", 4, {1}));
  out.push_back(circulant_entry("z5-cycle", "5-cycle on the cyclic group of order 5", 5, {1}));
  out.push_back(circulant_entry("z5-k5",
                                "complete graph on 5 vertices under plain rotation; the "
                                "reducer strips it to a pentagram",
                                5, {1, 2}));
  out.push_back(circulant_entry("z6-cycle", "6-cycle on the cyclic group of order 6", 6, {1}));
  out.push_back(
      circulant_entry("z6-chord", "6-cycle plus long chords (a circulant prism)", 6, {1, 3}));
  out.push_back(circulant_entry("z9-cycle", "9-cycle on the cyclic group of order 9", 9, {1}));
  out.push_back(circulant_entry("z12-chord", "circulant on 12 vertices with steps 1 and 3", 12,
                                {1, 3}));
  out.push_back(circulant_entry("z16-moebius", "moebius ladder on 16 vertices", 16, {1, 8}));
  out.push_back(circulant_entry("z32-circulant", "circulant on 32 vertices with steps 1 and 3",
                                32, {1, 3}));
  out.push_back(circulant_entry("z64-cycle", "64-cycle, the largest cyclic sample", 64, {1}));
  out.push_back(product_entry("z2z2-c4", "4-cycle as the Klein four-group on unit generators",
                              {2, 2}));
  out.push_back(product_entry("z2z4", "ladder of the direct product of orders 2 and 4", {2, 4}));
  out.push_back(product_entry("z3z3-torus", "3 by 3 torus grid", {3, 3}));
  out.push_back(product_entry("z2z2z2-cube", "3-cube on the elementary abelian group of order 8",
                              {2, 2, 2}));

  // Dihedral Cayley graphs.
  {
    Permutation r3 = rotation(3), s3 = reflection(3);
    out.push_back(dihedral_cayley("d3-prism",
                                  "triangular prism as a dihedral Cayley graph with both "
                                  "rotations and one reflection",
                                  3, {r3, r3.power(2), s3}));
    out.push_back(dihedral_cayley("d3-k33",
                                  "complete bipartite 3+3 graph generated by three reflections",
                                  3, {s3, r3 * s3, r3.power(2) * s3}));
    Permutation r4 = rotation(4), s4r = reflection(4);
    out.push_back(dihedral_cayley("d4-cayley", "8-cycle-like dihedral Cayley graph on order 8",
                                  4, {r4, r4.power(3), s4r}));
    out.push_back(dihedral_cayley("d4-reflections",
                                  "complete bipartite 4+4 graph from the four reflections", 4,
                                  {s4r, r4 * s4r, r4.power(2) * s4r, r4.power(3) * s4r}));
    Permutation r5 = rotation(5), s5 = reflection(5);
    out.push_back(dihedral_cayley("d5-cayley", "pentagonal prism as a dihedral Cayley graph", 5,
                                  {r5, r5.power(4), s5}));
    Permutation r9 = rotation(9), s9 = reflection(9);
    out.push_back(dihedral_cayley("d9-cayley", "nonagonal prism as a dihedral Cayley graph", 9,
                                  {r9, r9.power(8), s9}));
  }

  // Quaternion, dicyclic, nilpotent and affine Cayley graphs.
  {
    TableGroup q = quaternion_group();
    PermGroup q8 = q.regular_rep({2, 4});  // i, j
    out.push_back(cayley_entry("q8-ij", "quaternion Cayley graph on the two standard units", q8,
                               {q.translation(2), q.translation(3), q.translation(4),
                                q.translation(5)}));
    out.push_back(cayley_entry("q8-ijk", "quaternion Cayley graph on all six units",
                               q.regular_rep({2, 4}),
                               {q.translation(2), q.translation(3), q.translation(4),
                                q.translation(5), q.translation(6), q.translation(7)}));
    TableGroup dic = dicyclic12_group();
    out.push_back(cayley_entry("dic12",
                               "dicyclic group of order 12 on a rotation and the twisting "
                               "element",
                               dic.regular_rep({2, 1}),
                               {dic.translation(2), dic.translation(2).inverse(),
                                dic.translation(1), dic.translation(1).inverse()}));
    TableGroup heis = heisenberg27_group();
    out.push_back(cayley_entry("heis27-cayley",
                               "order-27 class-2 group on its two canonical generators",
                               heis.regular_rep({9, 3}),
                               {heis.translation(9), heis.translation(9).inverse(),
                                heis.translation(3), heis.translation(3).inverse()}));
    Permutation fa = affine(5, 1, 1), fb = affine(5, 2, 0);
    PermGroup f20(5, {fa, fb});
    out.push_back(cayley_entry("f20-cayley",
                               "affine group of order 20 on a translation and the squaring "
                               "map; orbit rings keep their edges",
                               f20, {fa, fa.power(4), fb, fb.power(3)}));
    out.push_back(cayley_entry("f20-noedge-cayley",
                               "affine group of order 20 on edge-free orbit generators", f20,
                               {fb, fb.power(3), fa * fb, (fa * fb).inverse()}));
  }

  // Transitive non-regular actions.
  out.push_back(CatalogEntry{"d5-pentagon", "5-cycle under the full dihedral action",
                             cycle_graph(5), dihedral(5), std::nullopt});
  out.push_back(CatalogEntry{"d9-nonagon", "9-cycle under the full dihedral action",
                             cycle_graph(9), dihedral(9), std::nullopt});
  out.push_back(heisenberg_coset_entry());
  out.push_back(CatalogEntry{"f20-k5",
                             "complete graph on 5 vertices under the sharply 2-transitive "
                             "affine action",
                             complete_graph(5),
                             PermGroup(5, {affine(5, 1, 1), affine(5, 2, 0)}), std::nullopt});
  out.push_back(petersen_entry());
  out.push_back(petersen_prism_entry());

  // Deliberate hypothesis failures.
  out.push_back(cayley_entry("k2-path", "a single edge; below the size floor for cycles",
                             PermGroup(2, {transposition(2, 0, 1)}),
                             {transposition(2, 0, 1)}));
  out.push_back(cayley_entry("s4-regular",
                             "symmetric group of degree 4 on adjacent transpositions; its "
                             "commutator subgroup is not cyclic",
                             PermGroup(4, {transposition(4, 0, 1), transposition(4, 1, 2),
                                           transposition(4, 2, 3)}),
                             {transposition(4, 0, 1), transposition(4, 1, 2),
                              transposition(4, 2, 3)}));

  std::sort(out.begin(), out.end(),
            [](const CatalogEntry& a, const CatalogEntry& b) { return a.name < b.name; });
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  throw std::invalid_argument("unknown catalog entry: " + name);
}

std::vector<const CatalogEntry*> abelian_cayley_samples() {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : catalog()) {
    if (!e.cayley) continue;
    int n = e.graph.vertex_count();
    if (n >= 3 && n <= 32 && e.cayley->group.is_abelian()) out.push_back(&e);
  }
  return out;
}

}  // namespace hamlift
