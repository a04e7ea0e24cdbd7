#include "lie/catalog.hpp"

#include <algorithm>

namespace lie {

namespace {

int epsilon(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  if ((i == 0 && j == 1 && k == 2) || (i == 1 && j == 2 && k == 0) ||
      (i == 2 && j == 0 && k == 1))
    return 1;
  return -1;
}

ExactMat elem(int m, int r, int s, ExactScalar v = ExactScalar{1}) {
  ExactMat e(m, m);
  e(r, s) = std::move(v);
  return e;
}

const ExactScalar kI = ExactScalar::i();
const ExactScalar kHalf{Rat(1, 2)};
const ExactScalar kIHalf{Rat(0), Rat(1, 2)};

// c(i,j,k) = eps(i,j,k): the common constants of su(2) and so(3)
LieAlgebra epsilon_algebra(std::string name, FieldTag field, std::vector<std::string> labels) {
  LieAlgebra g;
  g.name = std::move(name);
  g.field = field;
  g.dim = 3;
  g.basis_labels = std::move(labels);
  g.c = StructureConstants(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) g.c.at(i, j, k) = ExactScalar{epsilon(i, j, k)};
  return g;
}

std::vector<ExactMat> su2_matrices() {
  // b1 = [[0,i],[i,0]]/2, b2 = [[0,-1],[1,0]]/2, b3 = [[i,0],[0,-i]]/2
  ExactMat b1(2, 2), b2(2, 2), b3(2, 2);
  b1(0, 1) = kIHalf;
  b1(1, 0) = kIHalf;
  b2(0, 1) = -kHalf;
  b2(1, 0) = kHalf;
  b3(0, 0) = kIHalf;
  b3(1, 1) = -kIHalf;
  return {b1, b2, b3};
}

std::vector<ExactMat> so3_matrices() {
  ExactMat j1(3, 3), j2(3, 3), j3(3, 3);
  j1(1, 2) = ExactScalar{-1};
  j1(2, 1) = ExactScalar{1};
  j2(0, 2) = ExactScalar{1};
  j2(2, 0) = ExactScalar{-1};
  j3(0, 1) = ExactScalar{-1};
  j3(1, 0) = ExactScalar{1};
  return {j1, j2, j3};
}

std::vector<ExactMat> sl2_matrices() {
  ExactMat h(2, 2), x(2, 2), y(2, 2);
  h(0, 0) = ExactScalar{1};
  h(1, 1) = ExactScalar{-1};
  x(0, 1) = ExactScalar{1};
  y(1, 0) = ExactScalar{1};
  return {h, x, y};
}

// {H, X, Y}: [H,X] = 2X, [H,Y] = -2Y, [X,Y] = H
LieAlgebra sl2_algebra(std::string name, FieldTag field) {
  LieAlgebra g;
  g.name = std::move(name);
  g.field = field;
  g.dim = 3;
  g.basis_labels = {"H", "X", "Y"};
  g.c = StructureConstants(3);
  g.c.at(0, 1, 1) = ExactScalar{2};
  g.c.at(1, 0, 1) = ExactScalar{-2};
  g.c.at(0, 2, 2) = ExactScalar{-2};
  g.c.at(2, 0, 2) = ExactScalar{2};
  g.c.at(1, 2, 0) = ExactScalar{1};
  g.c.at(2, 1, 0) = ExactScalar{-1};
  g.realization = sl2_matrices();
  return g;
}

std::vector<ExactMat> so13_matrices() {
  // boosts K_i = E_{0i} + E_{i0}; rotations eta_i act on the spatial block
  std::vector<ExactMat> ms;
  for (int i = 1; i <= 3; ++i) ms.push_back(elem(4, 0, i) + elem(4, i, 0));
  auto js = so3_matrices();
  for (const auto& j : js) {
    ExactMat eta(4, 4);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) eta(a + 1, b + 1) = j(a, b);
    ms.push_back(std::move(eta));
  }
  return ms;
}

LieAlgebra so13_algebra() {
  LieAlgebra g;
  g.name = "so13";
  g.field = FieldTag::Real;
  g.dim = 6;
  g.basis_labels = {"K1", "K2", "K3", "eta1", "eta2", "eta3"};
  g.c = StructureConstants(6);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        int e = epsilon(i, j, k);
        if (e == 0) continue;
        g.c.at(3 + i, 3 + j, 3 + k) = ExactScalar{e};   // [eta_i, eta_j] =  eps eta_k
        g.c.at(i, j, 3 + k) = ExactScalar{-e};          // [K_i,   K_j]   = -eps eta_k
        g.c.at(i, 3 + j, k) = ExactScalar{e};           // [K_i,   eta_j] =  eps K_k
        g.c.at(3 + j, i, k) = ExactScalar{-e};
      }
  g.realization = so13_matrices();
  return g;
}

std::vector<ExactMat> so4_matrices() {
  // A_i mixes axis 0 with axis i; B_i is the so(3) rotation block
  std::vector<ExactMat> ms;
  for (int i = 1; i <= 3; ++i) ms.push_back(elem(4, 0, i) + elem(4, i, 0, ExactScalar{-1}));
  auto js = so3_matrices();
  for (const auto& j : js) {
    ExactMat b(4, 4);
    for (int a = 0; a < 3; ++a)
      for (int col = 0; col < 3; ++col) b(a + 1, col + 1) = j(a, col);
    ms.push_back(std::move(b));
  }
  return ms;
}

LieAlgebra so4_algebra() {
  LieAlgebra g;
  g.name = "so4";
  g.field = FieldTag::Real;
  g.dim = 6;
  g.basis_labels = {"A1", "A2", "A3", "B1", "B2", "B3"};
  g.c = StructureConstants(6);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        int e = epsilon(i, j, k);
        if (e == 0) continue;
        g.c.at(3 + i, 3 + j, 3 + k) = ExactScalar{e};  // [B_i, B_j] = eps B_k
        g.c.at(i, j, 3 + k) = ExactScalar{e};          // [A_i, A_j] = eps B_k
        g.c.at(i, 3 + j, k) = ExactScalar{e};          // [A_i, B_j] = eps A_k
        g.c.at(3 + j, i, k) = ExactScalar{-e};
      }
  g.realization = so4_matrices();
  return g;
}

LieAlgebra abelian_algebra(int n, FieldTag field, const std::string& key) {
  LieAlgebra g;
  g.name = key;
  g.field = field;
  g.dim = n;
  for (int k = 0; k < n; ++k) g.basis_labels.push_back("Z" + std::to_string(k + 1));
  g.c = StructureConstants(n);
  return g;
}

LieAlgebra gl_algebra(int n, FieldTag field, const std::string& key) {
  std::vector<ExactMat> ms;
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      ms.push_back(elem(n, a, b));
      labels.push_back("E" + std::to_string(a + 1) + std::to_string(b + 1));
    }
  return algebra_from_realization(key, field, std::move(labels), std::move(ms));
}

LieAlgebra sl_algebra(int n, FieldTag field, const std::string& key) {
  std::vector<ExactMat> ms;
  std::vector<std::string> labels;
  for (int a = 0; a + 1 < n; ++a) {
    ms.push_back(elem(n, a, a) + elem(n, a + 1, a + 1, ExactScalar{-1}));
    labels.push_back("H" + std::to_string(a + 1));
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      ms.push_back(elem(n, a, b));
      labels.push_back("E" + std::to_string(a + 1) + std::to_string(b + 1));
    }
  return algebra_from_realization(key, field, std::move(labels), std::move(ms));
}

LieAlgebra so_algebra(int n, const std::string& key) {
  std::vector<ExactMat> ms;
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      ms.push_back(elem(n, a, b) + elem(n, b, a, ExactScalar{-1}));
      labels.push_back("L" + std::to_string(a + 1) + std::to_string(b + 1));
    }
  return algebra_from_realization(key, FieldTag::Real, std::move(labels), std::move(ms));
}

LieAlgebra su_algebra(int n, const std::string& key) {
  // (i/2)(E_ab + E_ba), (E_ba - E_ab)/2, (i/2)(E_aa - E_{a+1,a+1});
  // for n = 2 this reproduces the su2 catalog basis
  std::vector<ExactMat> ms;
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      ms.push_back((elem(n, a, b) + elem(n, b, a)).scaled(kIHalf));
      labels.push_back("P" + std::to_string(a + 1) + std::to_string(b + 1));
    }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      ms.push_back((elem(n, b, a) + elem(n, a, b, ExactScalar{-1})).scaled(kHalf));
      labels.push_back("Q" + std::to_string(a + 1) + std::to_string(b + 1));
    }
  for (int a = 0; a + 1 < n; ++a) {
    ms.push_back((elem(n, a, a) + elem(n, a + 1, a + 1, ExactScalar{-1})).scaled(kIHalf));
    labels.push_back("D" + std::to_string(a + 1));
  }
  return algebra_from_realization(key, FieldTag::Real, std::move(labels), std::move(ms));
}

struct GenericKey {
  std::string family;
  int n = 0;
  FieldTag field = FieldTag::Real;
};

// "su(3)", "gl(2,C)", "abelian(2,C)" ...
std::optional<GenericKey> parse_generic(const std::string& key) {
  auto open = key.find('(');
  if (open == std::string::npos || key.back() != ')') return std::nullopt;
  GenericKey out;
  out.family = key.substr(0, open);
  std::string inner = key.substr(open + 1, key.size() - open - 2);
  std::string num = inner;
  auto comma = inner.find(',');
  if (comma != std::string::npos) {
    num = inner.substr(0, comma);
    std::string f = inner.substr(comma + 1);
    if (f == "R")
      out.field = FieldTag::Real;
    else if (f == "C")
      out.field = FieldTag::Complex;
    else
      return std::nullopt;
  }
  if (num.empty() || num.size() > 1 || num[0] < '1' || num[0] > '9') return std::nullopt;
  out.n = num[0] - '0';
  return out;
}

}  // namespace

const std::vector<std::string>& catalog_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> k{"su2", "so3", "sl2R", "sl2C", "sl2C_R", "so13", "so4"};
    for (int n = 1; n <= 4; ++n)
      for (const char* f : {"R", "C"})
        k.push_back("gl(" + std::to_string(n) + "," + f + ")");
    for (int n = 2; n <= 4; ++n)
      for (const char* f : {"R", "C"})
        k.push_back("sl(" + std::to_string(n) + "," + f + ")");
    for (int n = 2; n <= 4; ++n) k.push_back("so(" + std::to_string(n) + ")");
    for (int n = 2; n <= 4; ++n) k.push_back("su(" + std::to_string(n) + ")");
    for (int n = 1; n <= 4; ++n)
      for (const char* f : {"R", "C"})
        k.push_back("abelian(" + std::to_string(n) + "," + f + ")");
    return k;
  }();
  return keys;
}

CatalogEntry catalog_get(const std::string& key) {
  if (key == "su2") {
    LieAlgebra g = epsilon_algebra("su2", FieldTag::Real, {"b1", "b2", "b3"});
    g.realization = su2_matrices();
    return {key, std::move(g), "anti-hermitian traceless 2x2; [b1,b2]=b3 cyclic"};
  }
  if (key == "so3") {
    LieAlgebra g = epsilon_algebra("so3", FieldTag::Real, {"J1", "J2", "J3"});
    g.realization = so3_matrices();
    return {key, std::move(g), "3d rotation generators; [J1,J2]=J3 cyclic"};
  }
  if (key == "sl2R")
    return {key, sl2_algebra("sl2R", FieldTag::Real),
            "traceless real 2x2; {H,X,Y} with [H,X]=2X, [H,Y]=-2Y, [X,Y]=H"};
  if (key == "sl2C")
    return {key, sl2_algebra("sl2C", FieldTag::Complex),
            "traceless complex 2x2; {H,X,Y} with [H,X]=2X, [H,Y]=-2Y, [X,Y]=H"};
  if (key == "sl2C_R") {
    LieAlgebra g = scalar_restrict(sl2_algebra("sl2C", FieldTag::Complex));
    g.name = "sl2C_R";
    return {key, std::move(g), "sl2C viewed as a real algebra; basis {H,X,Y,iH,iX,iY}"};
  }
  if (key == "so13")
    return {key, so13_algebra(), "Lorentz boosts K1..K3 and spatial rotations eta1..eta3"};
  if (key == "so4")
    return {key, so4_algebra(), "4d rotations; A_i mix axis 0 with axis i, B_i rotate axes 1..3"};

  auto gk = parse_generic(key);
  if (!gk) throw Error("catalog: unknown key '" + key + "'");
  const int n = gk->n;
  const std::string origin = "standard elementary-matrix basis";
  if (gk->family == "gl" && n <= 4) return {key, gl_algebra(n, gk->field, key), origin};
  if (gk->family == "sl" && n >= 2 && n <= 4) return {key, sl_algebra(n, gk->field, key), origin};
  if (gk->family == "so" && n >= 2 && n <= 4) return {key, so_algebra(n, key), origin};
  if (gk->family == "su" && n >= 2 && n <= 4) return {key, su_algebra(n, key), origin};
  if (gk->family == "abelian" && n <= 4)
    return {key, abelian_algebra(n, gk->field, key), "zero bracket"};
  throw Error("catalog: unsupported key '" + key + "' (n out of range or unknown family)");
}

AlgebraMorphism su2_so3_iso() {
  auto su2 = catalog_get("su2").algebra;
  auto so3 = catalog_get("so3").algebra;
  return {std::move(su2), std::move(so3), ExactMat::identity(3), Linearity::Linear};
}

AlgebraMorphism xi_basis_change() {
  AlgebraMorphism m;
  m.source = complexify(catalog_get("su2").algebra).algebra;
  m.target = catalog_get("sl2C").algebra;
  m.linearity = Linearity::Linear;
  // b1 = (i/2)(X+Y), b2 = (Y-X)/2, b3 = (i/2)H in the {H,X,Y} basis
  m.T = ExactMat(3, 3);
  m.T(0, 2) = kIHalf;
  m.T(1, 0) = kIHalf;
  m.T(2, 0) = kIHalf;
  m.T(1, 1) = -kHalf;
  m.T(2, 1) = kHalf;
  return m;
}

AlgebraMorphism eta_pm_basis() {
  AlgebraMorphism m;
  m.source = complexify(catalog_get("so13").algebra).algebra;
  auto plus = epsilon_algebra("su2_C(+)", FieldTag::Complex, {"eta+1", "eta+2", "eta+3"});
  auto minus = epsilon_algebra("su2_C(-)", FieldTag::Complex, {"eta-1", "eta-2", "eta-3"});
  m.target = direct_product(plus, minus);
  m.linearity = Linearity::Linear;
  // eta_a = eta+_a + eta-_a and K_a = -i(eta+_a - eta-_a)
  m.T = ExactMat(6, 6);
  for (int a = 0; a < 3; ++a) {
    m.T(a, a) = -kI;
    m.T(3 + a, a) = kI;
    m.T(a, 3 + a) = ExactScalar{1};
    m.T(3 + a, 3 + a) = ExactScalar{1};
  }
  return m;
}

AlgebraMorphism so4_complex_match() {
  AlgebraMorphism m;
  m.source = complexify(catalog_get("so4").algebra).algebra;
  m.target = complexify(catalog_get("so13").algebra).algebra;
  m.linearity = Linearity::Linear;
  // iA_j corresponds to K_j, so A_j maps to -i K_j; B_j maps to eta_j
  m.T = ExactMat(6, 6);
  for (int a = 0; a < 3; ++a) {
    m.T(a, a) = -kI;
    m.T(3 + a, 3 + a) = ExactScalar{1};
  }
  return m;
}

AlgebraMorphism so4_split() {
  AlgebraMorphism m;
  m.source = catalog_get("so4").algebra;
  auto plus = epsilon_algebra("su2(+)", FieldTag::Real, {"B+1", "B+2", "B+3"});
  auto minus = epsilon_algebra("su2(-)", FieldTag::Real, {"B-1", "B-2", "B-3"});
  m.target = direct_product(plus, minus);
  m.linearity = Linearity::Linear;
  // A_i = B+_i - B-_i and B_i = B+_i + B-_i
  m.T = ExactMat(6, 6);
  for (int a = 0; a < 3; ++a) {
    m.T(a, a) = ExactScalar{1};
    m.T(3 + a, a) = ExactScalar{-1};
    m.T(a, 3 + a) = ExactScalar{1};
    m.T(3 + a, 3 + a) = ExactScalar{1};
  }
  return m;
}

Sl2Decomposition decompose_sl2_element(const ExactMat& m) {
  if (m.rows() != 2 || m.cols() != 2)
    throw Error("decompose_sl2_element: expected a 2x2 matrix, got " +
                std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  ExactScalar tr = m.trace();
  if (!tr.is_zero())
    throw Error("decompose_sl2_element: nonzero trace " + tr.str());
  ExactMat dag = m.dagger();
  return {(m - dag).scaled(kHalf), (m + dag).scaled(-kIHalf)};
}

}  // namespace lie
