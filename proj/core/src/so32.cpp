#include "tanaka/so32.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "tanaka/fixtures.hpp"

namespace tanaka::so32 {

namespace {

const std::array<const char*, kDim> kRealLabels = {
    "e^{-2}",    "e_1^{-1}", "e_2^{-1}", "e_1^{0}", "e_2^{0}",
    "E_1^{0}",   "E_2^{0}",  "E_1^{1}",  "E_2^{1}", "E^{2}"};
const std::array<const char*, kDim> kComplexLabels = {
    "e^{-2}",     "e^{-1(10)}", "e^{-1(01)}", "e^{0(10)}",  "e^{0(01)}",
    "E^{0(10)}",  "E^{0(01)}",  "E^{1(10)}",  "E^{1(01)}",  "E^{2}"};

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s)
    if (c != '{' && c != '}' && !std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

Matrix entries(std::initializer_list<std::tuple<int, int, int>> list) {
  Matrix m(5, 5);
  for (auto [r, c, v] : list) m(r - 1, c - 1) = Gaussian(v);
  return m;
}

struct Tables {
  std::vector<Matrix> basis;
  Matrix coord_solver_rows;  // 25 x 10 matrix of vectorized basis matrices
  std::vector<std::vector<Vec>> real;
  std::vector<std::vector<Vec>> cplx;
  Matrix c_from_r;
  Matrix r_from_c;
  Matrix gram;
  Matrix J;
};

Vec vectorize(const Matrix& m) {
  Vec v;
  for (std::size_t r = 0; r < 5; ++r)
    for (std::size_t c = 0; c < 5; ++c) v.push_back(m(r, c));
  return v;
}

const Tables& tables() {
  static const Tables t = [] {
    Tables t;
    t.basis = {
        entries({{4, 1, 1}, {5, 2, -1}}),
        entries({{3, 1, 1}, {5, 3, -1}}),
        entries({{3, 2, 1}, {4, 3, -1}}),
        entries({{1, 1, 1}, {2, 2, -1}, {4, 4, 1}, {5, 5, -1}}),
        entries({{1, 2, 1}, {2, 1, 1}, {4, 5, -1}, {5, 4, -1}}),
        entries({{1, 1, 1}, {2, 2, 1}, {4, 4, -1}, {5, 5, -1}}),
        entries({{1, 2, 1}, {2, 1, -1}, {4, 5, -1}, {5, 4, 1}}),
        entries({{1, 3, 1}, {3, 5, -1}}),
        entries({{2, 3, 1}, {3, 4, -1}}),
        entries({{1, 4, 1}, {2, 5, -1}}),
    };
    std::vector<Vec> cols;
    for (const auto& b : t.basis) cols.push_back(vectorize(b));
    t.coord_solver_rows = Matrix::from_columns(cols, 25);

    Gaussian half(rat(1, 2));
    Gaussian i = Gaussian::i();
    t.c_from_r = Matrix(kDim, kDim);
    t.r_from_c = Matrix(kDim, kDim);
    for (std::size_t k : {std::size_t(0), std::size_t(9)}) {
      t.c_from_r(k, k) = 1;
      t.r_from_c(k, k) = 1;
    }
    for (std::size_t a = 1; a < 9; a += 2) {
      // a1 X1 + a2 X2 = (a1 + i a2) X^(10) + (a1 - i a2) X^(01)
      t.c_from_r(a, a) = 1;
      t.c_from_r(a, a + 1) = i;
      t.c_from_r(a + 1, a) = 1;
      t.c_from_r(a + 1, a + 1) = -i;
      t.r_from_c(a, a) = half;
      t.r_from_c(a, a + 1) = half;
      t.r_from_c(a + 1, a) = -half * i;
      t.r_from_c(a + 1, a + 1) = half * i;
    }

    t.real.assign(kDim, std::vector<Vec>(kDim));
    for (std::size_t a = 0; a < kDim; ++a)
      for (std::size_t b = 0; b < kDim; ++b) {
        AffineSolution s = solve(t.coord_solver_rows, vectorize(commutator(t.basis[a], t.basis[b])));
        if (!s.consistent) throw Error("matrix commutator left the algebra");
        t.real[a][b] = s.particular;
      }

    // Complex structure constants: brackets of complex basis vectors.
    auto bracket_real = [&](const Vec& x, const Vec& y) {
      Vec out(kDim);
      for (std::size_t a = 0; a < kDim; ++a) {
        if (x[a].is_zero()) continue;
        for (std::size_t b = 0; b < kDim; ++b)
          if (!y[b].is_zero()) axpy(out, x[a] * y[b], t.real[a][b]);
      }
      return out;
    };
    t.cplx.assign(kDim, std::vector<Vec>(kDim));
    for (std::size_t a = 0; a < kDim; ++a)
      for (std::size_t b = 0; b < kDim; ++b)
        t.cplx[a][b] = t.c_from_r * bracket_real(t.r_from_c.column(a), t.r_from_c.column(b));

    t.J = Matrix(kDim, kDim);
    for (std::size_t a = 1; a < 9; a += 2) {
      t.J(a + 1, a) = 1;
      t.J(a, a + 1) = -1;
    }
    return t;
  }();
  return t;
}

}  // namespace

const std::array<int, kDim>& grades() {
  static const std::array<int, kDim> g = {-2, -1, -1, 0, 0, 0, 0, 1, 1, 2};
  return g;
}

std::size_t partner(std::size_t i) {
  if (i == 0 || i == 9) return i;
  return (i % 2 == 1) ? i + 1 : i - 1;
}

std::string label(std::size_t i, Basis b) {
  return b == Basis::Real ? kRealLabels.at(i) : kComplexLabels.at(i);
}

std::optional<std::size_t> find_label(std::string_view text, Basis b) {
  std::string key = strip(text);
  for (std::size_t i = 0; i < kDim; ++i)
    if (strip(label(i, b)) == key) return i;
  return std::nullopt;
}

Vec basis_vec(std::size_t i) { return unit_vec(kDim, i); }

const Matrix& form_matrix() {
  static const Matrix m = [] {
    Matrix f(5, 5);
    for (std::size_t r = 0; r < 5; ++r) f(r, 4 - r) = 1;
    return f;
  }();
  return m;
}

const std::vector<Matrix>& basis_matrices() { return tables().basis; }

bool in_algebra(const Matrix& m) {
  if (m.rows() != 5 || m.cols() != 5) return false;
  return (m.transpose() * form_matrix() + form_matrix() * m).is_zero();
}

std::optional<Vec> coords_of(const Matrix& m) {
  if (m.rows() != 5 || m.cols() != 5) throw DimensionError("expected a 5x5 matrix");
  AffineSolution s = solve(tables().coord_solver_rows, vectorize(m));
  if (!s.consistent) return std::nullopt;
  return s.particular;
}

Matrix to_matrix(const Vec& x) {
  if (x.size() != kDim) throw DimensionError("expected 10 coordinates");
  Matrix m(5, 5);
  for (std::size_t i = 0; i < kDim; ++i)
    if (!x[i].is_zero()) m = m + x[i] * tables().basis[i];
  return m;
}

const Vec& structure(std::size_t i, std::size_t j) { return tables().real.at(i).at(j); }
const Vec& structure_complex(std::size_t i, std::size_t j) { return tables().cplx.at(i).at(j); }

namespace {
Vec bracket_with(const std::vector<std::vector<Vec>>& table, const Vec& x, const Vec& y) {
  if (x.size() != kDim || y.size() != kDim) throw DimensionError("expected 10 coordinates");
  Vec out(kDim);
  for (std::size_t a = 0; a < kDim; ++a) {
    if (x[a].is_zero()) continue;
    for (std::size_t b = 0; b < kDim; ++b)
      if (!y[b].is_zero()) axpy(out, x[a] * y[b], table[a][b]);
  }
  return out;
}
}  // namespace

Vec bracket(const Vec& x, const Vec& y) { return bracket_with(tables().real, x, y); }
Vec bracket_complex(const Vec& x, const Vec& y) { return bracket_with(tables().cplx, x, y); }

Matrix ad(const Vec& x) {
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < kDim; ++j) cols.push_back(bracket(x, basis_vec(j)));
  return Matrix::from_columns(cols, kDim);
}

Matrix ad_complex(const Vec& x) {
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < kDim; ++j) cols.push_back(bracket_complex(x, basis_vec(j)));
  return Matrix::from_columns(cols, kDim);
}

const Matrix& complex_from_real() { return tables().c_from_r; }
const Matrix& real_from_complex() { return tables().r_from_c; }
Vec to_complex(const Vec& x) { return tables().c_from_r * x; }
Vec from_complex(const Vec& x) { return tables().r_from_c * x; }
bool is_real_element(const Vec& x) { return is_real(from_complex(x)); }

Vec conjugate_complex(const Vec& x) {
  Vec out(kDim);
  for (std::size_t i = 0; i < kDim; ++i) out[partner(i)] = x.at(i).conj();
  return out;
}

GradedDecomposition grade_decompose(const Vec& x) {
  GradedDecomposition d;
  for (int g = -2; g <= 2; ++g) d[g] = grade_component(x, g);
  return d;
}

Vec grade_component(const Vec& x, int g) {
  Vec out(kDim);
  for (std::size_t i = 0; i < kDim; ++i)
    if (grades()[i] == g) out[i] = x.at(i);
  return out;
}

Gaussian killing(const Vec& x, const Vec& y) {
  Matrix p = ad(x) * ad(y);
  Gaussian tr;
  for (std::size_t i = 0; i < kDim; ++i) tr += p(i, i);
  return tr;
}

const Matrix& killing_gram() {
  static const Matrix g = [] {
    Matrix m(kDim, kDim);
    for (std::size_t a = 0; a < kDim; ++a)
      for (std::size_t b = 0; b < kDim; ++b) m(a, b) = killing(basis_vec(a), basis_vec(b));
    return m;
  }();
  return g;
}

Vec apply_J(const Vec& x) {
  if (x.size() != kDim) throw DimensionError("expected 10 coordinates");
  if (!x[real::em2].is_zero() || !x[real::E2].is_zero())
    throw DomainError("J is defined on m^-1 + m^0 + h^0 + h^1 only");
  return tables().J * x;
}

const Matrix& J_matrix() { return tables().J; }

std::vector<Subspace> filtration_chain(FiltrationKind kind) {
  auto span_of = [](auto pred) {
    std::vector<Vec> vs;
    for (std::size_t i = 0; i < kDim; ++i)
      if (pred(i)) vs.push_back(basis_vec(i));
    return Subspace::span(kDim, vs);
  };
  std::vector<Subspace> chain;
  for (int j = -2; j <= 0; ++j) chain.push_back(span_of([&](std::size_t i) { return grades()[i] >= j; }));
  if (kind == FiltrationKind::FStar) chain.push_back(span_of([](std::size_t i) { return i >= 5; }));
  for (int j = 1; j <= 2; ++j) chain.push_back(span_of([&](std::size_t i) { return grades()[i] >= j; }));
  chain.push_back(Subspace(kDim));
  return chain;
}

std::string format(const Vec& x, Basis b) {
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    std::string term;
    if (x[i] == Gaussian(1)) {
      term = label(i, b);
    } else if (x[i] == Gaussian(-1)) {
      term = "-" + label(i, b);
    } else {
      term = x[i].pretty() + "*" + label(i, b);
    }
    if (out.empty()) {
      out = term;
    } else if (term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out.empty() ? "0" : out;
}

namespace {

// Splits "a + b - c" at top-level signs; signs stay attached to the term.
std::vector<std::string> split_terms(std::string_view text) {
  std::vector<std::string> terms;
  std::string cur;
  int depth = 0;
  char prev = 0;
  for (char c : text) {
    if (c == '(' || c == '{') ++depth;
    if (c == ')' || c == '}') --depth;
    bool sign = (c == '+' || c == '-') && depth == 0 && prev != 0 && prev != '^' && prev != '*' &&
                prev != '/' && prev != '(';
    if (sign) {
      terms.push_back(cur);
      cur.clear();
    }
    if (!std::isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
      prev = c;
    }
  }
  terms.push_back(cur);
  return terms;
}

}  // namespace

Vec parse_element(std::string_view text, Basis b) {
  Vec out(kDim);
  std::string s = strip(text);
  if (s == "0") return out;
  for (const std::string& term : split_terms(text)) {
    if (term.empty()) throw ParseError("empty term in: " + std::string(text));
    std::size_t pos = term.find_first_of("eE");
    if (pos == std::string::npos) throw ParseError("missing basis label in: " + term);
    std::string coef = term.substr(0, pos);
    while (!coef.empty() && coef.back() == '*') coef.pop_back();
    Gaussian c = coef.empty() || coef == "+" ? Gaussian(1) : coef == "-" ? Gaussian(-1) : Gaussian::parse(coef);
    auto idx = find_label(term.substr(pos), b);
    if (!idx) throw ParseError("unknown basis label: " + term.substr(pos));
    out[*idx] += c;
  }
  return out;
}

std::vector<TableCell> table_crosscheck() { return table_crosscheck(fixtures::bracket_table()); }

std::vector<TableCell> table_crosscheck(std::string_view fixture_text) {
  std::istringstream in{std::string(fixture_text)};
  std::string line;
  std::vector<std::string> columns;
  std::vector<TableCell> cells;
  auto split_bar = [](const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
      if (c == '|') {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(c);
      }
    }
    parts.push_back(cur);
    return parts;
  };
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::size_t colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("malformed table line: " + line);
    std::string head = line.substr(0, colon);
    std::vector<std::string> parts = split_bar(line.substr(colon + 1));
    if (head == "columns") {
      columns = parts;
      continue;
    }
    if (head.rfind("ad ", 0) != 0) throw ParseError("table row must start with 'ad ': " + line);
    if (parts.size() != columns.size()) throw ParseError("row width mismatch: " + line);
    std::string row_label = strip(head.substr(3));
    Vec row_vec;
    if (auto k = find_label(row_label, Basis::Complex)) {
      row_vec = basis_vec(*k);
    } else if (auto r = find_label(row_label, Basis::Real)) {
      row_vec = to_complex(basis_vec(*r));
    } else {
      throw ParseError("unknown row label: " + row_label);
    }
    for (std::size_t c = 0; c < columns.size(); ++c) {
      auto col = find_label(columns[c], Basis::Complex);
      if (!col) throw ParseError("unknown column label: " + columns[c]);
      TableCell cell;
      cell.row = row_label;
      cell.column = label(*col, Basis::Complex);
      if (auto k = find_label(row_label, Basis::Complex)) cell.row = label(*k, Basis::Complex);
      else cell.row = label(*find_label(row_label, Basis::Real), Basis::Real);
      cell.transcribed = parse_element(parts[c], Basis::Complex);
      cell.computed = bracket_complex(row_vec, basis_vec(*col));
      cell.match = cell.transcribed == cell.computed;
      if (!cell.match && !is_zero(cell.transcribed) && !is_zero(cell.computed)) {
        std::size_t p = 0;
        while (cell.transcribed[p].is_zero()) ++p;
        Gaussian f = cell.computed[p] / cell.transcribed[p];
        if (f * cell.transcribed == cell.computed) cell.factor = f;
      }
      cells.push_back(std::move(cell));
    }
  }
  return cells;
}

}  // namespace tanaka::so32
