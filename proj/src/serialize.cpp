#include "hopfpartial/serialize.hpp"

namespace hp {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::Parse, std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

Json scalar_to_json(const Scalar& s) {
  Json c = Json::array();
  for (const auto& q : s.coefficients()) c.push_back(rational_to_string(q));
  return {{"order", s.order()}, {"coeffs", c}};
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (j.is_string()) return Scalar(parse_rational(j.get<std::string>()));
  int order = field(j, "order").get<int>();
  if (order < 1) throw Error(ErrorKind::Parse, "scalar order must be positive");
  std::vector<Rational> c;
  for (const auto& x : field(j, "coeffs")) c.push_back(parse_rational(x.get<std::string>()));
  return Scalar::from_coeffs(order, c);
}

Json sparse_to_json(const SparseVec& v) {
  Json a = Json::array();
  for (const auto& e : v) a.push_back({e.index, scalar_to_json(e.value)});
  return a;
}

SparseVec sparse_from_json(const Json& j) {
  Accumulator acc;
  for (const auto& e : j) acc.add(e.at(0).get<int>(), scalar_from_json(e.at(1)));
  return acc.take();
}

Json matrix_to_json(const ExactMatrix& m) {
  Json entries = Json::array();
  for (int c = 0; c < m.cols(); ++c) {
    for (const auto& e : m.column(c)) entries.push_back({e.index, c, scalar_to_json(e.value)});
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

ExactMatrix matrix_from_json(const Json& j) {
  int rows = field(j, "rows").get<int>();
  int cols = field(j, "cols").get<int>();
  std::vector<Accumulator> acc(cols);
  for (const auto& e : field(j, "entries")) {
    int r = e.at(0).get<int>();
    int c = e.at(1).get<int>();
    if (r < 0 || r >= rows || c < 0 || c >= cols) throw Error(ErrorKind::Parse, "matrix entry out of range");
    acc[c].add(r, scalar_from_json(e.at(2)));
  }
  std::vector<SparseVec> columns(cols);
  for (int c = 0; c < cols; ++c) columns[c] = acc[c].take();
  return ExactMatrix::from_columns(rows, std::move(columns));
}

Json linmap_to_json(const LinMap& m) {
  Json j = matrix_to_json(m.matrix());
  j["source_dims"] = m.source_dims();
  return j;
}

LinMap linmap_from_json(const Json& j) {
  return LinMap(field(j, "source_dims").get<std::vector<int>>(), matrix_from_json(j));
}

Json algebra_table_to_json(const StructuredAlgebra& a) {
  Json rows = Json::array();
  for (int i = 0; i < a.dim(); ++i) {
    for (int k = 0; k < a.dim(); ++k) {
      rows.push_back({{"left", i}, {"right", k}, {"product", sparse_to_json(a.product(i, k))}});
    }
  }
  return {{"dim", a.dim()}, {"unit", sparse_to_json(a.unit())}, {"rows", rows}};
}

Json hopf_to_json(const HopfAlgebraData& h) {
  int n = h.dim();
  Json mult = Json::array();
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      for (const auto& e : h.algebra().product(i, k)) mult.push_back({i, k, e.index, scalar_to_json(e.value)});
    }
  }
  Json comult = Json::array();
  Json counit = Json::array();
  for (int i = 0; i < n; ++i) {
    for (const auto& t : h.coalgebra().delta(i)) comult.push_back({i, t.left, t.right, scalar_to_json(t.coef)});
    counit.push_back(scalar_to_json(h.coalgebra().epsilon(i)));
  }
  Json j;
  j["name"] = h.name();
  j["dim"] = n;
  if (!h.basis_order.empty()) j["basis_order"] = h.basis_order;
  if (!h.basis_labels.empty()) j["basis_labels"] = h.basis_labels;
  j["mult"] = mult;
  j["unit"] = sparse_to_json(h.unit());
  j["comult"] = comult;
  j["counit"] = counit;
  j["antipode"] = matrix_to_json(h.antipode());
  return j;
}

HopfAlgebraData hopf_from_json(const Json& j) {
  int n = field(j, "dim").get<int>();
  if (n < 1) throw Error(ErrorKind::Parse, "dimension must be positive");
  auto check = [n](int i) {
    if (i < 0 || i >= n) throw Error(ErrorKind::Parse, "basis index out of range");
    return i;
  };
  std::vector<Accumulator> acc(static_cast<std::size_t>(n) * n);
  for (const auto& e : field(j, "mult")) {
    int a = check(e.at(0).get<int>());
    int b = check(e.at(1).get<int>());
    acc[static_cast<std::size_t>(a) * n + b].add(check(e.at(2).get<int>()), scalar_from_json(e.at(3)));
  }
  std::vector<SparseVec> table(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) table[i] = acc[i].take();
  std::vector<std::vector<CoTerm>> comult(n);
  for (const auto& e : field(j, "comult")) {
    comult[check(e.at(0).get<int>())].push_back(
        {check(e.at(1).get<int>()), check(e.at(2).get<int>()), scalar_from_json(e.at(3))});
  }
  std::vector<Scalar> counit;
  for (const auto& e : field(j, "counit")) counit.push_back(scalar_from_json(e));
  if (static_cast<int>(counit.size()) != n) throw Error(ErrorKind::Parse, "counit length differs from dim");
  ExactMatrix s = matrix_from_json(field(j, "antipode"));
  std::string name = j.contains("name") ? j.at("name").get<std::string>() : "H";
  HopfAlgebraData h(name, std::make_shared<StructuredAlgebra>(n, std::move(table), sparse_from_json(field(j, "unit")), name),
                    std::make_shared<CoalgebraData>(std::move(comult), std::move(counit)), std::move(s));
  if (j.contains("basis_order")) h.basis_order = j.at("basis_order").get<std::string>();
  if (j.contains("basis_labels")) h.basis_labels = j.at("basis_labels").get<std::vector<std::string>>();
  return h;
}

}  // namespace hp
