#include "gabidulin/io.hpp"

#include <fstream>
#include <iostream>

namespace gabidulin {

bool field_is_rational(const Json& field) {
  const Json& b = field.at("base");
  if (b.is_string()) {
    if (b.get<std::string>() != "Q") throw std::invalid_argument("unknown base field " + b.get<std::string>());
    return true;
  }
  if (!b.contains("Fp")) throw std::invalid_argument("base must be \"Q\" or {\"Fp\": p}");
  return false;
}

template <>
Json encode_scalar(const Rational& x) {
  return to_string(x);
}
template <>
Json encode_scalar(const Fp& x) {
  return std::to_string(x.value());
}

template <class S>
S parse_scalar(const BaseField<S>& base, const Json& j) {
  if (j.is_string()) return base.parse(j.get<std::string>());
  if (j.is_number_integer()) return base.from_int(j.get<std::int64_t>());
  throw std::invalid_argument("scalar must be a string or an integer: " + j.dump());
}

template <class S>
Json encode_element(const Element<S>& x) {
  if (x.layer() == 0) return encode_scalar(x.flat()[0]);
  Json out = Json::array();
  for (const auto& c : x.coeffs()) out.push_back(encode_element(c));
  return out;
}

template <class S>
Element<S> parse_element(const Tower<S>& tower, int layer, const Json& j) {
  if (layer == 0) return tower.scalar(parse_scalar(tower.base(), j), 0);
  if (!j.is_array() || static_cast<int>(j.size()) != tower.degree(layer))
    throw std::invalid_argument("element of layer " + std::to_string(layer) + " needs " +
                                std::to_string(tower.degree(layer)) + " coefficients: " + j.dump());
  std::vector<Element<S>> c;
  for (const auto& x : j) c.push_back(parse_element(tower, layer - 1, x));
  return tower.from_coeffs(layer, c);
}

template <class S>
Json encode_field(const Tower<S>& tower) {
  Json out;
  if constexpr (std::is_same_v<S, Rational>)
    out["base"] = "Q";
  else
    out["base"] = Json{{"Fp", tower.base().p}};
  out["layers"] = Json::array();
  for (int l = 1; l <= tower.top(); ++l) {
    Json mod = Json::array();
    for (const auto& c : tower.modulus(l)) mod.push_back(encode_element(c));
    out["layers"].push_back(Json{{"modulus", mod}, {"var", tower.var(l)}});
  }
  return out;
}

template <class S>
typename Tower<S>::Ptr parse_field(const Json& j) {
  typename Tower<S>::Ptr t;
  if constexpr (std::is_same_v<S, Rational>) {
    if (!field_is_rational(j)) throw std::invalid_argument("expected a field over Q");
    t = Tower<S>::make(BaseField<S>{});
  } else {
    if (field_is_rational(j)) throw std::invalid_argument("expected a field over F_p");
    const std::uint32_t p = j.at("base").at("Fp").get<std::uint32_t>();
    if (!is_prime(p)) throw std::invalid_argument("Fp base needs a prime");
    t = Tower<S>::make(BaseField<S>{p});
  }
  for (const auto& layer : j.at("layers")) {
    std::vector<Element<S>> mod;
    for (const auto& c : layer.at("modulus")) mod.push_back(parse_element(*t, t->top(), c));
    t = t->extend(mod, layer.value("var", std::string()));
  }
  if (t->top() < 1) throw std::invalid_argument("field needs at least one layer");
  return t;
}

template <class S>
Json encode_elements(const std::vector<Element<S>>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(encode_element(x));
  return out;
}

template <class S>
std::vector<Element<S>> parse_elements(const Tower<S>& tower, int layer, const Json& j) {
  std::vector<Element<S>> out;
  for (const auto& x : j) out.push_back(parse_element(tower, layer, x));
  return out;
}

template <class S>
Json encode_code(const GabidulinCode<S>& code) {
  return Json{{"field", encode_field(code.tower())},
              {"theta_image", encode_element(code.theta().generator_image())},
              {"support", encode_elements(code.support())},
              {"k", code.k()}};
}

template <class S>
GabidulinCode<S> parse_code(const Json& j) {
  auto t = parse_field<S>(j.at("field"));
  auto th = Automorphism<S>::make(t, parse_element(*t, t->top(), j.at("theta_image")));
  return GabidulinCode<S>(th, parse_elements(*t, t->top(), j.at("support")), j.at("k").get<int>());
}

template <class S>
Json encode_poly(const SkewPoly<S>& a) {
  return encode_elements(a.coeffs());
}

template <class S>
SkewPoly<S> parse_poly(const Automorphism<S>& theta, const Json& j) {
  return SkewPoly<S>(&theta, parse_elements(theta.tower(), theta.top(), j));
}

template <class S>
Json encode_matrix(const Matrix<Element<S>>& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(encode_elements(m.row(i)));
  return out;
}

template <class S>
Matrix<Element<S>> parse_matrix(const Tower<S>& tower, int layer, const Json& j, std::size_t rows_if_empty) {
  if (!j.is_array()) throw std::invalid_argument("matrix must be an array of rows");
  const std::size_t rows = j.empty() ? rows_if_empty : j.size();
  const std::size_t cols = j.empty() ? 0 : j[0].size();
  Matrix<Element<S>> m(rows, cols, tower.zero(layer));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (j[i].size() != cols) throw std::invalid_argument("ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = parse_element(tower, layer, j[i][c]);
  }
  return m;
}

template <class S>
Json encode_line_pattern(const LinePattern<S>& p) {
  Json masked = Json::array();
  for (const auto& row : p.masked) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(e ? encode_element(*e) : Json(nullptr));
    masked.push_back(r);
  }
  return Json{{"masked", masked}, {"S_r", p.rows}, {"S_c", p.cols}};
}

template <class S>
LinePattern<S> parse_line_pattern(const Tower<S>& tower, const Json& j) {
  LinePattern<S> p;
  const int k_layer = tower.top() - 1;
  std::vector<std::vector<bool>> mask;
  for (const auto& row : j.at("masked")) {
    p.masked.emplace_back();
    mask.emplace_back();
    for (const auto& e : row) {
      mask.back().push_back(e.is_null());
      if (e.is_null())
        p.masked.back().push_back(std::nullopt);
      else
        p.masked.back().push_back(parse_element(tower, k_layer, e));
    }
  }
  if (j.contains("S_r") || j.contains("S_c")) {
    p.rows = j.value("S_r", std::vector<int>{});
    p.cols = j.value("S_c", std::vector<int>{});
  } else {
    LineCover c = term_rank_cover(mask);
    p.rows = c.rows;
    p.cols = c.cols;
  }
  return p;
}

template <class S>
Json encode_network_pattern(const NetworkPattern<S>& p) {
  return Json{{"A_r_hat", encode_matrix(p.A_r_hat)}, {"B_c_hat", encode_matrix(p.B_c_hat)}};
}

template <class S>
NetworkPattern<S> parse_network_pattern(const Tower<S>& tower, const Json& j) {
  const int k_layer = tower.top() - 1;
  const std::size_t m = tower.degree(tower.top());
  return {parse_matrix(tower, k_layer, j.at("A_r_hat"), m), parse_matrix(tower, k_layer, j.at("B_c_hat"))};
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

void write_json(const std::string& path, const Json& j) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << j.dump(2) << "\n";
}

#define GABIDULIN_INSTANTIATE(S)                                                                         \
  template S parse_scalar(const BaseField<S>&, const Json&);                                             \
  template Json encode_element(const Element<S>&);                                                       \
  template Element<S> parse_element(const Tower<S>&, int, const Json&);                                  \
  template Json encode_field(const Tower<S>&);                                                           \
  template typename Tower<S>::Ptr parse_field<S>(const Json&);                                           \
  template Json encode_code(const GabidulinCode<S>&);                                                    \
  template GabidulinCode<S> parse_code<S>(const Json&);                                                  \
  template Json encode_elements(const std::vector<Element<S>>&);                                         \
  template std::vector<Element<S>> parse_elements(const Tower<S>&, int, const Json&);                    \
  template Json encode_poly(const SkewPoly<S>&);                                                         \
  template SkewPoly<S> parse_poly(const Automorphism<S>&, const Json&);                                  \
  template Json encode_matrix(const Matrix<Element<S>>&);                                                \
  template Matrix<Element<S>> parse_matrix(const Tower<S>&, int, const Json&, std::size_t);              \
  template Json encode_line_pattern(const LinePattern<S>&);                                              \
  template LinePattern<S> parse_line_pattern(const Tower<S>&, const Json&);                              \
  template Json encode_network_pattern(const NetworkPattern<S>&);                                        \
  template NetworkPattern<S> parse_network_pattern(const Tower<S>&, const Json&);

GABIDULIN_INSTANTIATE(Rational)
GABIDULIN_INSTANTIATE(Fp)

}  // namespace gabidulin
