#pragma once

#include "json.hpp"
#include <string>
#include <vector>

#include "gabidulin/erasure.hpp"

namespace gabidulin {

using Json = nlohmann::json;

/// Whether a field descriptor has base Q (otherwise F_p).
bool field_is_rational(const Json& field);

template <class S>
Json encode_scalar(const S& x);
template <class S>
S parse_scalar(const BaseField<S>& base, const Json& j);

/// Element of layer l: array of d_l elements of layer l-1; base scalars are strings.
template <class S>
Json encode_element(const Element<S>& x);
template <class S>
Element<S> parse_element(const Tower<S>& tower, int layer, const Json& j);

template <class S>
Json encode_field(const Tower<S>& tower);
template <class S>
typename Tower<S>::Ptr parse_field(const Json& j);

template <class S>
Json encode_code(const GabidulinCode<S>& code);
template <class S>
GabidulinCode<S> parse_code(const Json& j);

template <class S>
Json encode_elements(const std::vector<Element<S>>& v);
template <class S>
std::vector<Element<S>> parse_elements(const Tower<S>& tower, int layer, const Json& j);

/// Coefficients lowest degree first.
template <class S>
Json encode_poly(const SkewPoly<S>& a);
template <class S>
SkewPoly<S> parse_poly(const Automorphism<S>& theta, const Json& j);

template <class S>
Json encode_matrix(const Matrix<Element<S>>& m);
template <class S>
Matrix<Element<S>> parse_matrix(const Tower<S>& tower, int layer, const Json& j, std::size_t rows_if_empty = 0);

/// {"masked": [[scalar|null]], "S_r": [...], "S_c": [...]}; a missing cover is
/// computed from the mask.
template <class S>
Json encode_line_pattern(const LinePattern<S>& p);
template <class S>
LinePattern<S> parse_line_pattern(const Tower<S>& tower, const Json& j);

/// {"A_r_hat": m x s_r, "B_c_hat": s_c x n}
template <class S>
Json encode_network_pattern(const NetworkPattern<S>& p);
template <class S>
NetworkPattern<S> parse_network_pattern(const Tower<S>& tower, const Json& j);

Json read_json(const std::string& path);
void write_json(const std::string& path, const Json& j);

}  // namespace gabidulin
