#pragma once

#include <string>
#include <vector>

#include "gabidulin/decode.hpp"
#include "gabidulin/erasure.hpp"

namespace gabidulin {

template <class S>
std::string format_elements(const std::vector<Element<S>>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].to_string();
  }
  return out + "]";
}

/// One line per polynomial and discrepancy vector; positions are 1-based.
template <class S>
void append_wb_trace(std::vector<std::string>& out, const WbTrace<S>& trace) {
  int round = 0;
  for (const auto& st : trace.states) {
    if (st.type == 0)
      out.push_back("init");
    else
      out.push_back("round " + std::to_string(++round) + " position " + std::to_string(st.position + 1) + " type " +
                    std::to_string(st.type));
    out.push_back("N0 = " + st.N0.to_string());
    out.push_back("W0 = " + st.W0.to_string());
    out.push_back("N1 = " + st.N1.to_string());
    out.push_back("W1 = " + st.W1.to_string());
    out.push_back("u0 = " + format_elements(st.u0));
    out.push_back("u1 = " + format_elements(st.u1));
  }
  if (trace.early_exit) out.push_back("early exit");
}

template <class S>
void append_erasure_trace(std::vector<std::string>& out, const ErasureTrace<S>& trace) {
  out.push_back("g_kept = " + format_elements(trace.support));
  out.push_back("y_kept = " + format_elements(trace.word));
  out.push_back("A_r = " + format_elements(trace.row_space));
  out.push_back("V_r = " + trace.V.to_string());
  out.push_back("z = " + format_elements(trace.inner));
}

/// Final reconstruction pair as held by the last recorded state.
template <class S>
void append_result(std::vector<std::string>& out, const WbTrace<S>& trace) {
  out.push_back("result");
  if (trace.states.empty()) return;
  out.push_back("N = " + trace.states.back().N1.to_string());
  out.push_back("W = " + trace.states.back().W1.to_string());
}

inline std::string join_lines(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

}  // namespace gabidulin
